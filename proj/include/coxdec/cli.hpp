#ifndef COXDEC_CLI_HPP
#define COXDEC_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coxdec {

// exit codes: 0 success, 1 verification failure, 2 input error,
// 3 inconclusive (budget exhausted)
enum ExitCode {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitInconclusive = 3,
};

struct JobSpec {
  enum Command { kDecompose, kVerify, kDescent, kExternal, kTable } command;
  std::string type;         // built-in label, or empty
  std::string matrix_file;  // plain-text Coxeter matrix, or empty
  std::vector<std::string> I;
  std::string ext_file;   // ExtData input for the external command
  std::string rows_file;  // golden-data override for the table command
  int bound = -1;         // W_I enumeration bound; -1 requires finite W_I
  int table_scale = 0;    // extends every table family bound by this much
  std::string dot_file;
  std::string out_file;
};

int run(const JobSpec& spec, std::ostream& out, std::ostream& err);
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxdec

#endif
