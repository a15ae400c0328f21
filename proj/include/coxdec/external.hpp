#ifndef COXDEC_EXTERNAL_HPP
#define COXDEC_EXTERNAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "coxdec/coxmatrix.hpp"
#include "coxdec/decomp.hpp"

namespace coxdec {

using Perm = std::vector<int>;

// Input data for the external semidirect product test: two Coxeter systems,
// the action of the first on the diagram of the second, and a choice of
// orbit representatives.
struct ExtData {
  CoxMatrix mI;             // Coxeter matrix of (W', I)
  CoxMatrix mTilde;         // Coxeter matrix of (Wtilde, Jtilde)
  std::vector<Perm> theta;  // per generator of mI, a permutation of mTilde
  std::vector<int> J;       // node indices of mTilde, one per W'-orbit

  static ExtData parse(std::istream& in);
  void print(std::ostream& out) const;
};

struct ExtResult {
  enum Status { kAccepted, kViolation, kInconclusive } status = kAccepted;
  CoxMatrix matrix;  // Coxeter matrix of (W, I u J) when accepted
  std::string detail;
};

// Conditions (1) and (2) for Wtilde x| W' to be a Coxeter group on I u J.
ExtResult check_external(const ExtData& data,
                         int order_bound = CoxContext::kDefaultOrderBound);

// the data of an internal decomposition, for the round trip
ExtData export_ext_data(const Decomposition& dec);

struct ConstructResult {
  enum Status { kOk, kViolation, kInconclusive } status = kOk;
  std::vector<RootVec> pi;  // the simple system Delta u (PiTilde cap -C)
  std::string detail;
};

// geometric converse: glue a based root system for W' and a W'-stable
// simple system PiTilde into one based root system
ConstructResult construct_from_roots(const ContextPtr& ambient,
                                     const std::vector<RootVec>& delta,
                                     const std::vector<RootVec>& pi_tilde,
                                     int chamber_budget = 200);

}  // namespace coxdec

#endif
