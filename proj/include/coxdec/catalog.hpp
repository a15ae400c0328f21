#ifndef COXDEC_CATALOG_HPP
#define COXDEC_CATALOG_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxdec/coxmatrix.hpp"
#include "coxdec/decomp.hpp"

namespace coxdec {

// Built-in Coxeter matrices.  Finite: A_n, B_n (n>=2), D_n (n>=2), E6..E8,
// F4, G2, H3, H4, I2(m).  Affine: A~n, B~n (n>=3), C~n (n>=2), D~n (n>=2),
// G~2, F~4.  Names like "B3", "I2(6)", "C~2".
CoxMatrix builtin(const std::string& name);
bool is_affine_name(const std::string& name);

// per-component type labels; "unrecognized(<gram kind>)" when unknown
std::vector<std::string> recognize(const CoxMatrix& m);

// One golden row of the classification table.
struct TableRow {
  std::string name;               // e.g. "B3, I = {t}"
  std::string ambient;            // builtin name
  std::vector<std::string> I;     // generator labels
  std::string decomposition;      // e.g. "Z2 ltimes W(D3)"
  int note = 0;                   // degenerate note (1), (2), (3), or 0

  // expected tilde generators as words over the ambient labels
  std::vector<std::vector<std::string>> nodes;
  // expected bonds between nodes (i, j, m); absent pairs commute
  std::vector<std::array<int, 3>> edges;
  // expected action of each generator of I, as disjoint transpositions
  // of node indices; generators acting trivially may be omitted
  std::map<std::string, std::vector<std::array<int, 2>>> actions;
};

// parameter ranges of the table; the defaults are the desk scale
struct TableScale {
  int dihedral_m_max = 6;   // I2(2m) rows for m = 2..m_max
  int bn_max = 5;           // B_n rows for n = 2..bn_max
  int bn_affine_max = 4;    // B~n rows for n = 3..bn_affine_max
  int cn_affine_max = 4;    // C~n rows for n = 2..cn_affine_max
};

// every row of the classification table at the given scale
std::vector<TableRow> table_rows(const TableScale& scale = {});

struct RowReport {
  bool ok = true;
  std::string detail;  // first mismatch, or a summary line when ok
};

RowReport verify_row(const TableRow& row);

// the embedded golden data is overridable: rows can be read from structured
// text in the same style as the decomposition reports
std::vector<TableRow> parse_table_rows(std::istream& in);
void print_table_row(const TableRow& row, std::ostream& out);

}  // namespace coxdec

#endif
