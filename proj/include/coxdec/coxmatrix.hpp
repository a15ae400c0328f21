#ifndef COXDEC_COXMATRIX_HPP
#define COXDEC_COXMATRIX_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coxdec {

// Entry value 0 encodes an infinite bond.
constexpr int kInfiniteBond = 0;
inline bool bond_finite(int m) { return m != kInfiniteBond; }

struct CoxMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> m;

  int rank() const { return static_cast<int>(labels.size()); }
  int entry(int i, int j) const { return m[i][j]; }

  // index of a generator label, -1 if absent
  int index_of(const std::string& label) const;

  // symmetric, 1 on the diagonal, >= 2 (or infinite) off it
  void validate() const;

  // connected components of the graph with edges at odd finite bonds;
  // returns a component id per generator
  std::vector<int> odd_classes() const;

  // components of the full Coxeter graph (edges where m >= 3 or infinite)
  std::vector<int> graph_components() const;

  CoxMatrix submatrix(const std::vector<int>& keep) const;

  // least common multiple of the finite off-diagonal entries, at least 2
  int conductor() const;

  bool same_up_to_labels(const CoxMatrix& o) const { return m == o.m; }

  // plain-text grid: a label line, then rank lines of entries ("inf" allowed)
  static CoxMatrix parse(std::istream& in);
  void print(std::ostream& out) const;
};

}  // namespace coxdec

#endif
