#include "coxdec/coxmatrix.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coxdec {

int CoxMatrix::index_of(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

void CoxMatrix::validate() const {
  const int n = rank();
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("Coxeter matrix: row count != label count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw std::invalid_argument("Coxeter matrix: not square");
    if (m[i][i] != 1)
      throw std::invalid_argument("Coxeter matrix: diagonal entry != 1");
    for (int j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i])
        throw std::invalid_argument("Coxeter matrix: not symmetric");
      if (i != j && bond_finite(m[i][j]) && m[i][j] < 2)
        throw std::invalid_argument("Coxeter matrix: off-diagonal entry < 2");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        throw std::invalid_argument("Coxeter matrix: duplicate label " + labels[i]);
}

namespace {

std::vector<int> components_of(int n, const std::vector<std::vector<bool>>& adj) {
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (adj[v][u] && comp[u] < 0) {
          comp[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace

std::vector<int> CoxMatrix::odd_classes() const {
  const int n = rank();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      adj[i][j] = (i != j && bond_finite(m[i][j]) && m[i][j] % 2 == 1);
  return components_of(n, adj);
}

std::vector<int> CoxMatrix::graph_components() const {
  const int n = rank();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      adj[i][j] = (i != j && (!bond_finite(m[i][j]) || m[i][j] >= 3));
  return components_of(n, adj);
}

CoxMatrix CoxMatrix::submatrix(const std::vector<int>& keep) const {
  CoxMatrix sub;
  for (int i : keep) sub.labels.push_back(labels[i]);
  for (int i : keep) {
    std::vector<int> row;
    for (int j : keep) row.push_back(m[i][j]);
    sub.m.push_back(std::move(row));
  }
  return sub;
}

int CoxMatrix::conductor() const {
  long n = 2;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (bond_finite(m[i][j])) n = std::lcm(n, static_cast<long>(m[i][j]));
  return static_cast<int>(n);
}

CoxMatrix CoxMatrix::parse(std::istream& in) {
  CoxMatrix result;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (result.labels.empty()) {
      result.labels = toks;
      continue;
    }
    if (static_cast<int>(toks.size()) != result.rank())
      throw std::invalid_argument("matrix row has wrong width");
    std::vector<int> row;
    for (const auto& t : toks) {
      if (t == "inf" || t == "infinity" || t == "oo") {
        row.push_back(kInfiniteBond);
      } else {
        row.push_back(std::stoi(t));
      }
    }
    result.m.push_back(std::move(row));
    if (static_cast<int>(result.m.size()) == result.rank()) break;
  }
  if (result.labels.empty() || static_cast<int>(result.m.size()) != result.rank())
    throw std::invalid_argument("incomplete Coxeter matrix");
  result.validate();
  return result;
}

void CoxMatrix::print(std::ostream& out) const {
  for (int i = 0; i < rank(); ++i)
    out << labels[i] << (i + 1 < rank() ? ' ' : '\n');
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      if (bond_finite(m[i][j]))
        out << m[i][j];
      else
        out << "inf";
      out << (j + 1 < rank() ? ' ' : '\n');
    }
  }
}

}  // namespace coxdec
