#include "coxdec/catalog.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coxdec/linalg.hpp"

namespace coxdec {

namespace {

CoxMatrix blank(std::vector<std::string> labels) {
  CoxMatrix m;
  m.labels = std::move(labels);
  const int n = m.rank();
  m.m.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m.m[i][i] = 1;
  return m;
}

void set_bond(CoxMatrix& m, int i, int j, int v) { m.m[i][j] = m.m[j][i] = v; }

std::vector<std::string> seq_labels(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

struct ParsedName {
  char family = 0;
  bool affine = false;
  int rank = 0;   // family rank parameter
  int param = 0;  // I2 bond
};

ParsedName parse_name(const std::string& name) {
  ParsedName p;
  if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
    p.family = 'I';
    std::string inside = name.substr(3, name.size() - 4);
    p.param = (inside == "inf") ? kInfiniteBond : std::stoi(inside);
    return p;
  }
  if (name.empty()) throw std::invalid_argument("empty type name");
  p.family = name[0];
  std::size_t pos = 1;
  if (pos < name.size() && name[pos] == '~') {
    p.affine = true;
    ++pos;
  }
  if (pos >= name.size()) throw std::invalid_argument("bad type name: " + name);
  p.rank = std::stoi(name.substr(pos));
  return p;
}

}  // namespace

bool is_affine_name(const std::string& name) {
  return parse_name(name).affine || name == "I2(inf)";
}

CoxMatrix builtin(const std::string& name) {
  ParsedName p = parse_name(name);
  auto bad = [&]() -> CoxMatrix {
    throw std::invalid_argument("unknown type or bad rank: " + name);
  };

  if (p.family == 'I') {
    if (bond_finite(p.param) && p.param < 2) return bad();
    CoxMatrix m = blank({"s", "t"});
    set_bond(m, 0, 1, p.param);
    return m;
  }

  if (!p.affine) {
    switch (p.family) {
      case 'A': {
        if (p.rank < 1) return bad();
        CoxMatrix m = blank(seq_labels("s", 1, p.rank));
        for (int i = 0; i + 1 < p.rank; ++i) set_bond(m, i, i + 1, 3);
        return m;
      }
      case 'B': {
        if (p.rank < 2) return bad();
        // t =4= s1 - s2 - ... - s_{n-1}
        std::vector<std::string> labels{"t"};
        for (const auto& l : seq_labels("s", 1, p.rank - 1)) labels.push_back(l);
        CoxMatrix m = blank(std::move(labels));
        set_bond(m, 0, 1, 4);
        for (int i = 1; i + 1 < p.rank; ++i) set_bond(m, i, i + 1, 3);
        return m;
      }
      case 'D': {
        if (p.rank < 2) return bad();
        CoxMatrix m = blank(seq_labels("s", 1, p.rank));
        // path s1 .. s_{n-2}, with s_{n-1} and s_n both joined to s_{n-2}
        for (int i = 0; i + 1 < p.rank - 2; ++i) set_bond(m, i, i + 1, 3);
        if (p.rank >= 3) {
          set_bond(m, p.rank - 3, p.rank - 2, 3);
          set_bond(m, p.rank - 3, p.rank - 1, 3);
        }
        return m;
      }
      case 'E': {
        if (p.rank < 6 || p.rank > 8) return bad();
        CoxMatrix m = blank(seq_labels("s", 1, p.rank));
        // chain s1-s3-s4-...-sn with s2 attached to s4 (Bourbaki numbering)
        set_bond(m, 0, 2, 3);
        for (int i = 2; i + 1 < p.rank; ++i) set_bond(m, i, i + 1, 3);
        set_bond(m, 1, 3, 3);
        return m;
      }
      case 'F': {
        if (p.rank != 4) return bad();
        CoxMatrix m = blank({"s2", "s1", "t1", "t2"});
        set_bond(m, 0, 1, 3);
        set_bond(m, 1, 2, 4);
        set_bond(m, 2, 3, 3);
        return m;
      }
      case 'G': {
        if (p.rank != 2) return bad();
        CoxMatrix m = blank({"s", "t"});
        set_bond(m, 0, 1, 6);
        return m;
      }
      case 'H': {
        if (p.rank != 3 && p.rank != 4) return bad();
        CoxMatrix m = blank(seq_labels("s", 1, p.rank));
        set_bond(m, 0, 1, 5);
        for (int i = 1; i + 1 < p.rank; ++i) set_bond(m, i, i + 1, 3);
        return m;
      }
      default:
        return bad();
    }
  }

  switch (p.family) {
    case 'A': {
      if (p.rank < 1) return bad();
      if (p.rank == 1) {
        CoxMatrix m = blank({"s0", "s1"});
        set_bond(m, 0, 1, kInfiniteBond);
        return m;
      }
      CoxMatrix m = blank(seq_labels("s", 0, p.rank));
      for (int i = 0; i < p.rank; ++i) set_bond(m, i, i + 1, 3);
      set_bond(m, 0, p.rank, 3);
      return m;
    }
    case 'B': {
      if (p.rank < 3) return bad();
      // t =4= s1 - ... - s_{n-2} with s_{n-1}, s_n forked at s_{n-2}
      std::vector<std::string> labels{"t"};
      for (const auto& l : seq_labels("s", 1, p.rank)) labels.push_back(l);
      CoxMatrix m = blank(std::move(labels));
      set_bond(m, 0, 1, 4);
      for (int i = 1; i + 1 <= p.rank - 2; ++i) set_bond(m, i, i + 1, 3);
      set_bond(m, p.rank - 2, p.rank - 1, 3);
      set_bond(m, p.rank - 2, p.rank, 3);
      return m;
    }
    case 'C': {
      if (p.rank < 2) return bad();
      // t =4= s1 - ... - s_{n-1} =4= t'
      std::vector<std::string> labels{"t"};
      for (const auto& l : seq_labels("s", 1, p.rank - 1)) labels.push_back(l);
      labels.push_back("t'");
      CoxMatrix m = blank(std::move(labels));
      set_bond(m, 0, 1, 4);
      for (int i = 1; i + 1 <= p.rank - 1; ++i) set_bond(m, i, i + 1, 3);
      set_bond(m, p.rank - 1, p.rank, 4);
      return m;
    }
    case 'D': {
      if (p.rank < 4) return bad();
      CoxMatrix m = blank(seq_labels("d", 0, p.rank));
      set_bond(m, 0, 2, 3);
      set_bond(m, 1, 2, 3);
      for (int i = 2; i + 1 <= p.rank - 2; ++i) set_bond(m, i, i + 1, 3);
      set_bond(m, p.rank - 2, p.rank - 1, 3);
      set_bond(m, p.rank - 2, p.rank, 3);
      return m;
    }
    case 'G': {
      if (p.rank != 2) return bad();
      CoxMatrix m = blank({"t", "s1", "s2"});
      set_bond(m, 0, 1, 6);
      set_bond(m, 1, 2, 3);
      return m;
    }
    case 'F': {
      if (p.rank != 4) return bad();
      CoxMatrix m = blank({"s2", "s1", "t1", "t2", "t3"});
      set_bond(m, 0, 1, 3);
      set_bond(m, 1, 2, 4);
      set_bond(m, 2, 3, 3);
      set_bond(m, 3, 4, 3);
      return m;
    }
    default:
      return bad();
  }
}

// ---------------------------------------------------------------------------
// recognition

namespace {

bool isomorphic(const CoxMatrix& a, const CoxMatrix& b) {
  const int n = a.rank();
  if (b.rank() != n) return false;
  // multisets of incident bonds must agree per vertex
  auto signature = [](const CoxMatrix& m, int v) {
    std::vector<int> sig;
    for (int u = 0; u < m.rank(); ++u)
      if (u != v) sig.push_back(m.m[v][u]);
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  std::vector<std::vector<int>> sa(n), sb(n);
  for (int v = 0; v < n; ++v) {
    sa[v] = signature(a, v);
    sb[v] = signature(b, v);
  }
  {
    auto ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return false;
  }
  std::vector<int> map_to(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int u = 0; u < n; ++u) {
      if (used[u] || sa[v] != sb[u]) continue;
      bool ok = true;
      for (int w = 0; w < v; ++w)
        if (a.m[v][w] != b.m[u][map_to[w]]) { ok = false; break; }
      if (!ok) continue;
      used[u] = true;
      map_to[v] = u;
      if (place(v + 1)) return true;
      used[u] = false;
      map_to[v] = -1;
    }
    return false;
  };
  return place(0);
}

std::string recognize_component(const CoxMatrix& c) {
  const int n = c.rank();
  if (n == 1) return "A1";
  if (n == 2) {
    int m = c.m[0][1];
    if (m == 3) return "A2";
    if (m == 4) return "B2";
    if (m == 6) return "G2";
    if (!bond_finite(m)) return "A~1";
    return "I2(" + std::to_string(m) + ")";
  }
  std::vector<std::string> candidates;
  candidates.push_back("A" + std::to_string(n));
  if (n >= 2) candidates.push_back("B" + std::to_string(n));
  if (n >= 4) candidates.push_back("D" + std::to_string(n));
  if (n >= 6 && n <= 8) candidates.push_back("E" + std::to_string(n));
  if (n == 4) candidates.push_back("F4");
  if (n == 3 || n == 4) candidates.push_back("H" + std::to_string(n));
  candidates.push_back("A~" + std::to_string(n - 1));
  if (n - 1 >= 3) candidates.push_back("B~" + std::to_string(n - 1));
  if (n - 1 >= 2) candidates.push_back("C~" + std::to_string(n - 1));
  if (n - 1 >= 4) candidates.push_back("D~" + std::to_string(n - 1));
  if (n == 3) candidates.push_back("G~2");
  if (n == 5) candidates.push_back("F~4");
  for (const auto& name : candidates)
    if (isomorphic(c, builtin(name))) return name;
  CycMat gram;
  auto field = CycField::make(c.conductor());
  for (int i = 0; i < n; ++i) {
    gram.emplace_back();
    for (int j = 0; j < n; ++j) {
      if (i == j)
        gram.back().push_back(field->one());
      else
        gram.back().push_back(-field->cos_pi_over(c.m[i][j]));
    }
  }
  return std::string("unrecognized(") + gram_kind_name(classify_gram(gram)) + ")";
}

}  // namespace

std::vector<std::string> recognize(const CoxMatrix& m) {
  auto comp = m.graph_components();
  int count = m.rank() == 0 ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::string> out;
  for (int c = 0; c < count; ++c) {
    std::vector<int> keep;
    for (int i = 0; i < m.rank(); ++i)
      if (comp[i] == c) keep.push_back(i);
    out.push_back(recognize_component(m.submatrix(keep)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// the classification table

namespace {

using Word = std::vector<std::string>;

Word wrap(const Word& inner, const std::string& outer) {
  Word w{outer};
  w.insert(w.end(), inner.begin(), inner.end());
  w.push_back(outer);
  return w;
}

// t_1 = t, t_{i+1} = s_i t_i s_i
std::vector<Word> conjugate_chain(const std::string& t, int n) {
  std::vector<Word> out{Word{t}};
  for (int i = 1; i < n; ++i)
    out.push_back(wrap(out.back(), "s" + std::to_string(i)));
  return out;
}

// t'_n given, t'_i = s_i t'_{i+1} s_i
std::vector<Word> conjugate_chain_down(Word t_prime_n, int n) {
  std::vector<Word> rev{std::move(t_prime_n)};
  for (int i = n - 1; i >= 1; --i)
    rev.push_back(wrap(rev.back(), "s" + std::to_string(i)));
  std::reverse(rev.begin(), rev.end());  // index i-1 holds t'_i
  return rev;
}

TableRow make_row(std::string name, std::string ambient, std::vector<std::string> I,
                  std::string decomposition, int note) {
  TableRow r;
  r.name = std::move(name);
  r.ambient = std::move(ambient);
  r.I = std::move(I);
  r.decomposition = std::move(decomposition);
  r.note = note;
  return r;
}

std::string join_labels(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

// n infinite-bond components t_i --oo-- t'_i with the evident action of the
// chain s_1 .. s_{n-1} on both rows of nodes
TableRow pair_row(int n, const std::string& ambient,
                  const std::vector<std::string>& I, const std::string& decomposition,
                  std::vector<Word> t_nodes, std::vector<Word> tp_nodes) {
  TableRow r = make_row(ambient + ", I = {" + join_labels(I) + "}", ambient, I,
                        decomposition, 0);
  for (auto& w : t_nodes) r.nodes.push_back(std::move(w));
  for (auto& w : tp_nodes) r.nodes.push_back(std::move(w));
  for (int i = 1; i <= n; ++i) r.edges.push_back({i - 1, n + i - 1, kInfiniteBond});
  for (int i = 1; i <= n - 1; ++i)
    r.actions["s" + std::to_string(i)] = {{i - 1, i}, {n + i - 1, n + i}};
  return r;
}

}  // namespace

std::vector<TableRow> table_rows(const TableScale& scale) {
  std::vector<TableRow> rows;

  // ---- I2(2m), both partitions
  for (int m = 2; m <= scale.dihedral_m_max; ++m) {
    std::string ambient = "I2(" + std::to_string(2 * m) + ")";
    std::string wt = "W(I2(" + std::to_string(m) + "))";
    {
      TableRow r = make_row(ambient + ", I = {s}", ambient, {"s"}, "Z2 ltimes " + wt, 0);
      r.nodes = {{"t"}, {"s", "t", "s"}};
      if (m >= 3) r.edges.push_back({0, 1, m});
      r.actions["s"] = {{0, 1}};
      rows.push_back(std::move(r));
    }
    {
      TableRow r = make_row(ambient + ", I = {t}", ambient, {"t"}, "Z2 ltimes " + wt, 0);
      r.nodes = {{"s"}, {"t", "s", "t"}};
      if (m >= 3) r.edges.push_back({0, 1, m});
      r.actions["t"] = {{0, 1}};
      rows.push_back(std::move(r));
    }
  }

  // ---- B_n, both partitions
  for (int n = 2; n <= scale.bn_max; ++n) {
    std::string ambient = "B" + std::to_string(n);
    {
      TableRow r = make_row(ambient + ", I = {t}", ambient, {"t"},
                            "Z2 ltimes W(D" + std::to_string(n) + ")", 0);
      r.nodes = {{"s1"}, {"t", "s1", "t"}};
      for (int j = 2; j <= n - 1; ++j) r.nodes.push_back({"s" + std::to_string(j)});
      if (n >= 3) {
        r.edges.push_back({0, 2, 3});
        r.edges.push_back({1, 2, 3});
        for (int j = 2; j + 1 <= n - 1; ++j) r.edges.push_back({j, j + 1, 3});
      }
      r.actions["t"] = {{0, 1}};
      rows.push_back(std::move(r));
    }
    {
      std::vector<std::string> I = seq_labels("s", 1, n - 1);
      TableRow r = make_row(ambient + ", I = {" + join_labels(I) + "}", ambient, I,
                            "S" + std::to_string(n) + " ltimes Z2^" + std::to_string(n),
                            0);
      r.nodes = conjugate_chain("t", n);
      for (int i = 1; i <= n - 1; ++i)
        r.actions["s" + std::to_string(i)] = {{i - 1, i}};
      rows.push_back(std::move(r));
    }
  }

  // ---- F4
  {
    TableRow r = make_row("F4, I = {s1,s2}", "F4", {"s1", "s2"}, "S3 ltimes W(D4)", 0);
    r.nodes = {{"t2"}, {"t1"}, {"s1", "t1", "s1"}, {"s2", "s1", "t1", "s1", "s2"}};
    r.edges = {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}};
    r.actions["s1"] = {{1, 2}};
    r.actions["s2"] = {{2, 3}};
    rows.push_back(std::move(r));
  }

  // ---- G~2, both partitions
  {
    TableRow r = make_row("G~2, I = {t}", "G~2", {"t"}, "Z2 ltimes W(A~2)", 0);
    r.nodes = {{"s1"}, {"t", "s1", "t"}, {"s2"}};
    r.edges = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    r.actions["t"] = {{0, 1}};
    rows.push_back(std::move(r));
  }
  {
    TableRow r = make_row("G~2, I = {s1,s2}", "G~2", {"s1", "s2"},
                          "S3 ltimes W(A~2)", 0);
    r.nodes = {{"t"}, {"s1", "t", "s1"}, {"s2", "s1", "t", "s1", "s2"}};
    r.edges = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    r.actions["s1"] = {{0, 1}};
    r.actions["s2"] = {{1, 2}};
    rows.push_back(std::move(r));
  }

  // ---- F~4, both partitions
  {
    TableRow r = make_row("F~4, I = {s1,s2}", "F~4", {"s1", "s2"},
                          "S3 ltimes W(D~4)", 0);
    r.nodes = {{"t1"},
               {"s1", "t1", "s1"},
               {"s2", "s1", "t1", "s1", "s2"},
               {"t2"},
               {"t3"}};
    r.edges = {{3, 0, 3}, {3, 1, 3}, {3, 2, 3}, {3, 4, 3}};
    r.actions["s1"] = {{0, 1}};
    r.actions["s2"] = {{1, 2}};
    rows.push_back(std::move(r));
  }
  {
    TableRow r = make_row("F~4, I = {t1,t2,t3}", "F~4", {"t1", "t2", "t3"},
                          "S4 ltimes W(D~4)", 0);
    r.nodes = {{"s2"},
               {"s1"},
               {"t1", "s1", "t1"},
               {"t2", "t1", "s1", "t1", "t2"},
               {"t3", "t2", "t1", "s1", "t1", "t2", "t3"}};
    r.edges = {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}};
    r.actions["t1"] = {{1, 2}};
    r.actions["t2"] = {{2, 3}};
    r.actions["t3"] = {{3, 4}};
    rows.push_back(std::move(r));
  }

  // ---- B~n, both partitions
  for (int n = 3; n <= scale.bn_affine_max; ++n) {
    std::string ambient = "B~" + std::to_string(n);
    {
      TableRow r = make_row(ambient + ", I = {t}", ambient, {"t"},
                            "Z2 ltimes W(D~" + std::to_string(n) + ")",
                            n == 3 ? 1 : 0);
      r.nodes = {{"s1"}, {"t", "s1", "t"}};
      for (int j = 2; j <= n; ++j) r.nodes.push_back({"s" + std::to_string(j)});
      if (n == 3) {
        // note (1): the diagram degenerates to a square
        r.edges = {{0, 2, 3}, {0, 3, 3}, {1, 2, 3}, {1, 3, 3}};
      } else {
        r.edges.push_back({0, 2, 3});
        r.edges.push_back({1, 2, 3});
        for (int j = 2; j + 1 <= n - 2; ++j) r.edges.push_back({j, j + 1, 3});
        r.edges.push_back({n - 2, n - 1, 3});
        r.edges.push_back({n - 2, n, 3});
      }
      r.actions["t"] = {{0, 1}};
      rows.push_back(std::move(r));
    }
    {
      std::vector<std::string> I = seq_labels("s", 1, n);
      auto t_nodes = conjugate_chain("t", n);
      auto tp_nodes = conjugate_chain_down(
          wrap(t_nodes[n - 2], "s" + std::to_string(n)), n);
      TableRow r = pair_row(n, ambient, I,
                            "W(D" + std::to_string(n) + ") ltimes W(A~1)^" +
                                std::to_string(n),
                            std::move(t_nodes), std::move(tp_nodes));
      // action (b): s_n swaps (t_{n-1}, t'_n) and (t'_{n-1}, t_n)
      r.actions["s" + std::to_string(n)] = {{n - 2, 2 * n - 1}, {2 * n - 2, n - 1}};
      rows.push_back(std::move(r));
    }
  }

  // ---- C~n, all four partitions
  for (int n = 2; n <= scale.cn_affine_max; ++n) {
    std::string ambient = "C~" + std::to_string(n);
    {
      TableRow r = make_row(ambient + ", I = {t}", ambient, {"t"},
                            "Z2 ltimes W(B~" + std::to_string(n) + ")",
                            n == 2 ? 2 : 0);
      r.nodes = {{"s1"}, {"t", "s1", "t"}};
      for (int j = 2; j <= n - 1; ++j) r.nodes.push_back({"s" + std::to_string(j)});
      r.nodes.push_back({"t'"});
      if (n == 2) {
        // note (2): a path with two 4-bonds through t'
        r.edges = {{0, 2, 4}, {1, 2, 4}};
      } else {
        r.edges.push_back({0, 2, 3});
        r.edges.push_back({1, 2, 3});
        for (int j = 2; j + 1 <= n - 1; ++j) r.edges.push_back({j, j + 1, 3});
        r.edges.push_back({n - 1, n, 4});
      }
      r.actions["t"] = {{0, 1}};
      rows.push_back(std::move(r));
    }
    {
      std::vector<std::string> I = seq_labels("s", 1, n - 1);
      auto t_nodes = conjugate_chain("t", n);
      auto tp_nodes = conjugate_chain_down(Word{"t'"}, n);
      rows.push_back(pair_row(n, ambient, I,
                              "S" + std::to_string(n) + " ltimes W(A~1)^" +
                                  std::to_string(n),
                              std::move(t_nodes), std::move(tp_nodes)));
    }
    {
      std::vector<std::string> I = seq_labels("s", 1, n - 1);
      I.push_back("t'");
      auto t_nodes = conjugate_chain("t", n);
      auto tp_nodes = conjugate_chain_down(wrap(t_nodes[n - 1], "t'"), n);
      TableRow r = pair_row(n, ambient, I,
                            "W(B" + std::to_string(n) + ") ltimes W(A~1)^" +
                                std::to_string(n),
                            std::move(t_nodes), std::move(tp_nodes));
      // action (d): t' swaps (t_n, t'_n)
      r.actions["t'"] = {{n - 1, 2 * n - 1}};
      rows.push_back(std::move(r));
    }
    {
      TableRow r = make_row(ambient + ", I = {t,t'}", ambient, {"t", "t'"},
                            "S2xS2 ltimes W(D~" + std::to_string(n) + ")",
                            n <= 3 ? 3 : 0);
      if (n == 2) {
        r.nodes = {{"s1"},
                   {"t", "s1", "t"},
                   {"t'", "s1", "t'"},
                   {"t", "t'", "s1", "t'", "t"}};
        r.edges = {{1, 2, kInfiniteBond}, {0, 3, kInfiniteBond}};
        r.actions["t"] = {{0, 1}, {2, 3}};
        r.actions["t'"] = {{0, 2}, {1, 3}};
      } else if (n == 3) {
        r.nodes = {{"s1"}, {"t", "s1", "t"}, {"s2"}, {"t'", "s2", "t'"}};
        r.edges = {{0, 2, 3}, {0, 3, 3}, {1, 2, 3}, {1, 3, 3}};
        r.actions["t"] = {{0, 1}};
        r.actions["t'"] = {{2, 3}};
      } else {
        r.nodes = {{"s1"}, {"t", "s1", "t"}};
        for (int j = 2; j <= n - 1; ++j) r.nodes.push_back({"s" + std::to_string(j)});
        r.nodes.push_back({"t'", "s" + std::to_string(n - 1), "t'"});
        r.edges.push_back({0, 2, 3});
        r.edges.push_back({1, 2, 3});
        for (int j = 2; j + 1 <= n - 1; ++j) r.edges.push_back({j, j + 1, 3});
        r.edges.push_back({n - 2, n, 3});
        r.actions["t"] = {{0, 1}};
        r.actions["t'"] = {{n - 1, n}};
      }
      rows.push_back(std::move(r));
    }
  }

  return rows;
}

// ---------------------------------------------------------------------------
// golden-data override format, in the style of the decomposition reports

void print_table_row(const TableRow& row, std::ostream& out) {
  out << "row: " << row.name << "\n";
  out << "ambient: " << row.ambient << "\n";
  out << "I:";
  for (const auto& l : row.I) out << " " << l;
  out << "\n";
  out << "decomposition: " << row.decomposition << "\n";
  out << "note: " << row.note << "\n";
  out << "nodes:\n";
  for (const auto& w : row.nodes) {
    out << "  ";
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "." : "") << w[i];
    out << "\n";
  }
  const int k = static_cast<int>(row.nodes.size());
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 2));
  for (int i = 0; i < k; ++i) m[i][i] = 1;
  for (const auto& e : row.edges) m[e[0]][e[1]] = m[e[1]][e[0]] = e[2];
  out << "tilde matrix:\n";
  for (int i = 0; i < k; ++i) {
    out << " ";
    for (int j = 0; j < k; ++j) {
      out << " ";
      if (bond_finite(m[i][j]))
        out << m[i][j];
      else
        out << "inf";
    }
    out << "\n";
  }
  auto node_name = [&](int i) {
    std::string s;
    for (std::size_t j = 0; j < row.nodes[i].size(); ++j)
      s += (j ? "." : "") + row.nodes[i][j];
    return s;
  };
  for (const auto& [gen, swaps] : row.actions) {
    out << "action " << gen << ":";
    if (swaps.empty()) out << " id";
    for (const auto& sw : swaps)
      out << " (" << node_name(sw[0]) << " " << node_name(sw[1]) << ")";
    out << "\n";
  }
  out << "end\n";
}

namespace {

Word split_word(const std::string& dotted) {
  Word w;
  std::string cur;
  for (char c : dotted) {
    if (c == '.') {
      w.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) w.push_back(cur);
  return w;
}

}  // namespace

std::vector<TableRow> parse_table_rows(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  TableRow row;
  std::vector<std::vector<int>> grid;
  bool active = false;
  enum { kNone, kNodes, kMatrix } section = kNone;
  auto node_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < row.nodes.size(); ++i) {
      std::string s;
      for (std::size_t j = 0; j < row.nodes[i].size(); ++j)
        s += (j ? "." : "") + row.nodes[i][j];
      if (s == name) return static_cast<int>(i);
    }
    throw std::invalid_argument("table row: unknown node " + name);
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "row:") {
      if (active) throw std::invalid_argument("table row: missing 'end'");
      row = TableRow{};
      grid.clear();
      active = true;
      section = kNone;
      std::getline(ls, row.name);
      if (!row.name.empty() && row.name.front() == ' ') row.name.erase(0, 1);
      continue;
    }
    if (!active) continue;
    if (head == "end") {
      const int k = static_cast<int>(row.nodes.size());
      if (!grid.empty()) {
        if (static_cast<int>(grid.size()) != k)
          throw std::invalid_argument("table row: matrix height mismatch");
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            if (grid[i][j] != grid[j][i])
              throw std::invalid_argument("table row: matrix is not symmetric");
            if (i < j && (grid[i][j] >= 3 || !bond_finite(grid[i][j])))
              row.edges.push_back({i, j, grid[i][j]});
          }
      }
      rows.push_back(std::move(row));
      active = false;
    } else if (head == "ambient:") {
      ls >> row.ambient;
      section = kNone;
    } else if (head == "I:") {
      std::string tok;
      while (ls >> tok) row.I.push_back(tok);
      section = kNone;
    } else if (head == "decomposition:") {
      std::getline(ls, row.decomposition);
      if (!row.decomposition.empty() && row.decomposition.front() == ' ')
        row.decomposition.erase(0, 1);
      section = kNone;
    } else if (head == "note:") {
      ls >> row.note;
      section = kNone;
    } else if (head == "nodes:") {
      section = kNodes;
    } else if (head == "tilde" && line.find("tilde matrix:") != std::string::npos) {
      section = kMatrix;
    } else if (head == "action") {
      std::string gen;
      ls >> gen;
      if (!gen.empty() && gen.back() == ':') gen.pop_back();
      std::string rest;
      std::getline(ls, rest);
      std::vector<std::array<int, 2>> swaps;
      std::string cur;
      std::vector<int> cycle;
      for (char c : rest) {
        if (c == '(') {
          cycle.clear();
          cur.clear();
        } else if (c == ' ' || c == ')') {
          if (!cur.empty() && cur != "id") cycle.push_back(node_index(cur));
          cur.clear();
          if (c == ')') {
            if (cycle.size() != 2)
              throw std::invalid_argument("table row: actions must be transpositions");
            swaps.push_back({cycle[0], cycle[1]});
          }
        } else {
          cur += c;
        }
      }
      row.actions[gen] = std::move(swaps);
      section = kNone;
    } else if (section == kNodes) {
      row.nodes.push_back(split_word(head));
    } else if (section == kMatrix) {
      std::vector<std::string> toks{head};
      std::string tok;
      while (ls >> tok) toks.push_back(tok);
      if (toks.size() != row.nodes.size())
        throw std::invalid_argument("table row: matrix width mismatch");
      std::vector<int> r;
      for (const auto& x : toks)
        r.push_back(x == "inf" ? kInfiniteBond : std::stoi(x));
      grid.push_back(std::move(r));
    }
  }
  if (active) throw std::invalid_argument("table row: missing trailing 'end'");
  return rows;
}

// ---------------------------------------------------------------------------
// row verification

RowReport verify_row(const TableRow& row) {
  auto fail = [&](const std::string& what) {
    return RowReport{false, row.name + ": " + what};
  };
  CoxMatrix ambient = builtin(row.ambient);
  ContextPtr ctx = CoxContext::make(ambient);
  std::vector<int> I;
  for (const auto& label : row.I) {
    int idx = ambient.index_of(label);
    if (idx < 0) return fail("unknown generator label " + label);
    I.push_back(idx);
  }
  Decomposition dec(ctx, I);

  // expected nodes must match the computed generators bijectively
  const int k = static_cast<int>(row.nodes.size());
  if (dec.gen_count() != k)
    return fail("expected " + std::to_string(k) + " generators, got " +
                std::to_string(dec.gen_count()));
  std::vector<int> match(k, -1);  // expected index -> computed index
  std::vector<bool> hit(k, false);
  for (int a = 0; a < k; ++a) {
    std::vector<int> word;
    for (const auto& label : row.nodes[a]) {
      int idx = ambient.index_of(label);
      if (idx < 0) return fail("bad label in node word: " + label);
      word.push_back(idx);
    }
    Elem e = ctx->element_from_word(word);
    int g = dec.find_gen(e);
    if (g < 0) return fail("expected node " + e.str() + " is not a generator");
    if (hit[g]) return fail("two expected nodes match one generator");
    hit[g] = true;
    match[a] = g;
  }

  // expected bond matrix
  std::vector<std::vector<int>> expected(k, std::vector<int>(k, 2));
  for (int a = 0; a < k; ++a) expected[a][a] = 1;
  for (const auto& e : row.edges) expected[e[0]][e[1]] = expected[e[1]][e[0]] = e[2];

  const CoxMatrix& tm = dec.tilde_matrix();
  CoxMatrix tm_roots = dec.tilde_matrix_via_roots();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int got = tm.m[match[a]][match[b]];
      if (got != expected[a][b])
        return fail("bond (" + tm.labels[match[a]] + ", " + tm.labels[match[b]] +
                    ") = " + std::to_string(got) + ", expected " +
                    std::to_string(expected[a][b]));
      if (tm_roots.m[match[a]][match[b]] != got)
        return fail("root-criterion bond disagrees at (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
    }

  // direct order computation agrees entrywise
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const Elem p = dec.tilde_gens()[a].elem * dec.tilde_gens()[b].elem;
      int m = tm.m[a][b];
      int limit = bond_finite(m) ? m : 12;
      Elem power = p;
      int first_trivial = -1;
      for (int e = 1; e <= limit; ++e) {
        if (power.is_identity()) { first_trivial = e; break; }
        if (e < limit) power = power * p;
      }
      if (bond_finite(m)) {
        if (first_trivial != m)
          return fail("direct order of pair (" + std::to_string(a) + "," +
                      std::to_string(b) + ") is not the matrix entry");
      } else if (first_trivial != -1) {
        return fail("infinite bond has a finite direct order");
      }
    }
  }

  // actions
  for (int s : I) {
    std::vector<int> perm = dec.action_of(s);
    std::vector<int> expected_perm(k);
    std::iota(expected_perm.begin(), expected_perm.end(), 0);
    auto it = row.actions.find(ambient.labels[s]);
    if (it != row.actions.end())
      for (const auto& swap : it->second)
        std::swap(expected_perm[swap[0]], expected_perm[swap[1]]);
    for (int a = 0; a < k; ++a)
      if (perm[match[a]] != match[expected_perm[a]])
        return fail("action of " + ambient.labels[s] + " differs at node " +
                    std::to_string(a));
  }

  // components (internal consistency checks run inside)
  ComponentInfo comps = dec.components();
  {
    // expected component partition from the expected edges
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& e : row.edges) parent[find(e[0])] = find(e[1]);
    int expected_count = 0;
    for (int a = 0; a < k; ++a)
      if (find(a) == a) ++expected_count;
    if (comps.count != expected_count)
      return fail("component count " + std::to_string(comps.count) + ", expected " +
                  std::to_string(expected_count));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if ((find(a) == find(b)) !=
            (comps.component_of[match[a]] == comps.component_of[match[b]]))
          return fail("component partition differs from the expected diagram");
  }

  if (!is_affine_name(row.ambient)) {
    // finite irreducible with J nonempty: |tilde J| = |S|, and the roots of
    // the generators are linearly independent
    if (dec.gen_count() != ambient.rank())
      return fail("|tilde J| != |S| on a finite row");
    CycMat root_rows;
    for (const auto& g : dec.tilde_gens()) root_rows.push_back(g.root);
    if (rank_of(root_rows) != dec.gen_count())
      return fail("generator roots are linearly dependent on a finite row");
  } else {
    // affine ambient: every component of the tilde diagram is affine
    for (const auto& members : comps.members()) {
      CycMat gram;
      const auto& field = dec.tilde_context()->field();
      for (int a : members) {
        gram.emplace_back();
        for (int b : members) {
          if (a == b)
            gram.back().push_back(field->one());
          else
            gram.back().push_back(-field->cos_pi_over(tm.m[a][b]));
        }
      }
      if (classify_gram(gram) != GramKind::kAffine)
        return fail("an affine row has a non-affine component");
    }
  }

  std::ostringstream ok;
  ok << row.name << ": " << dec.gen_count() << " generators, "
     << comps.count << " component(s)";
  return RowReport{true, ok.str()};
}

}  // namespace coxdec
