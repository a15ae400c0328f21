#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "coxdec/catalog.hpp"
#include "coxdec/decomp.hpp"
#include "coxdec/linalg.hpp"

namespace coxdec {

namespace {

std::string root_str(const RootVec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << "]";
  return os.str();
}

}  // namespace

DecompReport build_report(const Decomposition& dec, const std::string& ambient_name) {
  DecompReport rep;
  rep.ambient_name = ambient_name;
  for (int s : dec.I()) rep.I_labels.push_back(dec.context()->matrix().labels[s]);
  rep.partial = dec.partial();
  for (const auto& g : dec.tilde_gens()) {
    rep.gen_words.push_back(g.elem.str());
    rep.gen_nu.push_back(dec.context()->matrix().labels[g.t]);
    rep.gen_roots.push_back(root_str(g.root));
  }
  rep.tilde = dec.tilde_matrix();
  // a truncated generator list carries no meaningful action permutations
  if (!dec.partial()) {
    for (int s : dec.I()) {
      std::vector<int> perm = dec.action_of(s);
      rep.actions.emplace_back(dec.context()->matrix().labels[s],
                               cycle_notation(perm, rep.gen_words));
      rep.action_perms.push_back(std::move(perm));
    }
  }
  ComponentInfo comps = dec.components();
  rep.component_members = comps.members();
  for (const auto& members : rep.component_members) {
    std::vector<int> keep(members.begin(), members.end());
    CoxMatrix sub = rep.tilde.submatrix(keep);
    auto types = recognize(sub);
    rep.component_types.push_back(types.size() == 1 ? types[0] : "mixed");
    // Gram classification of the component in its standard form
    auto field = CycField::make(sub.conductor());
    CycMat gram;
    for (int i = 0; i < sub.rank(); ++i) {
      gram.emplace_back();
      for (int j = 0; j < sub.rank(); ++j)
        gram.back().push_back(i == j ? field->one() : -field->cos_pi_over(sub.m[i][j]));
    }
    rep.component_gram.push_back(gram_kind_name(classify_gram(gram)));
  }
  return rep;
}

std::string render_report(const DecompReport& rep) {
  std::ostringstream os;
  os << "ambient: " << rep.ambient_name << "\n";
  os << "I:";
  for (const auto& l : rep.I_labels) os << " " << l;
  os << "\n";
  if (rep.partial) os << "partial: true (W_I explored up to a bound)\n";
  os << "generators: " << rep.gen_words.size() << "\n";
  for (std::size_t i = 0; i < rep.gen_words.size(); ++i) {
    os << "  gen " << i << ": word=" << rep.gen_words[i] << " nu=" << rep.gen_nu[i]
       << " root=" << rep.gen_roots[i] << "\n";
  }
  os << "tilde matrix:\n";
  for (int i = 0; i < rep.tilde.rank(); ++i) {
    os << " ";
    for (int j = 0; j < rep.tilde.rank(); ++j) {
      os << " ";
      if (bond_finite(rep.tilde.m[i][j]))
        os << rep.tilde.m[i][j];
      else
        os << "inf";
    }
    os << "\n";
  }
  for (const auto& [label, cycles] : rep.actions)
    os << "action " << label << ": " << cycles << "\n";
  for (std::size_t c = 0; c < rep.component_members.size(); ++c) {
    os << "component " << c << ": {";
    for (std::size_t i = 0; i < rep.component_members[c].size(); ++i) {
      if (i) os << ", ";
      os << rep.component_members[c][i];
    }
    os << "} type=" << rep.component_types[c] << " gram=" << rep.component_gram[c]
       << "\n";
  }
  return os.str();
}

std::string render_dot(const DecompReport& rep) {
  // orbit coloring: nodes in one W_I-orbit share a fill color
  const int k = static_cast<int>(rep.gen_words.size());
  std::vector<int> orbit(k);
  std::iota(orbit.begin(), orbit.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return orbit[x] == x ? x : orbit[x] = find(orbit[x]);
  };
  for (const auto& perm : rep.action_perms)
    for (int i = 0; i < k; ++i)
      if (perm[i] != i) orbit[find(i)] = find(perm[i]);
  static const char* kColors[] = {"lightblue",  "lightsalmon", "palegreen",
                                  "khaki",      "plum",        "lightgray",
                                  "lightcyan",  "wheat",       "mistyrose",
                                  "honeydew"};
  std::vector<int> color_of(k, -1);
  int next_color = 0;
  std::ostringstream os;
  os << "graph tilde {\n  node [shape=ellipse, style=filled];\n";
  for (int i = 0; i < k; ++i) {
    int root = find(i);
    if (color_of[root] < 0) color_of[root] = next_color++ % 10;
    os << "  n" << i << " [label=\"" << rep.gen_words[i] << "\", fillcolor=\""
       << kColors[color_of[root]] << "\"];\n";
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int m = rep.tilde.m[i][j];
      if (bond_finite(m) && m < 3) continue;
      os << "  n" << i << " -- n" << j << " [label=\"";
      if (bond_finite(m))
        os << m;
      else
        os << "inf";
      os << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace coxdec
