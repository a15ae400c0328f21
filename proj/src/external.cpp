#include "coxdec/external.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "coxdec/rootsys.hpp"

namespace coxdec {

namespace {

Perm compose(const Perm& a, const Perm& b) {  // (a o b)(x) = a[b[x]]
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_diagram_automorphism(const CoxMatrix& m, const Perm& p) {
  const int n = m.rank();
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> used(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || used[v]) return false;
    used[v] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.m[p[i]][p[j]] != m.m[i][j]) return false;
  return true;
}

}  // namespace

ExtResult check_external(const ExtData& data, int order_bound) {
  ExtResult res;
  auto violate = [&](const std::string& cond, const std::string& detail) {
    res.status = ExtResult::kViolation;
    res.detail = cond + ": " + detail;
    return res;
  };

  data.mI.validate();
  data.mTilde.validate();
  const int nI = data.mI.rank();
  const int nT = data.mTilde.rank();
  if (static_cast<int>(data.theta.size()) != nI)
    return violate("input", "theta must have one permutation per generator of W'");
  for (int s = 0; s < nI; ++s) {
    if (!is_diagram_automorphism(data.mTilde, data.theta[s]))
      return violate("input", "theta(" + data.mI.labels[s] +
                                  ") is not a diagram automorphism");
    if (compose(data.theta[s], data.theta[s]) != identity_perm(nT))
      return violate("input", "theta(" + data.mI.labels[s] + ") is not an involution");
  }
  // braid relations of W' must hold for the permutations
  for (int s = 0; s < nI; ++s)
    for (int t = s + 1; t < nI; ++t) {
      int m = data.mI.m[s][t];
      if (!bond_finite(m)) continue;
      Perm p = compose(data.theta[s], data.theta[t]);
      Perm q = identity_perm(nT);
      for (int k = 0; k < m; ++k) q = compose(q, p);
      if (q != identity_perm(nT))
        return violate("input", "theta violates the braid relation of (" +
                                    data.mI.labels[s] + "," + data.mI.labels[t] + ")");
    }

  // J meets every orbit exactly once
  {
    std::vector<int> orbit(nT);
    for (int i = 0; i < nT; ++i) orbit[i] = i;
    std::function<int(int)> find = [&](int x) {
      return orbit[x] == x ? x : orbit[x] = find(orbit[x]);
    };
    for (const auto& p : data.theta)
      for (int i = 0; i < nT; ++i)
        if (find(i) != find(p[i])) orbit[find(i)] = find(p[i]);
    std::vector<int> count(nT, 0);
    for (int r : data.J) {
      if (r < 0 || r >= nT) return violate("input", "J contains a bad node index");
      ++count[find(r)];
    }
    for (int i = 0; i < nT; ++i)
      if (count[find(i)] != 1)
        return violate("input", "J must meet every W'-orbit exactly once");
  }

  ContextPtr ctxI = CoxContext::make(data.mI);
  if (!ctxI->is_finite()) {
    res.status = ExtResult::kInconclusive;
    res.detail = "W' is not finite; enumeration unavailable";
    return res;
  }
  std::vector<Elem> wprime = ctxI->enumerate_parabolic([&] {
    std::vector<int> all(nI);
    for (int i = 0; i < nI; ++i) all[i] = i;
    return all;
  }());
  // theta as permutations per element of W'
  auto theta_of = [&](const Elem& u) {
    Perm p = identity_perm(nT);
    for (int s : u.word()) p = compose(p, data.theta[s]);
    return p;
  };

  // perp subgroups W'_{I cap r-perp} as canonical-word sets
  auto perp_set = [&](int r) {
    std::vector<int> perp;
    for (int v = 0; v < nI; ++v)
      if (data.theta[v][r] == r) perp.push_back(v);
    std::unordered_set<Elem, ElemHash> members;
    for (const Elem& e : ctxI->enumerate_parabolic(perp)) members.insert(e);
    return members;
  };
  std::vector<std::unordered_set<Elem, ElemHash>> perp_of;
  std::vector<std::vector<int>> perp_gens;
  for (int j = 0; j < static_cast<int>(data.J.size()); ++j) {
    perp_of.push_back(perp_set(data.J[j]));
    std::vector<int> perp;
    for (int v = 0; v < nI; ++v)
      if (data.theta[v][data.J[j]] == data.J[j]) perp.push_back(v);
    perp_gens.push_back(perp);
  }

  // condition (1)
  for (const Elem& u : wprime) {
    Perm pu = theta_of(u);
    for (std::size_t js = 0; js < data.J.size(); ++js) {
      int s = data.J[js];
      int r = pu[s];
      if (std::find(data.J.begin(), data.J.end(), r) == data.J.end()) continue;
      if (r != s)
        return violate("(1)", "u = " + u.str() + " maps " + data.mTilde.labels[s] +
                                  " to " + data.mTilde.labels[r]);
      if (!perp_of[js].count(u))
        return violate("(1)", "u = " + u.str() + " fixes " + data.mTilde.labels[s] +
                                  " but is not in W'_{I cap s-perp}");
    }
  }

  // orders inside Wtilde come from its own geometric representation
  ContextPtr ctxT = CoxContext::make(data.mTilde);
  std::vector<Elem> tgen;
  for (int i = 0; i < nT; ++i) tgen.push_back(ctxT->generator_elem(i));
  auto order_in_tilde = [&](int a, int b) {
    return ctxT->order_of_product(tgen[a], tgen[b], order_bound);
  };

  // condition (2)
  for (std::size_t jr = 0; jr < data.J.size(); ++jr) {
    int r = data.J[jr];
    for (int s = 0; s < nT; ++s) {
      if (s == r) continue;
      OrderResult ord = order_in_tilde(r, s);
      if (ord.kind == OrderResult::kUnknown) {
        res.status = ExtResult::kInconclusive;
        res.detail = "order of a pair is undecided within the bound";
        return res;
      }
      if (!ord.finite()) continue;
      bool satisfied = false;
      for (const Elem& u : wprime) {
        if (!perp_of[jr].count(u)) continue;
        Perm pu = theta_of(u);
        // (i): s = u(t) for t in J, t != r, with rt of finite order
        for (int t : data.J) {
          if (t == r || pu[t] != s) continue;
          if (order_in_tilde(r, t).finite()) { satisfied = true; break; }
        }
        if (satisfied) break;
        // (ii): s = uv(r) for v in I with rv of finite order > 2
        for (int v = 0; v < nI && !satisfied; ++v) {
          int vr = data.theta[v][r];
          if (vr == r) continue;  // order of rv would be 2
          if (!order_in_tilde(r, vr).finite()) continue;
          if (pu[vr] == s) satisfied = true;
        }
        if (satisfied) break;
      }
      if (!satisfied)
        return violate("(2)", "pair (" + data.mTilde.labels[r] + ", " +
                                  data.mTilde.labels[s] +
                                  ") admits neither witness (i) nor (ii)");
    }
  }

  // accepted: assemble the Coxeter matrix over I u J; J labels that collide
  // with a label of I are primed
  CoxMatrix out;
  for (int v = 0; v < nI; ++v) out.labels.push_back(data.mI.labels[v]);
  for (int r : data.J) {
    std::string label = data.mTilde.labels[r];
    while (std::find(out.labels.begin(), out.labels.end(), label) != out.labels.end())
      label += "'";
    out.labels.push_back(label);
  }
  const int n = nI + static_cast<int>(data.J.size());
  out.m.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) out.m[i][i] = 1;
  for (int v = 0; v < nI; ++v)
    for (int u = 0; u < nI; ++u) out.m[v][u] = data.mI.m[v][u];
  for (std::size_t a = 0; a < data.J.size(); ++a)
    for (std::size_t b = 0; b < data.J.size(); ++b)
      out.m[nI + a][nI + b] = data.mTilde.m[data.J[a]][data.J[b]];
  for (int v = 0; v < nI; ++v) {
    for (std::size_t a = 0; a < data.J.size(); ++a) {
      int r = data.J[a];
      int rp = data.theta[v][r];
      int entry;
      if (rp == r) {
        entry = 2;  // twice the order of r'r = 1
      } else {
        OrderResult ord = order_in_tilde(rp, r);
        if (ord.kind == OrderResult::kUnknown) {
          res.status = ExtResult::kInconclusive;
          res.detail = "mixed order undecided within the bound";
          return res;
        }
        entry = ord.finite() ? 2 * ord.value : kInfiniteBond;
      }
      out.m[v][nI + a] = out.m[nI + a][v] = entry;
    }
  }
  out.validate();
  res.status = ExtResult::kAccepted;
  res.matrix = std::move(out);
  return res;
}

ExtData export_ext_data(const Decomposition& dec) {
  ExtData data;
  data.mI = dec.context()->matrix().submatrix(dec.I());
  data.mTilde = dec.tilde_matrix();
  for (int s : dec.I()) data.theta.push_back(dec.action_of(s));
  for (int g = 0; g < dec.gen_count(); ++g)
    if (dec.tilde_gens()[g].x.is_identity()) data.J.push_back(g);
  return data;
}

// ---------------------------------------------------------------------------
// geometric construction

ConstructResult construct_from_roots(const ContextPtr& ambient,
                                     const std::vector<RootVec>& delta,
                                     const std::vector<RootVec>& pi_tilde,
                                     int chamber_budget) {
  ConstructResult res;
  auto violate = [&](const std::string& detail) {
    res.status = ConstructResult::kViolation;
    res.detail = detail;
    return res;
  };

  BasedRootSystem delta_sys{ambient, delta};
  BasedRootSystem tilde_sys{ambient, pi_tilde};
  Validation v = validate(delta_sys);
  if (!v.ok) return violate("(Psi, Delta) is not a based root system: " + v.message);
  v = validate(tilde_sys);
  if (!v.ok)
    return violate("(PhiTilde, PiTilde) is not a based root system: " + v.message);

  // W'-stability of PiTilde, checked on the generators of W'
  auto in_pi_tilde = [&](const RootVec& x) {
    for (const auto& p : pi_tilde) {
      bool equal = true;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] == p[i])) { equal = false; break; }
      if (equal) return true;
    }
    return false;
  };
  for (std::size_t d = 0; d < delta.size(); ++d)
    for (const auto& p : pi_tilde)
      if (!in_pi_tilde(delta_sys.reflect(static_cast<int>(d), p)))
        return violate("PiTilde is not stable under W'");

  // (ii): positive independence of the union
  std::vector<RootVec> all = delta;
  all.insert(all.end(), pi_tilde.begin(), pi_tilde.end());
  if (positively_dependent(ambient, all))
    return violate("Delta u PiTilde is positively dependent");

  // (ii): PiTilde inside -X, via the chamber algorithm on -pi
  for (const auto& p : pi_tilde) {
    RootVec neg = p;
    for (auto& c : neg) c = -c;
    ChamberResult ch = to_chamber(delta_sys, neg, chamber_budget);
    if (ch.status == ChamberResult::kBudgetExhausted) {
      res.status = ConstructResult::kInconclusive;
      res.detail = "chamber budget exhausted while testing PiTilde in -X";
      return res;
    }
  }

  // Pi = Delta u (PiTilde cap -C)
  std::vector<RootVec> pi = delta;
  for (const auto& p : pi_tilde) {
    bool in_neg_chamber = true;
    for (const auto& d : delta)
      if (ambient->inner(d, p).sign() > 0) { in_neg_chamber = false; break; }
    if (in_neg_chamber) pi.push_back(p);
  }

  BasedRootSystem pi_sys{ambient, pi};
  v = validate(pi_sys);
  if (!v.ok) return violate("the glued system fails validation: " + v.message);

  // mixed pairings lie in COS' = {cos(pi/2m)} u [1, oo)
  const auto& field = ambient->field();
  for (const auto& d : delta) {
    for (std::size_t k = delta.size(); k < pi.size(); ++k) {
      CycReal c = -ambient->inner(d, pi[k]);
      bool ok = false;
      if (auto m = c.recognize_cos()) ok = (*m % 2 == 0);
      if (!ok) ok = (c - field->one()).sign() >= 0;
      if (!ok)
        return violate("a mixed pairing lies outside COS'");
    }
  }

  res.status = ConstructResult::kOk;
  res.pi = std::move(pi);
  return res;
}

// ---------------------------------------------------------------------------
// file format

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ls(line);
  std::vector<std::string> toks;
  std::string t;
  while (ls >> t) toks.push_back(t);
  return toks;
}

CoxMatrix parse_matrix_block(const std::vector<std::string>& lines, std::size_t& pos) {
  std::vector<std::string> labels = tokenize(lines[pos++]);
  CoxMatrix m;
  m.labels = labels;
  for (std::size_t row = 0; row < labels.size(); ++row) {
    auto toks = tokenize(lines[pos++]);
    if (toks.size() != labels.size())
      throw std::invalid_argument("ExtData: matrix row has wrong width");
    std::vector<int> r;
    for (const auto& t : toks)
      r.push_back(t == "inf" ? kInfiniteBond : std::stoi(t));
    m.m.push_back(std::move(r));
  }
  m.validate();
  return m;
}

}  // namespace

ExtData ExtData::parse(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!tokenize(line).empty()) lines.push_back(line);
  }
  ExtData data;
  std::size_t pos = 0;
  auto expect = [&](const std::string& header) {
    if (pos >= lines.size() || tokenize(lines[pos])[0] != header)
      throw std::invalid_argument("ExtData: expected section " + header);
    ++pos;
  };
  expect("[W']");
  data.mI = parse_matrix_block(lines, pos);
  expect("[Wtilde]");
  data.mTilde = parse_matrix_block(lines, pos);
  expect("[action]");
  data.theta.assign(data.mI.rank(), identity_perm(data.mTilde.rank()));
  while (pos < lines.size() && tokenize(lines[pos])[0] != "[J]") {
    const std::string& l = lines[pos++];
    auto colon = l.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("ExtData: action line needs 'gen: cycles'");
    std::string gen = tokenize(l.substr(0, colon))[0];
    int gi = data.mI.index_of(gen);
    if (gi < 0) throw std::invalid_argument("ExtData: unknown W' generator " + gen);
    Perm p = identity_perm(data.mTilde.rank());
    std::string rest = l.substr(colon + 1);
    std::string cur;
    std::vector<int> cycle;
    for (char ch : rest) {
      if (ch == '(') {
        cycle.clear();
        cur.clear();
      } else if (ch == ' ' || ch == ')' || ch == ',') {
        if (!cur.empty()) {
          int idx = data.mTilde.index_of(cur);
          if (idx < 0 && cur != "id")
            throw std::invalid_argument("ExtData: unknown node " + cur);
          if (idx >= 0) cycle.push_back(idx);
          cur.clear();
        }
        if (ch == ')') {
          for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
            p[cycle[i]] = cycle[i + 1];
          if (!cycle.empty()) p[cycle.back()] = cycle.front();
        }
      } else {
        cur += ch;
      }
    }
    data.theta[gi] = std::move(p);
  }
  expect("[J]");
  while (pos < lines.size()) {
    for (const auto& t : tokenize(lines[pos++])) {
      int idx = data.mTilde.index_of(t);
      if (idx < 0) throw std::invalid_argument("ExtData: unknown J node " + t);
      data.J.push_back(idx);
    }
  }
  return data;
}

void ExtData::print(std::ostream& out) const {
  out << "[W']\n";
  mI.print(out);
  out << "[Wtilde]\n";
  mTilde.print(out);
  out << "[action]\n";
  for (int s = 0; s < mI.rank(); ++s)
    out << mI.labels[s] << ": " << cycle_notation(theta[s], mTilde.labels) << "\n";
  out << "[J]\n";
  for (std::size_t i = 0; i < J.size(); ++i)
    out << mTilde.labels[J[i]] << (i + 1 < J.size() ? ' ' : '\n');
}

}  // namespace coxdec
