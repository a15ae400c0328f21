#include "coxdec/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace coxdec {

CycMat BasedRootSystem::gram() const {
  CycMat g(size(), std::vector<CycReal>());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      g[i].push_back(pairing(simples[i], simples[j]));
  return g;
}

BasedRootSystem standard_system(const ContextPtr& ctx) {
  BasedRootSystem brs;
  brs.ambient = ctx;
  for (int s = 0; s < ctx->rank(); ++s) brs.simples.push_back(ctx->simple_root(s));
  return brs;
}

// ---------------------------------------------------------------------------
// positive independence via Fourier-Motzkin over the ordered scalar field

namespace {

// affine inequality sum coef_i x_i + constant >= 0
struct Ineq {
  std::vector<CycReal> coef;
  CycReal constant;
};

bool all_coef_zero(const Ineq& q) {
  for (const auto& c : q.coef)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

bool positively_dependent(const ContextPtr& ctx, const std::vector<RootVec>& vecs) {
  const int k = static_cast<int>(vecs.size());
  if (k == 0) return false;
  const auto& field = ctx->field();
  const int dim = ctx->rank();

  // feasibility of: sum c_i vecs[i] = 0, c_i >= 0, sum c_i = 1
  std::vector<Ineq> eqs;  // kept as equalities until substituted away
  for (int d = 0; d < dim; ++d) {
    Ineq e{std::vector<CycReal>(), field->zero()};
    for (int i = 0; i < k; ++i) e.coef.push_back(vecs[i][d]);
    eqs.push_back(std::move(e));
  }
  {
    Ineq e{std::vector<CycReal>(k, field->one()), -field->one()};
    eqs.push_back(std::move(e));
  }
  std::vector<Ineq> ineqs;
  for (int i = 0; i < k; ++i) {
    Ineq q{std::vector<CycReal>(k, field->zero()), field->zero()};
    q.coef[i] = field->one();
    ineqs.push_back(std::move(q));
  }

  std::vector<bool> eliminated(k, false);

  // substitute equalities away
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    int var = -1;
    for (int i = 0; i < k; ++i)
      if (!eliminated[i] && !eqs[e].coef[i].is_zero()) { var = i; break; }
    if (var < 0) {
      if (!eqs[e].constant.is_zero()) return false;  // 0 = nonzero
      continue;
    }
    // var = -(rest + constant)/coef
    CycReal inv = eqs[e].coef[var].inverse();
    auto substitute = [&](Ineq& q) {
      if (q.coef[var].is_zero()) return;
      CycReal f = q.coef[var] * inv;
      // this zeroes q.coef[var] exactly
      for (int i = 0; i < k; ++i) q.coef[i] -= f * eqs[e].coef[i];
      q.constant -= f * eqs[e].constant;
    };
    for (std::size_t e2 = e + 1; e2 < eqs.size(); ++e2) substitute(eqs[e2]);
    for (auto& q : ineqs) substitute(q);
    eliminated[var] = true;
  }

  // Fourier-Motzkin on the remaining variables
  for (int var = 0; var < k; ++var) {
    if (eliminated[var]) continue;
    std::vector<Ineq> pos, neg, rest;
    for (auto& q : ineqs) {
      int s = q.coef[var].is_zero() ? 0 : q.coef[var].sign();
      if (s > 0)
        pos.push_back(std::move(q));
      else if (s < 0)
        neg.push_back(std::move(q));
      else
        rest.push_back(std::move(q));
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        // p: a x + P >= 0 (a>0) gives x >= -P/a; n: -b x + Q >= 0 (b>0)
        // gives x <= Q/b; combine to b P + a Q >= 0
        CycReal a = p.coef[var];
        CycReal b = -n.coef[var];
        Ineq comb{std::vector<CycReal>(), b * p.constant + a * n.constant};
        for (int i = 0; i < k; ++i)
          comb.coef.push_back(b * p.coef[i] + a * n.coef[i]);
        comb.coef[var] = field->zero();
        rest.push_back(std::move(comb));
      }
    }
    ineqs = std::move(rest);
    eliminated[var] = true;
  }

  for (const auto& q : ineqs) {
    if (!all_coef_zero(q))
      throw std::logic_error("Fourier-Motzkin left a variable uneliminated");
    if (q.constant.sign() < 0) return false;  // infeasible
  }
  return true;  // feasible: a nonzero nonnegative combination vanishes
}

Validation validate(const BasedRootSystem& brs) {
  const auto& field = brs.ambient->field();
  for (int i = 0; i < brs.size(); ++i) {
    CycReal norm = brs.pairing(brs.simples[i], brs.simples[i]);
    if (!(norm == field->one()))
      return Validation::fail("axiom (ii): root " + std::to_string(i) +
                              " has squared norm " + norm.str());
  }
  for (int i = 0; i < brs.size(); ++i) {
    for (int j = i + 1; j < brs.size(); ++j) {
      CycReal c = -brs.pairing(brs.simples[i], brs.simples[j]);
      if (!c.in_COS())
        return Validation::fail("axiom (iii): pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ") has product " +
                                (-c).str() + " outside -COS");
    }
  }
  if (positively_dependent(brs.ambient, brs.simples))
    return Validation::fail("axiom (i): simple roots are positively dependent");
  return Validation::pass();
}

// ---------------------------------------------------------------------------

namespace {

struct VecKey {
  std::size_t h;
  RootVec v;
};

std::size_t vec_hash(const RootVec& v) {
  std::size_t h = 0;
  for (const auto& c : v) h = h * 0x100000001b3ull ^ c.hash();
  return h;
}

bool vec_equal(const RootVec& a, const RootVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

class VecSet {
 public:
  bool insert(const RootVec& v) {
    std::size_t h = vec_hash(v);
    auto range = map_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (vec_equal(items_[it->second], v)) return false;
    map_.emplace(h, items_.size());
    items_.push_back(v);
    return true;
  }
  const std::vector<RootVec>& items() const { return items_; }

 private:
  std::unordered_multimap<std::size_t, std::size_t> map_;
  std::vector<RootVec> items_;
};

}  // namespace

RootClosure positive_roots(const BasedRootSystem& brs, int depth) {
  RootClosure out;
  VecSet seen;
  std::vector<std::pair<RootVec, int>> queue;
  for (const auto& d : brs.simples)
    if (seen.insert(d)) queue.emplace_back(d, 0);
  std::size_t head = 0;
  bool truncated = false;
  while (head < queue.size()) {
    auto [v, dep] = queue[head++];
    if (dep >= depth) {
      truncated = true;
      continue;
    }
    for (int i = 0; i < brs.size(); ++i) {
      RootVec w = brs.reflect(i, v);
      if (!brs.ambient->root_is_positive(w)) continue;
      if (seen.insert(w)) queue.emplace_back(std::move(w), dep + 1);
    }
  }
  out.roots = seen.items();
  out.complete = !truncated;
  return out;
}

std::vector<Reflection> chi(const ContextPtr& ctx,
                            const std::vector<Elem>& reflections,
                            std::size_t max_subgroup) {
  // enumerate W' = <reflections>
  std::unordered_map<std::size_t, std::vector<int>> by_hash;
  std::vector<Elem> elems;
  auto find = [&](const Elem& e) {
    auto it = by_hash.find(e.hash());
    if (it == by_hash.end()) return -1;
    for (int i : it->second)
      if (elems[i] == e) return i;
    return -1;
  };
  auto add = [&](Elem e) {
    by_hash[e.hash()].push_back(static_cast<int>(elems.size()));
    elems.push_back(std::move(e));
  };
  add(ctx->identity_elem());
  std::size_t head = 0;
  while (head < elems.size()) {
    Elem cur = elems[head++];
    for (const auto& r : reflections) {
      Elem next = cur * r;
      if (find(next) < 0) {
        add(std::move(next));
        if (elems.size() > max_subgroup)
          throw std::domain_error("chi: subgroup enumeration bound exceeded");
      }
    }
  }

  // reflections of W', then the canonical ones via N(t) cap W' = {t}
  std::vector<Reflection> canonical;
  for (const auto& w : elems) {
    auto root = ctx->reflection_root(w);
    if (!root) continue;
    bool is_canonical = true;
    for (const auto& refl : ctx->n_set(w)) {
      if (refl.elem == w) continue;
      if (find(refl.elem) >= 0) { is_canonical = false; break; }
    }
    if (is_canonical) canonical.push_back(Reflection{w, *root});
  }
  std::sort(canonical.begin(), canonical.end(),
            [](const Reflection& a, const Reflection& b) { return a.elem < b.elem; });
  // cross-check: pairwise products of canonical roots lie in -COS
  for (std::size_t i = 0; i < canonical.size(); ++i)
    for (std::size_t j = i + 1; j < canonical.size(); ++j) {
      CycReal c = -ctx->inner(canonical[i].root, canonical[j].root);
      if (!c.in_COS())
        throw std::logic_error("chi: canonical generators violate the -COS test");
    }
  return canonical;
}

SupportInfo support(const ContextPtr& ctx, const RootVec& gamma) {
  SupportInfo info;
  const int n = ctx->rank();
  for (int i = 0; i < n; ++i)
    if (!gamma[i].is_zero()) info.support.push_back(i);
  // connectivity of the induced subdiagram
  if (!info.support.empty()) {
    std::unordered_set<int> in_support(info.support.begin(), info.support.end());
    std::vector<int> stack{info.support[0]};
    std::unordered_set<int> visited{info.support[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : info.support) {
        if (visited.count(u)) continue;
        int m = ctx->bond(v, u);
        if (!bond_finite(m) || m >= 3) {
          visited.insert(u);
          stack.push_back(u);
        }
      }
    }
    info.connected = visited.size() == info.support.size();
  }
  // s_gamma lies in the standard parabolic on the support
  Elem refl = ctx->reflection_from_root(gamma);
  std::unordered_set<int> in_support(info.support.begin(), info.support.end());
  for (int s : refl.word())
    if (!in_support.count(s))
      throw std::logic_error("support: s_gamma leaves the support parabolic");
  return info;
}

Validation brink_check(const ContextPtr& ctx, const RootVec& gamma) {
  const auto& field = ctx->field();
  for (int i = 0; i < ctx->rank(); ++i) {
    const CycReal& c = gamma[i];
    CycReal half = c * Rational(1, 2);
    if (!half.in_COS())
      return Validation::fail("coefficient " + std::to_string(i) + " = " + c.str() +
                              " has c/2 outside COS");
    if (c.is_zero() || c == field->one()) continue;
    CycReal csq = c * c;
    if ((csq - field->rational(Rational(2))).sign() < 0)
      return Validation::fail("coefficient " + std::to_string(i) + " = " + c.str() +
                              " lies strictly between 1 and sqrt(2)");
  }
  return Validation::pass();
}

ChamberResult to_chamber(const BasedRootSystem& brs, const RootVec& rho,
                         int max_iters) {
  ChamberResult res;
  RootVec cur = rho;
  for (int iter = 0; iter <= max_iters; ++iter) {
    int neg = -1;
    for (int i = 0; i < brs.size(); ++i) {
      if (brs.pairing(brs.simples[i], cur).sign() < 0) { neg = i; break; }
    }
    if (neg < 0) {
      res.status = ChamberResult::kOk;
      res.point = cur;
      for (int i = 0; i < brs.size(); ++i)
        if (brs.pairing(brs.simples[i], cur).is_zero())
          res.stabilizer_generators.push_back(i);
      return res;
    }
    if (iter == max_iters) break;
    cur = brs.reflect(neg, cur);
    res.word.push_back(neg);
  }
  res.status = ChamberResult::kBudgetExhausted;
  res.point = cur;
  return res;
}

}  // namespace coxdec
