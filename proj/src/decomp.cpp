#include "coxdec/decomp.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "coxdec/linalg.hpp"

namespace coxdec {

using ElemSet = std::unordered_set<Elem, ElemHash>;

// ---------------------------------------------------------------------------
// partition

PartitionCheck validate_partition(const CoxMatrix& matrix, const std::vector<int>& I) {
  const int n = matrix.rank();
  std::vector<bool> in_I(n, false);
  for (int s : I) in_I[s] = true;
  // BFS along odd bonds from I; reaching J yields a witness path
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  for (int s : I) {
    parent[s] = -1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u) {
      if (u == v || parent[u] != -2) continue;
      int m = matrix.m[v][u];
      if (!bond_finite(m) || m % 2 == 0) continue;
      parent[u] = v;
      if (!in_I[u]) {
        PartitionCheck bad;
        bad.ok = false;
        for (int w = u; w != -1; w = parent[w]) bad.witness_path.push_back(w);
        std::reverse(bad.witness_path.begin(), bad.witness_path.end());
        return bad;
      }
      queue.push_back(u);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// construction

Decomposition::Decomposition(ContextPtr ctx, std::vector<int> I, int wI_bound)
    : ctx_(std::move(ctx)), I_(std::move(I)) {
  std::sort(I_.begin(), I_.end());
  I_.erase(std::unique(I_.begin(), I_.end()), I_.end());
  for (int s : I_)
    if (s < 0 || s >= ctx_->rank())
      throw std::invalid_argument("partition: generator index out of range");
  auto check = validate_partition(ctx_->matrix(), I_);
  if (!check.ok) {
    std::ostringstream os;
    os << "invalid partition: odd-bond path";
    for (int s : check.witness_path) os << " " << ctx_->matrix().labels[s];
    throw std::invalid_argument(os.str());
  }
  std::vector<bool> in_I(ctx_->rank(), false);
  for (int s : I_) in_I[s] = true;
  for (int s = 0; s < ctx_->rank(); ++s)
    if (!in_I[s]) J_.push_back(s);

  CoxMatrix sub = ctx_->matrix().submatrix(I_);
  CycMat gram;
  for (int i = 0; i < sub.rank(); ++i) {
    gram.emplace_back();
    for (int j = 0; j < sub.rank(); ++j)
      gram.back().push_back(ctx_->gram(I_[i], I_[j]));
  }
  wI_finite_ = I_.empty() || is_positive_definite(gram);
  if (!wI_finite_ && wI_bound < 0)
    throw std::domain_error("W_I is infinite; pass an enumeration bound");
  partial_ = !wI_finite_;
  wI_ = ctx_->enumerate_parabolic(I_, wI_finite_ ? -1 : wI_bound);
  build_gens(wI_bound);
}

std::vector<int> Decomposition::perp_in_I(int t) const {
  std::vector<int> perp;
  for (int s : I_)
    if (ctx_->bond(s, t) == 2) perp.push_back(s);
  return perp;
}

void Decomposition::build_gens(int) {
  for (int t : J_) {
    std::vector<int> perp = perp_in_I(t);
    std::vector<Elem> reps;
    for (const Elem& x : wI_) {
      bool minimal = true;
      for (int s : perp)
        if (!ctx_->root_is_positive(x.columns()[s])) { minimal = false; break; }
      if (minimal) reps.push_back(x);
    }
    std::sort(reps.begin(), reps.end());
    Elem tgen = ctx_->generator_elem(t);
    for (Elem& x : reps) {
      TildeGen g;
      g.t = t;
      g.elem = tgen.conjugate(x);
      g.root = x.apply(ctx_->simple_root(t));
      if (!ctx_->root_is_positive(g.root))
        throw std::logic_error("tilde generator with negative root");
      g.x = std::move(x);
      gens_.push_back(std::move(g));
    }
  }
  std::sort(gens_.begin(), gens_.end(), [](const TildeGen& a, const TildeGen& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.x < b.x;
  });
  for (int i = 0; i < gen_count(); ++i) {
    auto key = std::make_pair(gens_[i].t, gens_[i].x.word());
    if (!gen_index_.emplace(std::move(key), i).second)
      throw std::logic_error("duplicate (x, t) pair in tilde generators");
  }
  // the parametrization is a bijection: distinct pairs, distinct reflections
  std::set<std::vector<int>> words;
  for (const auto& g : gens_)
    if (!words.insert(g.elem.word()).second)
      throw std::logic_error("duplicate reflection in tilde generators");
}

int Decomposition::find_gen(const Elem& e) const {
  for (int i = 0; i < gen_count(); ++i)
    if (gens_[i].elem == e) return i;
  return -1;
}

// ---------------------------------------------------------------------------
// the retraction and the factorization

Elem Decomposition::phi(const Elem& w) const {
  std::vector<bool> in_I(ctx_->rank(), false);
  for (int s : I_) in_I[s] = true;
  std::vector<int> filtered;
  for (int s : w.word())
    if (in_I[s]) filtered.push_back(s);
  return ctx_->element_from_word(filtered);
}

std::pair<Elem, Elem> Decomposition::factorize(const Elem& w) const {
  Elem a = phi(w);
  Elem wt = w * a.inverse();
  return {std::move(wt), std::move(a)};
}

int Decomposition::ell_J(const Elem& w) const {
  std::vector<bool> in_I(ctx_->rank(), false);
  for (int s : I_) in_I[s] = true;
  int count = 0;
  for (int s : w.word())
    if (!in_I[s]) ++count;
  return count;
}

int Decomposition::ell_I(const Elem& w) const {
  return w.length() - ell_J(w);
}

// ---------------------------------------------------------------------------
// the tilde Coxeter matrix

Elem Decomposition::f_elem(int i, int j) const {
  const TildeGen& a = gens_[i];
  const TildeGen& b = gens_[j];
  Elem xy = a.x.inverse() * b.x;
  return ctx_->min_double_coset_rep(xy, perp_in_I(a.t), perp_in_I(b.t));
}

int Decomposition::m_tilde(int i, int j) const {
  if (i == j) return 1;
  const int s = gens_[i].t;
  const int t = gens_[j].t;
  Elem f = f_elem(i, j);
  if (s == t) {
    if (f.is_identity())
      throw std::logic_error("m_tilde: distinct generators with equal (s, f)");
    if (f.length() == 1) {
      int u = f.word()[0];
      int m = ctx_->bond(s, u);
      if (!bond_finite(m)) return kInfiniteBond;
      if (m % 2 != 0)
        throw std::logic_error("m_tilde: odd bond between I and J survived");
      return m / 2;
    }
    return kInfiniteBond;
  }
  if (f.is_identity()) return ctx_->bond(s, t);
  return kInfiniteBond;
}

const CoxMatrix& Decomposition::tilde_matrix() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (tilde_matrix_) return *tilde_matrix_;
  CoxMatrix tm;
  for (const auto& g : gens_) tm.labels.push_back(g.elem.str());
  tm.m.assign(gen_count(), std::vector<int>(gen_count(), 1));
  for (int i = 0; i < gen_count(); ++i)
    for (int j = i + 1; j < gen_count(); ++j) {
      int m = m_tilde(i, j);
      int m_sym = m_tilde(j, i);
      if (m != m_sym) throw std::logic_error("tilde matrix is not symmetric");
      tm.m[i][j] = tm.m[j][i] = m;
    }
  tm.validate();
  tilde_matrix_ = std::move(tm);
  return *tilde_matrix_;
}

CoxMatrix Decomposition::tilde_matrix_via_roots() const {
  CoxMatrix tm;
  for (const auto& g : gens_) tm.labels.push_back(g.elem.str());
  tm.m.assign(gen_count(), std::vector<int>(gen_count(), 1));
  const auto& field = ctx_->field();
  for (int i = 0; i < gen_count(); ++i)
    for (int j = i + 1; j < gen_count(); ++j) {
      CycReal c = -ctx_->inner(gens_[i].root, gens_[j].root);
      int m;
      if (auto mm = c.recognize_cos()) {
        m = *mm;
      } else if ((c - field->one()).sign() >= 0) {
        m = kInfiniteBond;
      } else {
        throw std::logic_error(
            "root criterion: generator pairing outside -COS and > -1");
      }
      tm.m[i][j] = tm.m[j][i] = m;
    }
  return tm;
}

std::vector<std::vector<OrderResult>> Decomposition::tilde_orders(int bound) const {
  std::vector<std::vector<OrderResult>> out(
      gen_count(), std::vector<OrderResult>(gen_count()));
  for (int i = 0; i < gen_count(); ++i)
    for (int j = 0; j < gen_count(); ++j)
      out[i][j] = ctx_->order_of_product(gens_[i].elem, gens_[j].elem, bound);
  return out;
}

const ContextPtr& Decomposition::tilde_context() const {
  const CoxMatrix& tm = tilde_matrix();
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!tilde_ctx_) tilde_ctx_ = CoxContext::make(tm);
  return tilde_ctx_;
}

// ---------------------------------------------------------------------------
// lengths in the subgroup

std::vector<int> Decomposition::tilde_word(const Elem& wt) const {
  if (!phi(wt).is_identity())
    throw std::invalid_argument("tilde_word: element is not in the kernel");
  std::vector<int> letters;
  Elem cur = wt;
  while (!cur.is_identity()) {
    int found = -1;
    for (int k = 0; k < gen_count(); ++k) {
      Elem next = gens_[k].elem * cur;
      if (next.length() < cur.length()) {
        letters.push_back(k);
        cur = std::move(next);
        found = k;
        break;
      }
    }
    if (found < 0)
      throw std::logic_error("tilde_word: no descent in the tilde generators");
  }
  return letters;
}

int Decomposition::tilde_length(const Elem& wt) const {
  std::vector<int> word = tilde_word(wt);
  return tilde_context()->element_from_word(word).length();
}

std::vector<int> Decomposition::palindromic_expr(int gen) const {
  const TildeGen& g = gens_[gen];
  std::vector<int> word = g.x.word();
  word.push_back(g.t);
  word.insert(word.end(), g.x.word().rbegin(), g.x.word().rend());
  Elem e = ctx_->element_from_word(word);
  if (e != g.elem || e.length() != static_cast<int>(word.size()))
    throw std::logic_error("palindromic expression is not reduced");
  return word;
}

// ---------------------------------------------------------------------------
// the W_I action

std::vector<int> Decomposition::action_of(int s) const {
  std::vector<int> perm(gen_count(), -1);
  Elem sg = ctx_->generator_elem(s);
  for (int i = 0; i < gen_count(); ++i) {
    const TildeGen& g = gens_[i];
    Elem sx = sg * g.x;
    Elem xp = ctx_->min_coset_rep(sx, perp_in_I(g.t), Side::kRight);
    auto it = gen_index_.find(std::make_pair(g.t, xp.word()));
    if (it == gen_index_.end()) {
      if (partial_)
        throw std::domain_error(
            "action_of: image lies beyond the exploration bound");
      throw std::logic_error("action_of: image is not a tilde generator");
    }
    perm[i] = it->second;
  }
  // the action permutes the diagram: bonds are preserved
  const CoxMatrix& tm = tilde_matrix();
  for (int i = 0; i < gen_count(); ++i)
    for (int j = 0; j < gen_count(); ++j)
      if (tm.m[perm[i]][perm[j]] != tm.m[i][j])
        throw std::logic_error("action_of: not a diagram automorphism");
  return perm;
}

// ---------------------------------------------------------------------------
// components

std::vector<std::vector<int>> ComponentInfo::members() const {
  std::vector<std::vector<int>> out(count);
  for (int i = 0; i < static_cast<int>(component_of.size()); ++i)
    out[component_of[i]].push_back(i);
  return out;
}

ComponentInfo Decomposition::components() const {
  const CoxMatrix& tm = tilde_matrix();
  ComponentInfo info;
  info.component_of = tm.graph_components();
  info.count = info.component_of.empty()
                   ? 0
                   : 1 + *std::max_element(info.component_of.begin(),
                                           info.component_of.end());
  // the corollaries only apply to the complete generator set
  if (partial_) return info;
  // each component maps onto J under nu
  for (const auto& comp : info.members()) {
    std::set<int> seen;
    for (int k : comp) seen.insert(gens_[k].t);
    if (seen != std::set<int>(J_.begin(), J_.end()))
      throw std::logic_error("components: nu is not surjective on a component");
  }
  // for irreducible (W, S), W_I permutes the components transitively
  auto ambient_comp = ctx_->matrix().graph_components();
  bool irreducible =
      std::all_of(ambient_comp.begin(), ambient_comp.end(), [](int c) { return c == 0; });
  if (irreducible && !I_.empty() && !J_.empty() && info.count > 0) {
    std::vector<bool> reached(info.count, false);
    reached[info.component_of[0]] = true;
    std::vector<std::vector<int>> actions;
    for (int s : I_) actions.push_back(action_of(s));
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& perm : actions)
        for (int k = 0; k < gen_count(); ++k)
          if (reached[info.component_of[k]] && !reached[info.component_of[perm[k]]]) {
            reached[info.component_of[perm[k]]] = true;
            grew = true;
          }
    }
    if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }))
      throw std::logic_error("components: the W_I action is not transitive");
  }
  return info;
}

// ---------------------------------------------------------------------------
// parabolic compatibility

std::vector<int> Decomposition::k_plus(const std::vector<int>& K) const {
  std::vector<int> IK, JK;
  for (int s : K) {
    if (std::find(I_.begin(), I_.end(), s) != I_.end())
      IK.push_back(s);
    else
      JK.push_back(s);
  }
  std::set<int> result;
  std::vector<Elem> wik = ctx_->enumerate_parabolic(IK);
  for (const Elem& w : wik) {
    for (int t : JK) {
      Elem e = ctx_->generator_elem(t).conjugate(w);
      int idx = find_gen(e);
      if (idx < 0)
        throw std::logic_error("k_plus: conjugate is not a tilde generator");
      result.insert(idx);
    }
  }
  return std::vector<int>(result.begin(), result.end());
}

void Decomposition::verify_canonical(int gen) const {
  const Elem& t = gens_[gen].elem;
  bool self_seen = false;
  for (const auto& refl : ctx_->n_set(t)) {
    if (refl.elem == t) {
      self_seen = true;
      continue;
    }
    if (phi(refl.elem).is_identity())
      throw std::logic_error("verify_canonical: N(t) meets the kernel beyond t");
  }
  if (!self_seen)
    throw std::logic_error("verify_canonical: t is missing from N(t)");
}

namespace {

// subgroup closure inside a group table
std::vector<int> table_subgroup(const GroupTable& tbl, const std::vector<int>& gens) {
  std::unordered_set<int> seen{GroupTable::kIdentity};
  std::vector<int> queue{GroupTable::kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int g : gens) {
      int next = tbl.mult(queue[head], g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace

const GroupTable& Decomposition::group_table() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!table_) table_ = ctx_->enumerate_group();
  return *table_;
}

void Decomposition::verify_parabolic(const std::vector<int>& K) const {
  const GroupTable* tbl = &group_table();
  const int n = tbl->size();

  // phi on indices
  std::vector<bool> in_I(ctx_->rank(), false);
  for (int s : I_) in_I[s] = true;
  std::vector<int> phi_idx(n);
  for (int i = 0; i < n; ++i) {
    int cur = GroupTable::kIdentity;
    for (int s : tbl->word(i))
      if (in_I[s]) cur = tbl->right_mult(cur, s);
    phi_idx[i] = cur;
  }

  std::vector<int> wk = table_subgroup(*tbl, [&] {
    std::vector<int> g;
    for (int s : K) g.push_back(tbl->right_mult(GroupTable::kIdentity, s));
    return g;
  }());
  std::unordered_set<int> wk_set(wk.begin(), wk.end());

  std::vector<int> kp = k_plus(K);
  std::vector<int> kp_idx;
  for (int g : kp) kp_idx.push_back(tbl->index_of(gens_[g].elem));

  // W_K cap Wtilde == subgroup generated by K+
  std::vector<int> lhs;
  for (int i : wk)
    if (phi_idx[i] == GroupTable::kIdentity) lhs.push_back(i);
  std::vector<int> rhs = table_subgroup(*tbl, kp_idx);
  if (lhs != rhs)
    throw std::logic_error("verify_parabolic: W_K cap Wtilde != Wtilde_{K+}");

  // W_K cap tilde J == K+
  for (int g = 0; g < gen_count(); ++g) {
    bool in_wk = wk_set.count(tbl->index_of(gens_[g].elem)) > 0;
    bool in_kp = std::find(kp.begin(), kp.end(), g) != kp.end();
    if (in_wk != in_kp)
      throw std::logic_error("verify_parabolic: W_K cap tilde J != K+");
  }

  // Wtilde as indices
  std::vector<int> wtilde;
  for (int i = 0; i < n; ++i)
    if (phi_idx[i] == GroupTable::kIdentity) wtilde.push_back(i);

  // d in X^I_{I cap K}: the double-coset statements
  std::vector<int> IK;
  for (int s : K)
    if (in_I[s]) IK.push_back(s);
  for (const Elem& d_elem : wI_) {
    bool minimal = true;
    for (int s : IK)
      if (!ctx_->root_is_positive(d_elem.columns()[s])) { minimal = false; break; }
    if (!minimal) continue;
    int d = tbl->index_of(d_elem);

    // d is the unique minimum of Wtilde d W_K
    for (int wt : wtilde) {
      int wtd = tbl->mult(wt, d);
      for (int k : wk) {
        int full = tbl->mult(wtd, k);
        if (tbl->length(full) < tbl->length(d) ||
            (tbl->length(full) == tbl->length(d) && full != d))
          throw std::logic_error(
              "verify_parabolic: d is not the unique minimum of its double coset");
      }
    }

    // Wtilde cap dW_Kd^{-1} == Wtilde_{tilde J cap dW_Kd^{-1}}
    int dinv = tbl->inverse(d);
    std::vector<int> conj_int;
    for (int k : wk) {
      int u = tbl->mult(tbl->mult(d, k), dinv);
      if (phi_idx[u] == GroupTable::kIdentity) conj_int.push_back(u);
    }
    std::sort(conj_int.begin(), conj_int.end());
    conj_int.erase(std::unique(conj_int.begin(), conj_int.end()), conj_int.end());
    std::vector<int> conj_gens;
    for (int g = 0; g < gen_count(); ++g) {
      int gi = tbl->index_of(gens_[g].elem);
      if (wk_set.count(tbl->mult(tbl->mult(dinv, gi), d))) conj_gens.push_back(gi);
    }
    std::vector<int> conj_sub = table_subgroup(*tbl, conj_gens);
    if (conj_int != conj_sub)
      throw std::logic_error(
          "verify_parabolic: Wtilde cap dW_K != Wtilde_{tilde J cap dW_K}");
  }

  verify_produit_x(kp);
}

void Decomposition::verify_produit_x(const std::vector<int>& L) const {
  const GroupTable* tbl = &group_table();
  const int n = tbl->size();

  std::vector<bool> in_I(ctx_->rank(), false);
  for (int s : I_) in_I[s] = true;
  std::vector<int> phi_idx(n);
  for (int i = 0; i < n; ++i) {
    int cur = GroupTable::kIdentity;
    for (int s : tbl->word(i))
      if (in_I[s]) cur = tbl->right_mult(cur, s);
    phi_idx[i] = cur;
  }

  std::vector<int> L_idx;
  for (int g : L) L_idx.push_back(tbl->index_of(gens_[g].elem));

  auto minimal_in_coset = [&](int i) {
    for (int t : L_idx)
      if (tbl->length(tbl->mult(i, t)) < tbl->length(i)) return false;
    return true;
  };

  std::vector<int> x_tilde, x_full, wI_idx;
  for (int i = 0; i < n; ++i) {
    if (!minimal_in_coset(i)) continue;
    x_full.push_back(i);
    if (phi_idx[i] == GroupTable::kIdentity) x_tilde.push_back(i);
  }
  for (const Elem& w : wI_) wI_idx.push_back(tbl->index_of(w));

  std::unordered_set<int> image;
  std::unordered_set<int> x_full_set(x_full.begin(), x_full.end());
  for (int a : wI_idx)
    for (int x : x_tilde) {
      int wx = tbl->mult(a, x);
      if (!x_full_set.count(wx))
        throw std::logic_error("produit_x: W_I * Xtilde_L leaves X_L");
      if (!image.insert(wx).second)
        throw std::logic_error("produit_x: the product map is not injective");
    }
  if (image.size() != x_full.size())
    throw std::logic_error("produit_x: the product map is not surjective");
}

Decomposition::ParafineResult Decomposition::verify_parafine(
    const std::vector<int>& L) const {
  ParafineResult res;
  // finiteness certificate for Wtilde_L from the root Gram matrix
  CycMat gram;
  for (int i : L) {
    gram.emplace_back();
    for (int j : L) gram.back().push_back(ctx_->inner(gens_[i].root, gens_[j].root));
  }
  if (!L.empty() && !is_positive_definite(gram)) {
    res.status = ParafineResult::kInfiniteSkip;
    return res;
  }

  // enumerate Wtilde_L
  ElemSet wtl;
  {
    std::vector<Elem> queue{ctx_->identity_elem()};
    wtl.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int g : L) {
        Elem next = queue[head] * gens_[g].elem;
        if (wtl.insert(next).second) queue.push_back(next);
        if (wtl.size() > 100000)
          throw std::domain_error("verify_parafine: Wtilde_L too large");
      }
    }
  }

  // subsets K of S by size, then d by length
  const int n = ctx_->rank();
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> K;
    for (int s = 0; s < n; ++s)
      if (mask & (1u << s)) K.push_back(s);
    subsets.push_back(std::move(K));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<Elem> d_candidates = wI_;
  std::sort(d_candidates.begin(), d_candidates.end());

  for (const auto& K : subsets) {
    CycMat kgram;
    for (int i : K) {
      kgram.emplace_back();
      for (int j : K) kgram.back().push_back(ctx_->gram(i, j));
    }
    if (!K.empty() && !is_positive_definite(kgram)) continue;  // W_K infinite
    std::vector<Elem> wk = ctx_->enumerate_parabolic(K);
    std::vector<int> IK;
    for (int s : K)
      if (std::find(I_.begin(), I_.end(), s) != I_.end()) IK.push_back(s);
    for (const Elem& d : d_candidates) {
      bool minimal = true;
      for (int s : IK)
        if (!ctx_->root_is_positive(d.columns()[s])) { minimal = false; break; }
      if (!minimal) continue;
      ElemSet inter;
      for (const Elem& k : wk) {
        Elem u = k.conjugate(d);
        if (phi(u).is_identity()) inter.insert(u);
      }
      if (inter == wtl) {
        res.status = ParafineResult::kFound;
        res.K = K;
        res.d = d;
        return res;
      }
    }
  }
  res.status = ParafineResult::kNotFound;
  return res;
}

// ---------------------------------------------------------------------------
// cycle notation

std::string cycle_notation(const std::vector<int>& perm,
                           const std::vector<std::string>& names) {
  std::ostringstream os;
  std::vector<bool> seen(perm.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << " ";
      os << names[j];
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    os << ")";
    any = true;
  }
  if (!any) os << "id";
  return os.str();
}

}  // namespace coxdec
