#include "coxdec/descent.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "coxdec/linalg.hpp"

namespace coxdec {

DescentAlgebra::DescentAlgebra(std::shared_ptr<const GroupTable> table)
    : table_(std::move(table)) {
  const int n = rank();
  descent_mask_.resize(group_size());
  for (int i = 0; i < group_size(); ++i) {
    unsigned mask = 0;
    for (int s = 0; s < n; ++s)
      if (table_->is_right_descent(i, s)) mask |= 1u << s;
    descent_mask_[i] = mask;
  }
}

std::vector<int> DescentAlgebra::mask_to_set(unsigned mask) const {
  std::vector<int> out;
  for (int s = 0; s < rank(); ++s)
    if (mask & (1u << s)) out.push_back(s);
  return out;
}

GroupAlg DescentAlgebra::x_K(unsigned mask) const {
  GroupAlg out = zero();
  for (int i = 0; i < group_size(); ++i)
    if ((descent_mask_[i] & mask) == 0) out[i] = 1;
  return out;
}

GroupAlg DescentAlgebra::product(const GroupAlg& a, const GroupAlg& b) const {
  GroupAlg out = zero();
  std::vector<int> supp_b;
  for (int j = 0; j < group_size(); ++j)
    if (b[j] != 0) supp_b.push_back(j);
  for (int i = 0; i < group_size(); ++i) {
    if (a[i] == 0) continue;
    for (int j : supp_b) out[table_->mult(i, j)] += a[i] * b[j];
  }
  return out;
}

std::vector<Rational> DescentAlgebra::sigma_expand(const GroupAlg& a) const {
  const unsigned subsets = 1u << rank();
  // coefficient on each descent class must be constant
  std::vector<Rational> gamma(subsets, Rational(0));
  std::vector<bool> seen(subsets, false);
  for (int i = 0; i < group_size(); ++i) {
    unsigned e = descent_mask_[i];
    if (!seen[e]) {
      gamma[e] = a[i];
      seen[e] = true;
    } else if (gamma[e] != a[i]) {
      throw std::logic_error("sigma_expand: element is not in the descent algebra");
    }
  }
  // x_K = sum of descent classes disjoint from K; invert over subsets:
  // with G(F) = gamma[S \ F] = sum_{K subset F} a_K,
  // a_F = sum_{K subset F} (-1)^{|F \ K|} G(K)
  const unsigned full = subsets - 1;
  std::vector<Rational> coeff(subsets, Rational(0));
  for (unsigned f = 0; f < subsets; ++f) {
    Rational acc(0);
    for (unsigned k = f;; k = (k - 1) & f) {
      int par = __builtin_popcount(f & ~k) % 2;
      const Rational& g = gamma[full & ~k];
      acc += par ? -g : g;
      if (k == 0) break;
    }
    coeff[f] = acc;
  }
  // exact reconstruction check
  GroupAlg rebuilt = zero();
  for (unsigned f = 0; f < subsets; ++f) {
    if (coeff[f] == 0) continue;
    for (int i = 0; i < group_size(); ++i)
      if ((descent_mask_[i] & f) == 0) rebuilt[i] += coeff[f];
  }
  if (rebuilt != a)
    throw std::logic_error("sigma_expand: reconstruction failed");
  return coeff;
}

std::vector<Rational> DescentAlgebra::theta(unsigned mask) const {
  std::vector<int> K = mask_to_set(mask);
  std::vector<int> reps;
  for (int i = 0; i < group_size(); ++i)
    if ((descent_mask_[i] & mask) == 0) reps.push_back(i);
  std::vector<Rational> values(group_size(), Rational(0));
  for (int w = 0; w < group_size(); ++w) {
    long fixed = 0;
    for (int x : reps)
      if (table_->min_coset_rep(table_->mult(w, x), K) == x) ++fixed;
    values[w] = fixed;
  }
  return values;
}

std::vector<Rational> DescentAlgebra::theta_of(const GroupAlg& a) const {
  std::vector<Rational> coeff = sigma_expand(a);
  std::vector<Rational> values(group_size(), Rational(0));
  for (unsigned f = 0; f < coeff.size(); ++f) {
    if (coeff[f] == 0) continue;
    std::vector<Rational> t = theta(f);
    for (int i = 0; i < group_size(); ++i) values[i] += coeff[f] * t[i];
  }
  return values;
}

// ---------------------------------------------------------------------------

TildeDescent::TildeDescent(const Decomposition& dec,
                           std::shared_ptr<const GroupTable> table)
    : dec_(dec), alg_(table) {
  const GroupTable& tbl = alg_.table();
  const int n = tbl.size();
  std::vector<bool> in_I(tbl.context()->rank(), false);
  for (int s : dec_.I()) in_I[s] = true;
  phi_idx_.resize(n);
  for (int i = 0; i < n; ++i) {
    int cur = GroupTable::kIdentity;
    for (int s : tbl.word(i))
      if (in_I[s]) cur = tbl.right_mult(cur, s);
    phi_idx_[i] = cur;
  }
  for (int i = 0; i < n; ++i)
    if (phi_idx_[i] == GroupTable::kIdentity) wtilde_.push_back(i);
  for (const auto& g : dec_.tilde_gens()) gen_idx_.push_back(tbl.index_of(g.elem));
  if (gen_idx_.size() > 31)
    throw std::domain_error("TildeDescent: too many tilde generators for masks");
  tilde_descent_mask_.assign(n, 0);
  for (int i : wtilde_) {
    unsigned mask = 0;
    for (int g = 0; g < gen_count(); ++g)
      if (tbl.length(tbl.mult(i, gen_idx_[g])) < tbl.length(i)) mask |= 1u << g;
    tilde_descent_mask_[i] = mask;
  }
}

GroupAlg TildeDescent::x_tilde(unsigned maskL) const {
  GroupAlg out = alg_.zero();
  for (int i : wtilde_)
    if ((tilde_descent_mask_[i] & maskL) == 0) out[i] = 1;
  return out;
}

std::vector<Rational> TildeDescent::restilde_coords(unsigned maskK) const {
  const GroupTable& tbl = alg_.table();
  std::vector<int> K = alg_.mask_to_set(maskK);
  std::vector<int> IK;
  for (int s : K)
    if (std::find(dec_.I().begin(), dec_.I().end(), s) != dec_.I().end())
      IK.push_back(s);
  // W_K as an index set, for conjugation membership
  std::vector<int> wk_gens;
  for (int s : K) wk_gens.push_back(tbl.right_mult(GroupTable::kIdentity, s));
  std::vector<bool> in_wk(tbl.size(), false);
  {
    std::vector<int> queue{GroupTable::kIdentity};
    in_wk[GroupTable::kIdentity] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int g : wk_gens) {
        int next = tbl.mult(queue[head], g);
        if (!in_wk[next]) {
          in_wk[next] = true;
          queue.push_back(next);
        }
      }
  }
  std::vector<Rational> coords(1u << gen_count(), Rational(0));
  for (const Elem& d_elem : dec_.wI_elements()) {
    bool minimal = true;
    for (int s : IK)
      if (!dec_.context()->root_is_positive(d_elem.columns()[s])) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    int d = tbl.index_of(d_elem);
    int dinv = tbl.inverse(d);
    unsigned maskL = 0;
    for (int g = 0; g < gen_count(); ++g)
      if (in_wk[tbl.mult(tbl.mult(dinv, gen_idx_[g]), d)]) maskL |= 1u << g;
    coords[maskL] += 1;
  }
  return coords;
}

GroupAlg TildeDescent::restilde(unsigned maskK) const {
  std::vector<Rational> coords = restilde_coords(maskK);
  GroupAlg out = alg_.zero();
  for (unsigned l = 0; l < coords.size(); ++l) {
    if (coords[l] == 0) continue;
    GroupAlg xt = x_tilde(l);
    for (int i = 0; i < alg_.group_size(); ++i) out[i] += coords[l] * xt[i];
  }
  return out;
}

std::vector<Rational> TildeDescent::theta_tilde(unsigned maskL) const {
  const GroupTable& tbl = alg_.table();
  std::vector<int> L;
  for (int g = 0; g < gen_count(); ++g)
    if (maskL & (1u << g)) L.push_back(gen_idx_[g]);
  auto rep = [&](int i) {
    for (;;) {
      int strip = -1;
      for (int t : L)
        if (tbl.length(tbl.mult(i, t)) < tbl.length(i)) { strip = t; break; }
      if (strip < 0) return i;
      i = tbl.mult(i, strip);
    }
  };
  std::vector<int> reps;
  for (int i : wtilde_)
    if ((tilde_descent_mask_[i] & maskL) == 0) reps.push_back(i);
  std::vector<Rational> values(tbl.size(), Rational(0));
  for (int w : wtilde_) {
    long fixed = 0;
    for (int x : reps)
      if (rep(tbl.mult(w, x)) == x) ++fixed;
    values[w] = fixed;
  }
  return values;
}

void TildeDescent::verify_conjugaison(unsigned maskK) const {
  const GroupTable& tbl = alg_.table();
  GroupAlg z = alg_.zero();
  for (const Elem& w : dec_.wI_elements()) z[tbl.index_of(w)] = 1;
  GroupAlg lhs = alg_.product(z, restilde(maskK));
  GroupAlg rhs = alg_.product(alg_.x_K(maskK), z);
  if (lhs != rhs)
    throw std::logic_error("conjugaison: z restilde(x_K) != x_K z");
}

void TildeDescent::verify_morphism() const {
  const unsigned subsets = 1u << alg_.rank();
  std::vector<GroupAlg> images(subsets);
  for (unsigned k = 0; k < subsets; ++k) images[k] = restilde(k);
  for (unsigned k1 = 0; k1 < subsets; ++k1) {
    GroupAlg xk1 = alg_.x_K(k1);
    for (unsigned k2 = 0; k2 < subsets; ++k2) {
      GroupAlg prod = alg_.product(xk1, alg_.x_K(k2));
      std::vector<Rational> coeff = alg_.sigma_expand(prod);
      GroupAlg lhs = alg_.zero();
      for (unsigned f = 0; f < subsets; ++f) {
        if (coeff[f] == 0) continue;
        for (int i = 0; i < alg_.group_size(); ++i)
          lhs[i] += coeff[f] * images[f][i];
      }
      GroupAlg rhs = alg_.product(images[k1], images[k2]);
      if (lhs != rhs)
        throw std::logic_error("morphism: restilde(x y) != restilde(x) restilde(y)");
    }
  }
}

void TildeDescent::verify_image_fixed() const {
  const unsigned subsets = 1u << alg_.rank();
  const unsigned tilde_subsets = 1u << gen_count();

  std::vector<std::vector<Rational>> image_rows;
  for (unsigned k = 0; k < subsets; ++k) image_rows.push_back(restilde_coords(k));

  // the W_I action permutes tilde subsets; orbit sums span the fixed space
  std::vector<std::vector<int>> gen_perms;
  for (int s : dec_.I()) gen_perms.push_back(dec_.action_of(s));
  auto apply_mask = [&](const std::vector<int>& perm, unsigned mask) {
    unsigned out = 0;
    for (int g = 0; g < gen_count(); ++g)
      if (mask & (1u << g)) out |= 1u << perm[g];
    return out;
  };
  std::vector<int> orbit(tilde_subsets);
  for (unsigned m = 0; m < tilde_subsets; ++m) orbit[m] = static_cast<int>(m);
  std::function<int(int)> find = [&](int x) {
    return orbit[x] == x ? x : orbit[x] = find(orbit[x]);
  };
  for (const auto& perm : gen_perms)
    for (unsigned m = 0; m < tilde_subsets; ++m) {
      unsigned im = apply_mask(perm, m);
      if (find(m) != find(im)) orbit[find(m)] = find(im);
    }
  std::vector<std::vector<Rational>> fixed_rows;
  for (unsigned root = 0; root < tilde_subsets; ++root) {
    if (find(root) != static_cast<int>(root)) continue;
    std::vector<Rational> row(tilde_subsets, Rational(0));
    for (unsigned m = 0; m < tilde_subsets; ++m)
      if (find(m) == static_cast<int>(root)) row[m] = 1;
    fixed_rows.push_back(std::move(row));
  }

  // both containments, by exact rank
  for (const auto& row : image_rows)
    if (!in_row_span(fixed_rows, row))
      throw std::logic_error("image_fixed: restilde image is not W_I-fixed");
  for (const auto& row : fixed_rows)
    if (!in_row_span(image_rows, row))
      throw std::logic_error("image_fixed: a fixed vector is outside the image");
}

void TildeDescent::verify_diagram() const {
  const unsigned subsets = 1u << alg_.rank();
  const unsigned tilde_subsets = 1u << gen_count();
  std::vector<std::vector<Rational>> theta_tilde_cache(tilde_subsets);
  for (unsigned k = 0; k < subsets; ++k) {
    std::vector<Rational> lhs = alg_.theta(k);  // restricted to the kernel below
    std::vector<Rational> coords = restilde_coords(k);
    std::vector<Rational> rhs(alg_.group_size(), Rational(0));
    for (unsigned l = 0; l < tilde_subsets; ++l) {
      if (coords[l] == 0) continue;
      if (theta_tilde_cache[l].empty()) theta_tilde_cache[l] = theta_tilde(l);
      for (int i : wtilde_) rhs[i] += coords[l] * theta_tilde_cache[l][i];
    }
    for (int i : wtilde_)
      if (lhs[i] != rhs[i])
        throw std::logic_error("diagram: Res theta(x_K) != theta~ restilde(x_K)");
  }
}

}  // namespace coxdec
