#ifndef COXDEC_DESCENT_HPP
#define COXDEC_DESCENT_HPP

#include <memory>
#include <vector>

#include "coxdec/coxeter.hpp"
#include "coxdec/decomp.hpp"

namespace coxdec {

// element of the rational group algebra, dense over group-table indices
using GroupAlg = std::vector<Rational>;

// Solomon descent algebra of a fully enumerated finite group.  Subsets of S
// are bitmasks; x_K sums the minimal coset representatives of W/W_K.
class DescentAlgebra {
 public:
  explicit DescentAlgebra(std::shared_ptr<const GroupTable> table);

  const GroupTable& table() const { return *table_; }
  int rank() const { return table_->context()->rank(); }
  int group_size() const { return table_->size(); }
  unsigned descent_mask(int i) const { return descent_mask_[i]; }

  GroupAlg zero() const { return GroupAlg(group_size(), Rational(0)); }
  GroupAlg x_K(unsigned mask) const;
  GroupAlg product(const GroupAlg& a, const GroupAlg& b) const;

  // coefficients over the x_K basis (indexed by subset mask); throws
  // std::logic_error when the element is not in the descent algebra
  std::vector<Rational> sigma_expand(const GroupAlg& a) const;

  // permutation character of W/W_K: value at each group element
  std::vector<Rational> theta(unsigned mask) const;
  // linear extension of theta to any element of the descent algebra
  std::vector<Rational> theta_of(const GroupAlg& a) const;

  std::vector<int> mask_to_set(unsigned mask) const;

 private:
  std::shared_ptr<const GroupTable> table_;
  std::vector<unsigned> descent_mask_;
};

// The relative machinery: Sigma(Wtilde) inside QW for a decomposition of a
// finite group, and the restriction homomorphism between the two algebras.
class TildeDescent {
 public:
  TildeDescent(const Decomposition& dec, std::shared_ptr<const GroupTable> table);

  const DescentAlgebra& ambient() const { return alg_; }
  int gen_count() const { return static_cast<int>(gen_idx_.size()); }
  const std::vector<int>& kernel_indices() const { return wtilde_; }

  GroupAlg x_tilde(unsigned maskL) const;
  // tilde-descent coordinates of restilde(x_K): count per tilde subset mask
  std::vector<Rational> restilde_coords(unsigned maskK) const;
  GroupAlg restilde(unsigned maskK) const;

  // theta~ for Wtilde/Wtilde_L, defined on kernel indices (dense over W)
  std::vector<Rational> theta_tilde(unsigned maskL) const;

  // z restilde(x_K) = x_K z, exactly
  void verify_conjugaison(unsigned maskK) const;
  // restilde is multiplicative on all basis pairs
  void verify_morphism() const;
  // image of restilde = the W_I-fixed subspace of Sigma(Wtilde)
  void verify_image_fixed() const;
  // Res o theta = theta~ o restilde on the kernel, for all K
  void verify_diagram() const;

 private:
  const Decomposition& dec_;
  DescentAlgebra alg_;
  std::vector<int> phi_idx_;
  std::vector<int> wtilde_;       // indices of the kernel
  std::vector<int> gen_idx_;      // table index per tilde generator
  std::vector<unsigned> tilde_descent_mask_;  // per group index (kernel only)
};

}  // namespace coxdec

#endif
