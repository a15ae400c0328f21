#ifndef COXDEC_DECOMP_HPP
#define COXDEC_DECOMP_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "coxdec/coxeter.hpp"
#include "coxdec/rootsys.hpp"

namespace coxdec {

// Result of checking that no odd-bond path joins I to its complement.
struct PartitionCheck {
  bool ok = true;
  std::vector<int> witness_path;  // generator indices of an odd path, when !ok
};

PartitionCheck validate_partition(const CoxMatrix& matrix, const std::vector<int>& I);

// A canonical generator of the normal subgroup: x t x^{-1} with t in J and
// x minimal in x W_{I cap t-perp}.
struct TildeGen {
  Elem x;
  int t = -1;
  Elem elem;
  RootVec root;  // x(alpha_t)
};

struct ComponentInfo {
  std::vector<int> component_of;  // per generator of tilde J
  int count = 0;

  std::vector<std::vector<int>> members() const;
};

class Decomposition {
 public:
  // Throws std::invalid_argument when some element of I is conjugate to an
  // element of J.  With wI_bound >= 0, W_I is only explored up to that word
  // length and the generator list is flagged partial.
  Decomposition(ContextPtr ctx, std::vector<int> I, int wI_bound = -1);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<int>& I() const { return I_; }
  const std::vector<int>& J() const { return J_; }
  bool partial() const { return partial_; }
  bool wI_finite() const { return wI_finite_; }
  const std::vector<Elem>& wI_elements() const { return wI_; }

  // the retraction W -> W_I killing the letters of J
  Elem phi(const Elem& w) const;
  bool in_tilde_subgroup(const Elem& w) const { return phi(w).is_identity(); }
  // w = wtilde * a with a = phi(w)
  std::pair<Elem, Elem> factorize(const Elem& w) const;

  const std::vector<TildeGen>& tilde_gens() const { return gens_; }
  int gen_count() const { return static_cast<int>(gens_.size()); }
  int nu(int gen) const { return gens_[gen].t; }
  int find_gen(const Elem& e) const;

  // minimal double coset representative controlling the bond of two
  // generators
  Elem f_elem(int i, int j) const;
  // the five-case bond formula; kInfiniteBond encodes infinity
  int m_tilde(int i, int j) const;

  const CoxMatrix& tilde_matrix() const;
  CoxMatrix tilde_matrix_via_roots() const;
  std::vector<std::vector<OrderResult>> tilde_orders(
      int bound = CoxContext::kDefaultOrderBound) const;

  // fresh geometric representation of (Wtilde, Jtilde) built from the
  // tilde matrix alone
  const ContextPtr& tilde_context() const;

  int ell_J(const Elem& w) const;
  int ell_I(const Elem& w) const;
  // expression of an element of the kernel as a word in the tilde
  // generators, by greedy left descent
  std::vector<int> tilde_word(const Elem& wt) const;
  // length of that word measured in the fresh representation
  int tilde_length(const Elem& wt) const;

  std::vector<int> palindromic_expr(int gen) const;

  // conjugation action of a generator of I, as a permutation of tilde J;
  // verified to be a diagram automorphism of the tilde matrix
  std::vector<int> action_of(int s) const;

  // connected components of the tilde diagram, with the nu-surjectivity
  // and transitivity checks of the component corollaries
  ComponentInfo components() const;

  // K+ = {w t w^{-1} : w in W_{I cap K}, t in J cap K}, as generator indices
  std::vector<int> k_plus(const std::vector<int>& K) const;

  // N(t) cap Wtilde = {t}; throws std::logic_error on failure
  void verify_canonical(int gen) const;

  // exhaustive parabolic-compatibility checks for one K (finite W only)
  void verify_parabolic(const std::vector<int>& K) const;

  // bijectivity of W_I x Xtilde_L -> X_L for one L (finite W only)
  void verify_produit_x(const std::vector<int>& L) const;

  struct ParafineResult {
    enum Status { kFound, kInfiniteSkip, kNotFound } status;
    std::vector<int> K;
    Elem d;
  };
  // witness (K, d) with W_K finite and Wtilde_L = Wtilde cap d W_K d^{-1}
  ParafineResult verify_parafine(const std::vector<int>& L) const;

 private:
  void build_gens(int wI_bound);
  std::vector<int> perp_in_I(int t) const;
  const GroupTable& group_table() const;

  ContextPtr ctx_;
  std::vector<int> I_, J_;
  bool wI_finite_ = false;
  bool partial_ = false;
  std::vector<Elem> wI_;
  std::vector<TildeGen> gens_;
  std::map<std::pair<int, std::vector<int>>, int> gen_index_;  // (t, word of x)
  mutable std::mutex cache_mutex_;
  mutable std::optional<CoxMatrix> tilde_matrix_;
  mutable ContextPtr tilde_ctx_;
  mutable std::shared_ptr<const GroupTable> table_;
};

// ---------------------------------------------------------------------------
// report

struct DecompReport {
  std::string ambient_name;
  std::vector<std::string> I_labels;
  bool partial = false;
  std::vector<std::string> gen_words;        // canonical word per generator
  std::vector<std::string> gen_nu;           // label of nu(gen)
  std::vector<std::string> gen_roots;        // root coordinates, printed
  CoxMatrix tilde;                           // with node labels
  std::vector<std::pair<std::string, std::string>> actions;  // (label, cycles)
  std::vector<std::vector<int>> action_perms;
  std::vector<std::vector<int>> component_members;
  std::vector<std::string> component_types;  // recognized labels
  std::vector<std::string> component_gram;   // finite / affine / indefinite
};

DecompReport build_report(const Decomposition& dec, const std::string& ambient_name);
std::string render_report(const DecompReport& report);
std::string render_dot(const DecompReport& report);

std::string cycle_notation(const std::vector<int>& perm,
                           const std::vector<std::string>& names);

}  // namespace coxdec

#endif
