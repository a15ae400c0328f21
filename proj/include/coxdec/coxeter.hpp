#ifndef COXDEC_COXETER_HPP
#define COXDEC_COXETER_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxdec/coxmatrix.hpp"
#include "coxdec/scalar.hpp"

namespace coxdec {

class CoxContext;
using ContextPtr = std::shared_ptr<const CoxContext>;

// coordinates over the simple roots
using RootVec = std::vector<CycReal>;

// Group element: canonical (ShortLex-minimal reduced) word plus the exact
// matrix of the standard geometric representation and its inverse.  Columns
// of the matrix are the images w(alpha_s) in root coordinates.
class Elem {
 public:
  Elem() = default;

  const ContextPtr& context() const { return ctx_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  const std::vector<RootVec>& columns() const { return cols_; }
  const std::vector<RootVec>& inverse_columns() const { return inv_cols_; }

  RootVec apply(const RootVec& v) const;          // w(v)
  RootVec apply_inverse(const RootVec& v) const;  // w^{-1}(v)

  std::vector<int> right_descents() const;  // {s : l(ws) < l(w)}
  std::vector<int> left_descents() const;

  Elem operator*(const Elem& o) const;
  Elem inverse() const;
  Elem conjugate(const Elem& by) const;  // by * this * by^{-1}

  bool operator==(const Elem& o) const { return word_ == o.word_; }
  bool operator!=(const Elem& o) const { return word_ != o.word_; }
  bool operator<(const Elem& o) const;  // ShortLex on canonical words

  std::size_t hash() const;
  std::string str() const;  // letters joined by '.', "e" for the identity

 private:
  friend class CoxContext;
  Elem(ContextPtr ctx, std::vector<int> word, std::vector<RootVec> cols,
       std::vector<RootVec> inv_cols)
      : ctx_(std::move(ctx)),
        word_(std::move(word)),
        cols_(std::move(cols)),
        inv_cols_(std::move(inv_cols)) {}

  ContextPtr ctx_;
  std::vector<int> word_;
  std::vector<RootVec> cols_;
  std::vector<RootVec> inv_cols_;
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const { return e.hash(); }
};

// Reflection together with its positive root.
struct Reflection {
  Elem elem;
  RootVec root;
};

struct OrderResult {
  enum Kind { kFinite, kInfinite, kUnknown } kind;
  int value = 0;  // set when finite

  bool finite() const { return kind == kFinite; }
  bool operator==(const OrderResult& o) const {
    return kind == o.kind && (kind != kFinite || value == o.value);
  }
};

// Fully enumerated finite group: canonical words and integer multiplication
// tables; matrices are discarded after the BFS.
class GroupTable {
 public:
  int size() const { return static_cast<int>(words_.size()); }
  const ContextPtr& context() const { return ctx_; }
  const std::vector<int>& word(int i) const { return words_[i]; }
  int length(int i) const { return static_cast<int>(words_[i].size()); }
  int right_mult(int i, int s) const { return right_mult_[i][s]; }
  int inverse(int i) const { return inverse_[i]; }
  static constexpr int kIdentity = 0;

  int mult(int a, int b) const;                      // fold word of b
  int mult_word(int a, std::span<const int> w) const;
  int index_of_word(std::span<const int> w) const { return mult_word(0, w); }
  int index_of(const Elem& e) const { return index_of_word(e.word()); }
  Elem element(int i) const;

  bool is_right_descent(int i, int s) const {
    return length(right_mult_[i][s]) < length(i);
  }
  bool is_left_descent(int i, int s) const {
    return is_right_descent(inverse_[i], s);
  }

  // strip right descents inside K: the minimal representative of i*W_K
  int min_coset_rep(int i, std::span<const int> K) const;

 private:
  friend class CoxContext;
  ContextPtr ctx_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> right_mult_;
  std::vector<int> inverse_;
};

enum class Side { kLeft, kRight };

class CoxContext : public std::enable_shared_from_this<CoxContext> {
 public:
  static ContextPtr make(CoxMatrix matrix);

  const CoxMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  const FieldPtr& field() const { return field_; }
  int bond(int s, int t) const { return matrix_.m[s][t]; }
  const CycReal& gram(int s, int t) const { return gram_[s][t]; }
  const std::vector<std::vector<CycReal>>& gram_matrix() const { return gram_; }

  // <v, w> under the Gram form
  CycReal inner(const RootVec& v, const RootVec& w) const;

  RootVec zero_vec() const;
  RootVec simple_root(int s) const;
  // v  |->  v - <v, alpha_s^vee> alpha_s
  void reflect_simple(int s, RootVec& v) const;
  // v  |->  v - <v, root^vee> root   (root must be a unit vector)
  RootVec reflect_by(const RootVec& root, const RootVec& v) const;

  // a root of W Pi has pure sign; true iff it lies in Phi_+
  bool root_is_positive(const RootVec& v) const;

  Elem identity_elem() const;
  Elem generator_elem(int s) const;
  Elem element_from_word(std::span<const int> word) const;
  Elem reflection_from_root(const RootVec& root) const;

  // positive root gamma with e == s_gamma, if e is a reflection
  std::optional<RootVec> reflection_root(const Elem& e) const;

  // N(w) = {t in T : l(wt) < l(w)}, listed with positive roots
  std::vector<Reflection> n_set(const Elem& w) const;

  OrderResult order_of_product(const Elem& a, const Elem& b,
                               int bound = kDefaultOrderBound) const;

  Elem min_coset_rep(const Elem& w, std::span<const int> K, Side side) const;
  // the minimal element of W_B w W_C
  Elem min_double_coset_rep(const Elem& w, std::span<const int> B,
                            std::span<const int> C) const;

  // Deodhar: for w minimal in wW_C and s with sw not minimal in swW_C,
  // returns the r in C with sw = wr.
  int deodhar(const Elem& w, int s, std::span<const int> C) const;

  // positive definiteness of the Gram form, by leading principal minors
  bool is_finite() const;

  std::vector<Elem> enumerate_ball(int radius) const;
  // throws std::domain_error when the Gram form is not positive definite
  std::shared_ptr<const GroupTable> enumerate_group() const;

  // the standard parabolic subgroup on a generator subset; with
  // max_length >= 0 only the ball of that radius is enumerated
  std::vector<Elem> enumerate_parabolic(std::span<const int> K,
                                        int max_length = -1) const;

  static constexpr int kDefaultOrderBound = 200;

 private:
  explicit CoxContext(CoxMatrix matrix);

  // extract the canonical word of w given the columns of w^{-1} (destroyed)
  std::vector<int> extract_word(std::vector<RootVec>& inv_cols) const;
  std::vector<RootVec> identity_columns() const;
  void right_mult_update(std::vector<RootVec>& cols, int s) const;
  Elem from_canonical(std::vector<int> word) const;

  CoxMatrix matrix_;
  FieldPtr field_;
  std::vector<std::vector<CycReal>> gram_;
  mutable std::optional<bool> finite_;
  // weak: the table holds the context alive, not the other way around
  mutable std::weak_ptr<const GroupTable> table_;
  mutable std::mutex mutex_;
};

std::size_t matrix_hash(const std::vector<RootVec>& cols);
bool matrix_equal(const std::vector<RootVec>& a, const std::vector<RootVec>& b);

}  // namespace coxdec

#endif
