#include "coxdec/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "coxdec/linalg.hpp"

namespace coxdec {

// ---------------------------------------------------------------------------
// context

CoxContext::CoxContext(CoxMatrix matrix) : matrix_(std::move(matrix)) {
  matrix_.validate();
  field_ = CycField::make(matrix_.conductor());
  const int n = rank();
  gram_.assign(n, std::vector<CycReal>(n, field_->zero()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        gram_[i][j] = field_->one();
      } else {
        // -cos(pi/m), with the convention -1 for an infinite bond
        gram_[i][j] = -field_->cos_pi_over(matrix_.m[i][j]);
      }
    }
  }
}

ContextPtr CoxContext::make(CoxMatrix matrix) {
  return ContextPtr(new CoxContext(std::move(matrix)));
}

CycReal CoxContext::inner(const RootVec& v, const RootVec& w) const {
  CycReal acc = field_->zero();
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (w[j].is_zero()) continue;
      acc += v[i] * gram_[i][j] * w[j];
    }
  }
  return acc;
}

RootVec CoxContext::zero_vec() const {
  return RootVec(rank(), field_->zero());
}

RootVec CoxContext::simple_root(int s) const {
  RootVec v = zero_vec();
  v[s] = field_->one();
  return v;
}

void CoxContext::reflect_simple(int s, RootVec& v) const {
  // v_s -= 2 <v, alpha_s>
  CycReal pairing = field_->zero();
  for (int j = 0; j < rank(); ++j)
    if (!v[j].is_zero()) pairing += gram_[s][j] * v[j];
  v[s] -= pairing * Rational(2);
}

RootVec CoxContext::reflect_by(const RootVec& root, const RootVec& v) const {
  CycReal c = inner(v, root) * Rational(2);
  RootVec out = v;
  for (int i = 0; i < rank(); ++i) out[i] -= c * root[i];
  return out;
}

bool CoxContext::root_is_positive(const RootVec& v) const {
  for (const auto& c : v) {
    int s = c.sign();
    if (s != 0) return s > 0;
  }
  throw std::logic_error("root_is_positive: zero vector is not a root");
}

std::vector<RootVec> CoxContext::identity_columns() const {
  std::vector<RootVec> cols;
  for (int j = 0; j < rank(); ++j) cols.push_back(simple_root(j));
  return cols;
}

void CoxContext::right_mult_update(std::vector<RootVec>& cols, int s) const {
  // new col_j = col_j - 2 B[j][s] col_s; new col_s = -col_s
  const int n = rank();
  RootVec old_s = cols[s];
  for (int j = 0; j < n; ++j) {
    if (j == s) {
      for (auto& c : cols[s]) c = -c;
      continue;
    }
    const CycReal& b = gram_[j][s];
    if (b.is_zero()) continue;
    CycReal f = b * Rational(2);
    for (int i = 0; i < n; ++i) cols[j][i] -= f * old_s[i];
  }
}

std::vector<int> CoxContext::extract_word(std::vector<RootVec>& inv_cols) const {
  // inv_cols are the columns of w^{-1}: the least s with w^{-1}(alpha_s)
  // negative is the first letter of the ShortLex word of w
  std::vector<int> word;
  const int n = rank();
  for (;;) {
    int s = -1;
    for (int j = 0; j < n; ++j) {
      bool zero = true;
      int sg = 0;
      for (int i = 0; i < n; ++i) {
        sg = inv_cols[j][i].sign();
        if (sg != 0) { zero = false; break; }
      }
      if (zero) throw std::logic_error("extract_word: singular matrix");
      if (sg < 0) { s = j; break; }
    }
    if (s < 0) break;  // all columns positive: the identity... or done
    word.push_back(s);
    right_mult_update(inv_cols, s);
  }
  return word;
}

Elem CoxContext::from_canonical(std::vector<int> word) const {
  std::vector<RootVec> cols = identity_columns();
  for (int s : word) right_mult_update(cols, s);
  std::vector<RootVec> inv = identity_columns();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    right_mult_update(inv, *it);
  return Elem(shared_from_this(), std::move(word), std::move(cols), std::move(inv));
}

Elem CoxContext::identity_elem() const { return from_canonical({}); }

Elem CoxContext::generator_elem(int s) const { return from_canonical({s}); }

Elem CoxContext::element_from_word(std::span<const int> word) const {
  for (int s : word)
    if (s < 0 || s >= rank()) throw std::invalid_argument("bad generator index");
  std::vector<RootVec> inv = identity_columns();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    right_mult_update(inv, *it);
  std::vector<int> canonical = extract_word(inv);
  return from_canonical(std::move(canonical));
}

// ---------------------------------------------------------------------------
// elements

RootVec Elem::apply(const RootVec& v) const {
  const int n = static_cast<int>(cols_.size());
  RootVec out(n, ctx_->field()->zero());
  for (int j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < n; ++i) out[i] += cols_[j][i] * v[j];
  }
  return out;
}

RootVec Elem::apply_inverse(const RootVec& v) const {
  const int n = static_cast<int>(inv_cols_.size());
  RootVec out(n, ctx_->field()->zero());
  for (int j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < n; ++i) out[i] += inv_cols_[j][i] * v[j];
  }
  return out;
}

std::vector<int> Elem::right_descents() const {
  std::vector<int> ds;
  for (int s = 0; s < static_cast<int>(cols_.size()); ++s)
    if (!ctx_->root_is_positive(cols_[s])) ds.push_back(s);
  return ds;
}

std::vector<int> Elem::left_descents() const {
  std::vector<int> ds;
  for (int s = 0; s < static_cast<int>(inv_cols_.size()); ++s)
    if (!ctx_->root_is_positive(inv_cols_[s])) ds.push_back(s);
  return ds;
}

Elem Elem::operator*(const Elem& o) const {
  assert(ctx_ == o.ctx_);
  std::vector<int> joined = word_;
  joined.insert(joined.end(), o.word_.begin(), o.word_.end());
  return ctx_->element_from_word(joined);
}

Elem Elem::inverse() const {
  std::vector<int> rev(word_.rbegin(), word_.rend());
  return ctx_->element_from_word(rev);
}

Elem Elem::conjugate(const Elem& by) const {
  std::vector<int> w = by.word_;
  w.insert(w.end(), word_.begin(), word_.end());
  w.insert(w.end(), by.word_.rbegin(), by.word_.rend());
  return ctx_->element_from_word(w);
}

bool Elem::operator<(const Elem& o) const {
  if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
  return word_ < o.word_;
}

std::size_t Elem::hash() const {
  std::size_t h = word_.size();
  for (int s : word_) h = h * 1099511628211ull + static_cast<std::size_t>(s + 1);
  return h;
}

std::string Elem::str() const {
  if (word_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) os << ".";
    os << ctx_->matrix().labels[word_[i]];
  }
  return os.str();
}

std::size_t matrix_hash(const std::vector<RootVec>& cols) {
  std::size_t h = 0;
  for (const auto& col : cols)
    for (const auto& c : col) h = h * 0x100000001b3ull ^ c.hash();
  return h;
}

bool matrix_equal(const std::vector<RootVec>& a, const std::vector<RootVec>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < a[j].size(); ++i)
      if (!(a[j][i] == b[j][i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// reflections

Elem CoxContext::reflection_from_root(const RootVec& root) const {
  assert((inner(root, root) == field_->one()));
  std::vector<RootVec> cols;
  for (int j = 0; j < rank(); ++j) cols.push_back(reflect_by(root, simple_root(j)));
  // a reflection is an involution: matrix equals its own inverse
  std::vector<RootVec> inv = cols;
  std::vector<int> word = extract_word(inv);
  Elem e = from_canonical(std::move(word));
  if (!matrix_equal(e.columns(), cols))
    throw std::invalid_argument("reflection_from_root: not a root of this system");
  return e;
}

std::optional<RootVec> CoxContext::reflection_root(const Elem& e) const {
  const int len = e.length();
  if (len % 2 == 0) return std::nullopt;
  const int m = len / 2;
  // candidate root from the palindromic form of a reduced expression
  RootVec gamma = simple_root(e.word()[m]);
  for (int i = m - 1; i >= 0; --i) reflect_simple(e.word()[i], gamma);
  if (!root_is_positive(gamma))
    for (auto& c : gamma) c = -c;
  std::vector<RootVec> cols;
  for (int j = 0; j < rank(); ++j) cols.push_back(reflect_by(gamma, simple_root(j)));
  if (!matrix_equal(cols, e.columns())) return std::nullopt;
  return gamma;
}

std::vector<Reflection> CoxContext::n_set(const Elem& w) const {
  // for w = s_1...s_k reduced: t_i = s_k ... s_{i+1} s_i s_{i+1} ... s_k
  const auto& word = w.word();
  const int k = static_cast<int>(word.size());
  std::vector<Reflection> out;
  for (int i = 0; i < k; ++i) {
    RootVec gamma = simple_root(word[i]);
    for (int j = i + 1; j < k; ++j) {
      // gamma <- s_{word[j]}(gamma), building the suffix conjugate
      reflect_simple(word[j], gamma);
    }
    if (!root_is_positive(gamma))
      for (auto& c : gamma) c = -c;
    out.push_back(Reflection{reflection_from_root(gamma), gamma});
  }
  // the k reflections are pairwise distinct
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].elem == out[j].elem)
        throw std::logic_error("n_set: repeated reflection (word not reduced?)");
  return out;
}

OrderResult CoxContext::order_of_product(const Elem& a, const Elem& b,
                                         int bound) const {
  auto ra = reflection_root(a);
  auto rb = reflection_root(b);
  if (ra && rb) {
    if (a == b) return {OrderResult::kFinite, 1};
    CycReal c = -inner(*ra, *rb);
    if (auto m = c.recognize_cos()) return {OrderResult::kFinite, *m};
    if ((c - field_->one()).sign() >= 0) return {OrderResult::kInfinite, 0};
    if ((-c - field_->one()).sign() >= 0) return {OrderResult::kInfinite, 0};
    // cos(pi - pi/m) = -cos(pi/m): rotation by 2(pi - pi/m) still has order m
    if (auto m = (-c).recognize_cos()) return {OrderResult::kFinite, *m};
    // fall through to iteration for other angles
  }
  Elem p = a * b;
  Elem pk = p;
  for (int k = 1; k <= bound; ++k) {
    if (pk.is_identity()) return {OrderResult::kFinite, k};
    pk = pk * p;
  }
  return {OrderResult::kUnknown, 0};
}

// ---------------------------------------------------------------------------
// cosets

Elem CoxContext::min_coset_rep(const Elem& w, std::span<const int> K,
                               Side side) const {
  Elem cur = w;
  for (;;) {
    int found = -1;
    for (int s : K) {
      bool descent = (side == Side::kRight)
                         ? !root_is_positive(cur.columns()[s])
                         : !root_is_positive(cur.inverse_columns()[s]);
      if (descent) { found = s; break; }
    }
    if (found < 0) return cur;
    std::vector<int> word;
    if (side == Side::kRight) {
      word = cur.word();
      word.push_back(found);
    } else {
      word.push_back(found);
      word.insert(word.end(), cur.word().begin(), cur.word().end());
    }
    cur = element_from_word(word);
  }
}

Elem CoxContext::min_double_coset_rep(const Elem& w, std::span<const int> B,
                                      std::span<const int> C) const {
  // greedy stripping reaches the unique distinguished representative
  Elem cur = w;
  for (;;) {
    Elem next = min_coset_rep(cur, B, Side::kLeft);
    next = min_coset_rep(next, C, Side::kRight);
    if (next.length() == cur.length()) return next;
    cur = next;
  }
}

int CoxContext::deodhar(const Elem& w, int s, std::span<const int> C) const {
  auto minimal_in_coset = [&](const Elem& e) {
    for (int c : C)
      if (!root_is_positive(e.columns()[c])) return false;
    return true;
  };
  if (!minimal_in_coset(w))
    throw std::invalid_argument("deodhar: w is not minimal in wW_C");
  Elem sw = generator_elem(s) * w;
  if (minimal_in_coset(sw))
    throw std::invalid_argument("deodhar: sw is minimal in swW_C");
  if (sw.length() <= w.length())
    throw std::logic_error("deodhar: expected l(sw) > l(w)");
  // sw = wr with r in C
  Elem r = w.inverse() * sw;
  for (int c : C)
    if (r == generator_elem(c)) return c;
  throw std::logic_error("deodhar: w^{-1} s w is not a generator of C");
}

// ---------------------------------------------------------------------------
// enumeration

bool CoxContext::is_finite() const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!finite_) finite_ = is_positive_definite(gram_);
  return *finite_;
}

namespace {

struct BfsState {
  std::vector<std::vector<RootVec>> mats;
  std::vector<std::vector<int>> words;
  std::unordered_multimap<std::size_t, int> by_hash;

  int find(const std::vector<RootVec>& cols, std::size_t h) const {
    auto range = by_hash.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (matrix_equal(mats[it->second], cols)) return it->second;
    return -1;
  }

  int add(std::vector<RootVec> cols, std::vector<int> word, std::size_t h) {
    int idx = static_cast<int>(mats.size());
    mats.push_back(std::move(cols));
    words.push_back(std::move(word));
    by_hash.emplace(h, idx);
    return idx;
  }
};

}  // namespace

std::vector<Elem> CoxContext::enumerate_ball(int radius) const {
  BfsState st;
  std::vector<RootVec> id = identity_columns();
  st.add(id, {}, matrix_hash(id));
  std::size_t head = 0;
  while (head < st.mats.size()) {
    int i = static_cast<int>(head++);
    if (static_cast<int>(st.words[i].size()) >= radius) continue;
    for (int s = 0; s < rank(); ++s) {
      std::vector<RootVec> next = st.mats[i];
      right_mult_update(next, s);
      std::size_t h = matrix_hash(next);
      if (st.find(next, h) >= 0) continue;
      std::vector<int> w = st.words[i];
      w.push_back(s);
      st.add(std::move(next), std::move(w), h);
    }
  }
  std::vector<Elem> out;
  out.reserve(st.mats.size());
  for (std::size_t i = 0; i < st.mats.size(); ++i)
    out.push_back(from_canonical(st.words[i]));
  return out;
}

std::shared_ptr<const GroupTable> CoxContext::enumerate_group() const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto cached = table_.lock()) return cached;
  }
  if (!is_finite())
    throw std::domain_error("enumerate_group: Gram form is not positive definite");

  auto table = std::make_shared<GroupTable>();
  table->ctx_ = shared_from_this();
  BfsState st;
  std::vector<RootVec> id = identity_columns();
  st.add(id, {}, matrix_hash(id));
  std::vector<std::vector<int>> rmult;
  rmult.emplace_back(rank(), -1);
  std::size_t head = 0;
  while (head < st.mats.size()) {
    int i = static_cast<int>(head++);
    for (int s = 0; s < rank(); ++s) {
      if (rmult[i][s] >= 0) continue;
      std::vector<RootVec> next = st.mats[i];
      right_mult_update(next, s);
      std::size_t h = matrix_hash(next);
      int j = st.find(next, h);
      if (j < 0) {
        std::vector<int> w = st.words[i];
        w.push_back(s);
        j = st.add(std::move(next), std::move(w), h);
        rmult.emplace_back(rank(), -1);
      }
      rmult[i][s] = j;
      rmult[j][s] = i;  // s is an involution
    }
  }
  table->words_ = std::move(st.words);
  table->right_mult_ = std::move(rmult);
  const int n = table->size();
  table->inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const auto& w = table->words_[i];
    int inv = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      inv = table->right_mult_[inv][*it];
    table->inverse_[i] = inv;
  }
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto cached = table_.lock()) return cached;
  table_ = table;
  return table;
}

std::vector<Elem> CoxContext::enumerate_parabolic(std::span<const int> K,
                                                  int max_length) const {
  std::vector<int> gens(K.begin(), K.end());
  std::sort(gens.begin(), gens.end());
  BfsState st;
  std::vector<RootVec> id = identity_columns();
  st.add(id, {}, matrix_hash(id));
  std::size_t head = 0;
  while (head < st.mats.size()) {
    int i = static_cast<int>(head++);
    if (max_length >= 0 && static_cast<int>(st.words[i].size()) >= max_length)
      continue;
    for (int s : gens) {
      std::vector<RootVec> next = st.mats[i];
      right_mult_update(next, s);
      std::size_t h = matrix_hash(next);
      if (st.find(next, h) >= 0) continue;
      std::vector<int> w = st.words[i];
      w.push_back(s);
      st.add(std::move(next), std::move(w), h);
      if (st.mats.size() > 2000000)
        throw std::domain_error("enumerate_parabolic: subgroup too large");
    }
  }
  std::vector<Elem> out;
  out.reserve(st.mats.size());
  for (std::size_t i = 0; i < st.mats.size(); ++i)
    out.push_back(from_canonical(st.words[i]));
  return out;
}

// ---------------------------------------------------------------------------
// group table

int GroupTable::mult_word(int a, std::span<const int> w) const {
  int cur = a;
  for (int s : w) cur = right_mult_[cur][s];
  return cur;
}

int GroupTable::mult(int a, int b) const { return mult_word(a, words_[b]); }

Elem GroupTable::element(int i) const {
  return ctx_->element_from_word(words_[i]);
}

int GroupTable::min_coset_rep(int i, std::span<const int> K) const {
  int cur = i;
  for (;;) {
    int found = -1;
    for (int s : K)
      if (is_right_descent(cur, s)) { found = s; break; }
    if (found < 0) return cur;
    cur = right_mult_[cur][found];
  }
}

}  // namespace coxdec
