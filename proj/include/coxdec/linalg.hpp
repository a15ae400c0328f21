#ifndef COXDEC_LINALG_HPP
#define COXDEC_LINALG_HPP

#include <vector>

#include "coxdec/scalar.hpp"

namespace coxdec {

// dense matrices over the ambient cyclotomic field
using CycMat = std::vector<std::vector<CycReal>>;

int rank_of(CycMat a);
int kernel_dimension(const CycMat& a);

// sign of det, by exact elimination
int determinant_sign(CycMat a);

// leading principal minors all positive
bool is_positive_definite(const CycMat& gram);

// symmetric positive semidefiniteness, by pivoted symmetric elimination
bool is_positive_semidefinite(CycMat gram);

enum class GramKind { kFinite, kAffine, kIndefinite };
const char* gram_kind_name(GramKind k);

// finite: positive definite; affine: PSD with one-dimensional kernel;
// anything else: indefinite.  Meant for the Gram of one irreducible diagram.
GramKind classify_gram(const CycMat& gram);

// exact rank of a set of row vectors
int rank_of_rows(const std::vector<std::vector<Rational>>& rows);

// does `target` lie in the rational row span of `rows`?
bool in_row_span(const std::vector<std::vector<Rational>>& rows,
                 const std::vector<Rational>& target);

}  // namespace coxdec

#endif
