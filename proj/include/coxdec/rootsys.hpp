#ifndef COXDEC_ROOTSYS_HPP
#define COXDEC_ROOTSYS_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxdec/coxeter.hpp"
#include "coxdec/linalg.hpp"

namespace coxdec {

struct Validation {
  bool ok = true;
  std::string message;  // names the failing axiom and pair when !ok

  static Validation pass() { return {}; }
  static Validation fail(std::string msg) { return {false, std::move(msg)}; }
};

// A based root system in the generalized sense: simple roots Delta living in
// the coordinate space of an ambient context, with the ambient form.  The
// ambient standard system has Delta = the simple basis itself.
struct BasedRootSystem {
  ContextPtr ambient;
  std::vector<RootVec> simples;

  int size() const { return static_cast<int>(simples.size()); }
  CycReal pairing(const RootVec& a, const RootVec& b) const {
    return ambient->inner(a, b);
  }
  RootVec reflect(int i, const RootVec& v) const {
    return ambient->reflect_by(simples[i], v);
  }
  CycMat gram() const;
};

BasedRootSystem standard_system(const ContextPtr& ctx);

// (i) positive independence (exact Fourier-Motzkin), (ii) unit norms,
// (iii) pairwise products in -COS
Validation validate(const BasedRootSystem& brs);

// true iff some nonzero nonnegative combination of the vectors vanishes
bool positively_dependent(const ContextPtr& ctx, const std::vector<RootVec>& vecs);

struct RootClosure {
  std::vector<RootVec> roots;  // positive roots, in discovery order
  bool complete = false;       // closure reached before the depth bound
};

// closure of Delta under its own reflections, keeping ambient-positive
// vectors, up to the given generator-application depth
RootClosure positive_roots(const BasedRootSystem& brs, int depth);

// canonical Coxeter generators of the reflection subgroup generated by the
// given reflections; each returned with its positive root
std::vector<Reflection> chi(const ContextPtr& ctx,
                            const std::vector<Elem>& reflections,
                            std::size_t max_subgroup = 200000);

struct SupportInfo {
  std::vector<int> support;  // ambient generator indices, ascending
  bool connected = false;
};

// support of a positive root plus connectivity of the induced subdiagram;
// also checks s_gamma lies in the standard parabolic on the support
SupportInfo support(const ContextPtr& ctx, const RootVec& gamma);

// Brink: every coefficient c has c/2 in COS, and c not in {0,1} forces
// c >= sqrt(2) (exact comparison of c^2 with 2)
Validation brink_check(const ContextPtr& ctx, const RootVec& gamma);

struct ChamberResult {
  enum Status { kOk, kBudgetExhausted } status = kOk;
  std::vector<int> word;  // simple reflections applied, in application order
  RootVec point;          // the chamber representative when status == kOk
  std::vector<int> stabilizer_generators;  // {i : <delta_i, point> = 0}
};

// repeatedly reflects at the least-index simple with negative pairing
ChamberResult to_chamber(const BasedRootSystem& brs, const RootVec& rho,
                         int max_iters);

}  // namespace coxdec

#endif
