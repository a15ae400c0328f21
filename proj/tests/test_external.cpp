#include <doctest.h>

#include <sstream>

#include "coxdec/catalog.hpp"
#include "coxdec/external.hpp"
#include "coxdec/rootsys.hpp"

using namespace coxdec;

namespace {

CoxMatrix orthogonal_nodes(const std::vector<std::string>& labels) {
  CoxMatrix m;
  m.labels = labels;
  const int n = m.rank();
  m.m.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m.m[i][i] = 1;
  return m;
}

}  // namespace

TEST_CASE("trivial action gives a direct product") {
  ExtData data;
  data.mI = builtin("A1");
  data.mTilde = builtin("A2");
  data.theta = {{0, 1}};  // identity permutation
  data.J = {0, 1};        // every node is its own orbit
  ExtResult res = check_external(data);
  REQUIRE(res.status == ExtResult::kAccepted);
  CHECK(res.matrix.rank() == 3);
  // W' generator commutes with both J nodes
  CHECK(res.matrix.m[0][1] == 2);
  CHECK(res.matrix.m[0][2] == 2);
  CHECK(res.matrix.m[1][2] == 3);
}

TEST_CASE("round trip through the internal decomposition of B3") {
  auto ctx = CoxContext::make(builtin("B3"));
  Decomposition dec(ctx, {ctx->matrix().index_of("t")});
  ExtData data = export_ext_data(dec);
  ExtResult res = check_external(data);
  REQUIRE(res.status == ExtResult::kAccepted);
  // the output is the ambient matrix up to the I-then-J reordering
  std::vector<int> order = dec.I();
  for (int g : data.J) order.push_back(dec.nu(g));
  CHECK(res.matrix.same_up_to_labels(ctx->matrix().submatrix(order)));
}

TEST_CASE("triality on D4 reconstructs F4") {
  ExtData data;
  data.mI = builtin("A2");  // labels s1, s2
  data.mTilde = builtin("D4");  // path s1-s2 with s3, s4 forked at s2
  // the fork center is node 1 (label s2); leaves are 0, 2, 3
  data.theta = {{2, 1, 0, 3}, {0, 1, 3, 2}};  // (l1 l2) and (l2 l3)
  data.J = {1, 0};  // center orbit and one leaf orbit
  ExtResult res = check_external(data);
  REQUIRE(res.status == ExtResult::kAccepted);
  CHECK(recognize(res.matrix) == std::vector<std::string>{"F4"});
}

TEST_CASE("a stabilizer that is not parabolic violates condition (1)") {
  // W' of type A2 acting through S2 on two orthogonal nodes: the kernel of
  // the action is not a standard parabolic subgroup
  ExtData data;
  data.mI = builtin("A2");
  data.mTilde = orthogonal_nodes({"a", "b"});
  data.theta = {{1, 0}, {1, 0}};  // both generators swap
  data.J = {0};
  ExtResult res = check_external(data);
  REQUIRE(res.status == ExtResult::kViolation);
  CHECK(res.detail.find("(1)") != std::string::npos);
}

TEST_CASE("input validation of the action") {
  ExtData data;
  data.mI = builtin("A1");
  data.mTilde = builtin("A2");
  data.theta = {{1, 0}};  // swapping bond-3 nodes is an automorphism
  data.J = {0, 1};        // but now J double-hits the single orbit
  CHECK(check_external(data).status == ExtResult::kViolation);

  data.J = {0};
  CHECK(check_external(data).status == ExtResult::kAccepted);

  // a non-automorphism permutation is rejected
  ExtData bad;
  bad.mI = builtin("A1");
  bad.mTilde = builtin("B3");
  bad.theta = {{1, 0, 2}};  // swaps across unequal bonds
  bad.J = {0};
  CHECK(check_external(bad).status == ExtResult::kViolation);
}

TEST_CASE("every finite catalog row round-trips") {
  for (const TableRow& row : table_rows()) {
    if (is_affine_name(row.ambient)) continue;
    auto ctx = CoxContext::make(builtin(row.ambient));
    std::vector<int> I;
    for (const auto& l : row.I) I.push_back(ctx->matrix().index_of(l));
    Decomposition dec(ctx, I);
    ExtData data = export_ext_data(dec);
    ExtResult res = check_external(data);
    REQUIRE(res.status == ExtResult::kAccepted);
    std::vector<int> order = dec.I();
    for (int g : data.J) order.push_back(dec.nu(g));
    CHECK(res.matrix.same_up_to_labels(ctx->matrix().submatrix(order)));
  }
}

TEST_CASE("ExtData file format round trip") {
  auto ctx = CoxContext::make(builtin("B3"));
  Decomposition dec(ctx, {ctx->matrix().index_of("t")});
  ExtData data = export_ext_data(dec);
  std::ostringstream os;
  data.print(os);
  std::istringstream is(os.str());
  ExtData parsed = ExtData::parse(is);
  CHECK(parsed.mI.same_up_to_labels(data.mI));
  CHECK(parsed.mTilde.same_up_to_labels(data.mTilde));
  CHECK(parsed.theta == data.theta);
  CHECK(parsed.J == data.J);
}

TEST_CASE("geometric construction in B2") {
  auto b2 = CoxContext::make(builtin("B2"));  // labels t, s1
  int s1 = b2->matrix().index_of("s1");
  int t = b2->matrix().index_of("t");
  std::vector<RootVec> delta{b2->simple_root(s1)};
  RootVec at = b2->simple_root(t);
  RootVec conj = b2->generator_elem(s1).apply(at);
  std::vector<RootVec> pi_tilde{at, conj};
  ConstructResult res = construct_from_roots(b2, delta, pi_tilde);
  REQUIRE(res.status == ConstructResult::kOk);
  REQUIRE(res.pi.size() == 2);
  // the glued simple system is the ambient one
  CHECK(res.pi[0] == delta[0]);
  CHECK(res.pi[1] == at);
}

TEST_CASE("geometric construction violations") {
  auto b2 = CoxContext::make(builtin("B2"));
  int s1 = b2->matrix().index_of("s1");
  int t = b2->matrix().index_of("t");
  RootVec at = b2->simple_root(t);
  RootVec conj = b2->generator_elem(s1).apply(at);

  // not W'-stable: the orbit is not closed
  ConstructResult res =
      construct_from_roots(b2, {b2->simple_root(s1)}, {conj});
  CHECK(res.status == ConstructResult::kViolation);

  // positively dependent union
  RootVec neg = b2->simple_root(s1);
  for (auto& c : neg) c = -c;
  res = construct_from_roots(b2, {b2->simple_root(s1)}, {neg});
  CHECK(res.status == ConstructResult::kViolation);
}

TEST_CASE("empty Delta returns PiTilde") {
  auto a2 = CoxContext::make(builtin("A2"));
  std::vector<RootVec> pi_tilde{a2->simple_root(0), a2->simple_root(1)};
  ConstructResult res = construct_from_roots(a2, {}, pi_tilde);
  REQUIRE(res.status == ConstructResult::kOk);
  CHECK(res.pi == pi_tilde);
}

TEST_CASE("accepted outputs have even bonds between I and J") {
  for (const TableRow& row : table_rows()) {
    if (is_affine_name(row.ambient)) continue;
    auto ctx = CoxContext::make(builtin(row.ambient));
    std::vector<int> I;
    for (const auto& l : row.I) I.push_back(ctx->matrix().index_of(l));
    Decomposition dec(ctx, I);
    ExtResult res = check_external(export_ext_data(dec));
    REQUIRE(res.status == ExtResult::kAccepted);
    const int nI = static_cast<int>(I.size());
    for (int v = 0; v < nI; ++v)
      for (int r = nI; r < res.matrix.rank(); ++r) {
        int m = res.matrix.m[v][r];
        if (bond_finite(m)) CHECK(m % 2 == 0);
      }
  }
}

TEST_CASE("glued simple roots avoid the open chamber") {
  // every root of Pi minus Delta pairs nonpositively with all of Delta
  auto b2 = CoxContext::make(builtin("B2"));
  int s1 = b2->matrix().index_of("s1");
  int t = b2->matrix().index_of("t");
  std::vector<RootVec> delta{b2->simple_root(s1)};
  RootVec at = b2->simple_root(t);
  std::vector<RootVec> pi_tilde{at, b2->generator_elem(s1).apply(at)};
  ConstructResult res = construct_from_roots(b2, delta, pi_tilde);
  REQUIRE(res.status == ConstructResult::kOk);
  for (std::size_t k = delta.size(); k < res.pi.size(); ++k)
    for (const auto& d : delta)
      CHECK(b2->inner(d, res.pi[k]).sign() <= 0);
}

TEST_CASE("an exhausted chamber budget is reported inconclusive") {
  auto b2 = CoxContext::make(builtin("B2"));
  int s1 = b2->matrix().index_of("s1");
  int t = b2->matrix().index_of("t");
  RootVec at = b2->simple_root(t);
  std::vector<RootVec> delta{b2->simple_root(s1)};
  std::vector<RootVec> pi_tilde{at, b2->generator_elem(s1).apply(at)};
  // the conjugated root needs one reflection to reach the negative chamber
  ConstructResult res = construct_from_roots(b2, delta, pi_tilde, 0);
  CHECK(res.status == ConstructResult::kInconclusive);
  CHECK(construct_from_roots(b2, delta, pi_tilde, 1).status == ConstructResult::kOk);
}
