#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxdec/catalog.hpp"
#include "coxdec/coxeter.hpp"
#include "coxdec/linalg.hpp"
#include "coxdec/rootsys.hpp"

using namespace coxdec;

namespace {

ContextPtr ctx_of(const std::string& name) { return CoxContext::make(builtin(name)); }

CoxMatrix orthogonal_rank(int n) {
  CoxMatrix m;
  for (int i = 0; i < n; ++i) m.labels.push_back("e" + std::to_string(i + 1));
  m.m.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m.m[i][i] = 1;
  return m;
}

}  // namespace

TEST_CASE("validate axioms") {
  auto a2 = ctx_of("A2");
  CHECK(validate(standard_system(a2)).ok);

  // {alpha, -alpha} is positively dependent
  BasedRootSystem bad{a2, {a2->simple_root(0), a2->simple_root(0)}};
  for (auto& c : bad.simples[1]) c = -c;
  Validation v = validate(bad);
  CHECK_FALSE(v.ok);
  CHECK(v.message.find("axiom (i)") != std::string::npos);

  // inner product -3/4 is not in -COS: unit vectors in five orthogonal lines,
  // using 9 + 4 + 1 + 1 + 1 = 16
  auto ortho = CoxContext::make(orthogonal_rank(5));
  RootVec u = ortho->simple_root(0);
  RootVec w = ortho->zero_vec();
  w[0] = ortho->field()->rational(frac(-3, 4));
  w[1] = ortho->field()->rational(frac(2, 4));
  w[2] = ortho->field()->rational(frac(1, 4));
  w[3] = ortho->field()->rational(frac(1, 4));
  w[4] = ortho->field()->rational(frac(1, 4));
  REQUIRE(ortho->inner(w, w) == ortho->field()->one());
  REQUIRE(ortho->inner(u, w) == ortho->field()->rational(frac(-3, 4)));
  Validation v2 = validate(BasedRootSystem{ortho, {u, w}});
  CHECK_FALSE(v2.ok);
  CHECK(v2.message.find("axiom (iii)") != std::string::npos);
}

TEST_CASE("positive root counts") {
  CHECK(positive_roots(standard_system(ctx_of("A2")), 50).roots.size() == 3);
  CHECK(positive_roots(standard_system(ctx_of("B2")), 50).roots.size() == 4);
  for (int n = 2; n <= 4; ++n) {
    auto an = positive_roots(standard_system(ctx_of("A" + std::to_string(n))), 50);
    CHECK(an.complete);
    CHECK(static_cast<int>(an.roots.size()) == n * (n + 1) / 2);
    auto bn = positive_roots(standard_system(ctx_of("B" + std::to_string(n))), 50);
    CHECK(static_cast<int>(bn.roots.size()) == n * n);
  }
}

TEST_CASE("affine closure is depth bounded with linear coordinates") {
  auto aff = ctx_of("A~1");
  RootClosure rc = positive_roots(standard_system(aff), 3);
  CHECK_FALSE(rc.complete);
  CHECK(rc.roots.size() == 8);
  // every root is (k+1, k) or (k, k+1) in simple-root coordinates
  for (const auto& r : rc.roots) {
    REQUIRE(r[0].is_rational());
    REQUIRE(r[1].is_rational());
    Rational a = r[0].rational_value(), b = r[1].rational_value();
    CHECK(abs(a - b) == 1);
  }
}

TEST_CASE("chi of simple and dihedral generating sets") {
  auto b2 = ctx_of("B2");  // I2(4) with labels t, s1
  // simple reflections are already canonical
  auto simple = chi(b2, {b2->generator_elem(0), b2->generator_elem(1)});
  REQUIRE(simple.size() == 2);
  CHECK(simple[0].elem == b2->generator_elem(0));
  CHECK(simple[1].elem == b2->generator_elem(1));

  // R = {t, s1 t s1}: both canonical, the product has order 2
  Elem t = b2->generator_elem(0);
  Elem sts = t.conjugate(b2->generator_elem(1));
  auto pair = chi(b2, {t, sts});
  REQUIRE(pair.size() == 2);
  CHECK(b2->order_of_product(pair[0].elem, pair[1].elem) ==
        OrderResult{OrderResult::kFinite, 2});

  // all three reflections of A2 generate the whole group
  auto a2 = ctx_of("A2");
  std::vector<Elem> all_refl;
  for (const Elem& w : a2->enumerate_ball(10))
    if (a2->reflection_root(w)) all_refl.push_back(w);
  REQUIRE(all_refl.size() == 3);
  auto canonical = chi(a2, all_refl);
  REQUIRE(canonical.size() == 2);
  CHECK(canonical[0].elem == a2->generator_elem(0));
  CHECK(canonical[1].elem == a2->generator_elem(1));
}

TEST_CASE("chi on every small reflection subgroup of B3 and A3") {
  for (const char* type : {"B3", "A3"}) {
    auto ctx = ctx_of(type);
    std::vector<Elem> reflections;
    for (const Elem& w : ctx->enumerate_ball(100))
      if (ctx->reflection_root(w)) reflections.push_back(w);

    auto subgroup_of = [&](const std::vector<Elem>& gens) {
      std::set<std::vector<int>> seen{{}};
      std::vector<Elem> queue{ctx->identity_elem()};
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (const Elem& g : gens) {
          Elem next = queue[head] * g;
          if (seen.insert(next.word()).second) queue.push_back(next);
        }
      return seen;
    };

    const int nrefl = static_cast<int>(reflections.size());
    std::vector<std::vector<int>> gen_sets;
    for (int i = 0; i < nrefl; ++i) {
      gen_sets.push_back({i});
      for (int j = i + 1; j < nrefl; ++j) {
        gen_sets.push_back({i, j});
        for (int k = j + 1; k < nrefl; ++k) gen_sets.push_back({i, j, k});
      }
    }
    for (const auto& set : gen_sets) {
      std::vector<Elem> gens;
      for (int i : set) gens.push_back(reflections[i]);
      auto canonical = chi(ctx, gens);
      // the canonical generators generate the same subgroup
      std::vector<Elem> cgens;
      for (const auto& r : canonical) cgens.push_back(r.elem);
      CHECK(subgroup_of(gens) == subgroup_of(cgens));
      // each satisfies the defining property N(t) cap W' = {t}
      auto members = subgroup_of(gens);
      for (const auto& r : canonical) {
        int meet = 0;
        for (const auto& refl : ctx->n_set(r.elem))
          if (members.count(refl.elem.word())) ++meet;
        CHECK(meet == 1);
      }
      // the subsystem (Psi, Delta) is again a based root system
      BasedRootSystem sub{ctx, {}};
      for (const auto& r : canonical) sub.simples.push_back(r.root);
      CHECK(validate(sub).ok);
    }
  }
}

TEST_CASE("subsystem closure holds for a deep affine pair") {
  // W' = <s0, s1 s0 s1> inside the infinite dihedral group: the canonical
  // roots pair to -1, which -COS admits but a finite bond never produces
  auto aff = ctx_of("A~1");
  Elem s = aff->generator_elem(0);
  Elem tst = s.conjugate(aff->generator_elem(1));
  RootVec a = *aff->reflection_root(s);
  RootVec b = *aff->reflection_root(tst);
  CHECK(aff->inner(a, b) == -aff->field()->one());
  CHECK(validate(BasedRootSystem{aff, {a, b}}).ok);
}

TEST_CASE("support of positive roots") {
  auto a2 = ctx_of("A2");
  SupportInfo si = support(a2, a2->simple_root(0));
  CHECK(si.support == std::vector<int>{0});
  CHECK(si.connected);

  RootVec highest = a2->simple_root(0);
  highest[1] = a2->field()->one();  // alpha + beta
  si = support(a2, highest);
  CHECK(si.support == std::vector<int>{0, 1});
  CHECK(si.connected);

  auto b3 = ctx_of("B3");
  RootClosure rc = positive_roots(standard_system(b3), 50);
  REQUIRE(rc.roots.size() == 9);
  for (const auto& r : rc.roots) CHECK(support(b3, r).connected);
}

TEST_CASE("Brink coefficient test") {
  auto b2 = ctx_of("B2");
  for (const auto& r : positive_roots(standard_system(b2), 50).roots)
    CHECK(brink_check(b2, r).ok);
  CHECK(brink_check(b2, b2->simple_root(0)).ok);

  auto g2aff = ctx_of("G~2");
  for (const auto& r : positive_roots(standard_system(g2aff), 6).roots)
    CHECK(brink_check(g2aff, r).ok);

  // a coefficient strictly between 1 and sqrt(2) must be flagged
  RootVec bad = b2->zero_vec();
  bad[0] = b2->field()->rational(frac(5, 4));
  CHECK_FALSE(brink_check(b2, bad).ok);
}

TEST_CASE("chamber algorithm") {
  auto a2 = ctx_of("A2");
  BasedRootSystem sys = standard_system(a2);

  // already dominant: 2 alpha + 2 beta pairs to 1 with each simple root
  RootVec rho = a2->zero_vec();
  rho[0] = a2->field()->rational(Rational(2));
  rho[1] = a2->field()->rational(Rational(2));
  ChamberResult res = to_chamber(sys, rho, 100);
  CHECK(res.status == ChamberResult::kOk);
  CHECK(res.word.empty());
  CHECK(res.stabilizer_generators.empty());

  // the negative of a chamber point is moved back by the longest element
  RootVec neg = rho;
  for (auto& c : neg) c = -c;
  res = to_chamber(sys, neg, 100);
  REQUIRE(res.status == ChamberResult::kOk);
  Elem mover =
      a2->element_from_word(std::vector<int>(res.word.rbegin(), res.word.rend()));
  CHECK(mover.length() == 3);  // the longest element of A2
  RootVec moved = mover.apply(neg);
  for (std::size_t i = 0; i < neg.size(); ++i) CHECK(moved[i] == res.point[i]);

  // outside the Tits cone of the affine line: budget exhausted
  auto aff = ctx_of("A~1");
  RootVec out = aff->zero_vec();
  out[0] = aff->field()->one();
  out[1] = -aff->field()->one();
  ChamberResult stuck = to_chamber(standard_system(aff), out, 50);
  CHECK(stuck.status == ChamberResult::kBudgetExhausted);

  // a point on one wall reports its stabilizer generator
  RootVec wall = a2->zero_vec();
  wall[0] = a2->field()->one();
  wall[1] = a2->field()->rational(Rational(2));
  ChamberResult on_wall = to_chamber(sys, wall, 100);
  REQUIRE(on_wall.status == ChamberResult::kOk);
  CHECK(on_wall.stabilizer_generators == std::vector<int>{0});
}

TEST_CASE("Gram classification") {
  auto classify_type = [](const std::string& name) {
    auto ctx = ctx_of(name);
    return classify_gram(ctx->gram_matrix());
  };
  CHECK(classify_type("A2") == GramKind::kFinite);
  CHECK(classify_type("B3") == GramKind::kFinite);
  CHECK(classify_type("H4") == GramKind::kFinite);
  CHECK(classify_type("A~1") == GramKind::kAffine);
  CHECK(classify_type("A~2") == GramKind::kAffine);
  CHECK(classify_type("C~2") == GramKind::kAffine);
  CHECK(classify_type("F~4") == GramKind::kAffine);

  // off-diagonal -2: determinant 1 - 4 < 0
  auto field = CycField::make(2);
  CycMat indef{{field->one(), field->integer(-2)}, {field->integer(-2), field->one()}};
  CHECK(classify_gram(indef) == GramKind::kIndefinite);
}
