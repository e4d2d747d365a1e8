#include <map>
#include <vector>

#include "doctest.h"

#include "ffd/multipoly.hpp"
#include "test_support.hpp"

using namespace ffd;
using namespace ffd::test;

namespace {

MultiPolyFq random_fq_poly(Rng& rng, const FieldPtr& f, uint32_t nvars, int terms,
                           uint32_t max_exp) {
  MultiPolyFq out(f, nvars);
  for (int k = 0; k < terms; ++k) {
    ExpVec e(nvars);
    for (uint32_t i = 0; i < nvars; ++i) e[i] = rng.below(max_exp + 1);
    out.add_term(std::move(e), random_elem(rng, f));
  }
  return out;
}

std::vector<FqElem> random_point(Rng& rng, const FieldPtr& f, uint32_t nvars) {
  std::vector<FqElem> pt(nvars);
  for (auto& c : pt) c = random_elem(rng, f);
  return pt;
}

}  // namespace

TEST_SUITE("multipoly") {

TEST_CASE("term bookkeeping: merge, cancel, arity guard") {
  auto f3 = F3();
  MultiPolyFq f(f3, 2);
  f.add_term({1, 1}, f3->one());
  f.add_term({1, 1}, f3->from_code(2));  // 1 + 2 = 0 mod 3: term vanishes
  CHECK(f.is_zero());
  f.add_term({2, 0}, f3->one());
  f.add_term({0, 1}, f3->from_code(2));
  CHECK(f.terms().size() == 2);
  CHECK_THROWS_AS(f.add_term({1, 2, 3}, f3->one()), Error);
}

TEST_CASE("ring identities at random points") {
  Rng rng(1002);
  for (const auto& fld : {F2(), F3(), F4()}) {
    for (int trial = 0; trial < 25; ++trial) {
      MultiPolyFq a = random_fq_poly(rng, fld, 3, 4, 2);
      MultiPolyFq b = random_fq_poly(rng, fld, 3, 4, 2);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK(a - a == MultiPolyFq(fld, 3));
      // Evaluation is a homomorphism.
      for (int pt_trial = 0; pt_trial < 5; ++pt_trial) {
        auto pt = random_point(rng, fld, 3);
        CHECK(eval(a + b, pt) == fld->add(eval(a, pt), eval(b, pt)));
        CHECK(eval(a * b, pt) == fld->mul(eval(a, pt), eval(b, pt)));
      }
    }
  }
}

TEST_CASE("degree info classifies forms") {
  auto f2 = F2();
  MultiPolyFq g(f2, 3);
  g.add_term({1, 1, 0}, f2->one());
  g.add_term({0, 0, 1}, f2->one());
  DegreeInfo gi = degree_info(g);
  CHECK(gi.total_degree == OrdValue::of(2));
  CHECK(gi.is_chevalley);
  CHECK(!gi.is_homogeneous);

  MultiPolyFq h(f2, 2);
  h.add_term({2, 0}, f2->one());
  h.add_term({1, 1}, f2->one());
  h.add_term({0, 2}, f2->one());
  DegreeInfo hi = degree_info(h);
  CHECK(hi.is_homogeneous);
  CHECK(hi.is_chevalley);

  MultiPolyFq k(f2, 1);
  k.add_term({0}, f2->one());  // constant term
  CHECK(!degree_info(k).is_chevalley);
  CHECK(degree_info(MultiPolyFq(f2, 4)).total_degree.is_minus_inf());
}

TEST_CASE("Laurent-coefficient degree info tracks max coefficient ord") {
  auto f3 = F3();
  MultiPolyL f(f3, 2);
  f.add_term({2, 0}, laurent_of(f3, {{1, 1}, {-2, 2}}));
  f.add_term({0, 1}, laurent_of(f3, {{-1, 1}}));
  DegreeInfo info = degree_info(f);
  CHECK(info.total_degree == OrdValue::of(2));
  CHECK(info.max_coeff_ord == OrdValue::of(1));
  CHECK(info.is_chevalley);
}

TEST_CASE("evaluation at Laurent points is exact") {
  auto f3 = F3();
  // f = t*x1^2 + t^{-1}*x2 evaluated at x1 = t^{-1}, x2 = 2t^3:
  // t * t^{-2} + t^{-1} * 2t^3 = t^{-1} + 2t^2.
  MultiPolyL f(f3, 2);
  f.add_term({2, 0}, laurent_of(f3, {{1, 1}}));
  f.add_term({0, 1}, laurent_of(f3, {{-1, 1}}));
  std::vector<LaurentPoly> pt = {laurent_of(f3, {{-1, 1}}), laurent_of(f3, {{3, 2}})};
  CHECK(eval(f, pt) == laurent_of(f3, {{2, 2}, {-1, 1}}));

  // Polynomial points lift into the Laurent ring.
  std::vector<Poly> ppt = {poly_of(f3, {0, 1}), poly_of(f3, {1})};
  CHECK(eval(f, ppt) == laurent_of(f3, {{3, 1}, {-1, 1}}));
}

TEST_CASE("compose substitutes linear forms") {
  auto f2 = F2();
  // f(x1, x2) = x1 * x2 composed with x1 -> y1 + y2, x2 -> y1 gives
  // y1^2 + y1 y2.
  MultiPolyFq f(f2, 2);
  f.add_term({1, 1}, f2->one());
  MultiPolyL a1(f2, 2), a2(f2, 2);
  a1.add_term({1, 0}, LaurentPoly::constant(f2, f2->one()));
  a1.add_term({0, 1}, LaurentPoly::constant(f2, f2->one()));
  a2.add_term({1, 0}, LaurentPoly::constant(f2, f2->one()));
  MultiPolyL res = compose(f, {a1, a2});
  MultiPolyL expect(f2, 2);
  expect.add_term({2, 0}, LaurentPoly::constant(f2, f2->one()));
  expect.add_term({1, 1}, LaurentPoly::constant(f2, f2->one()));
  CHECK(res == expect);
}

TEST_CASE("compose agrees with pointwise evaluation") {
  Rng rng(42);
  auto f3 = F3();
  for (int trial = 0; trial < 15; ++trial) {
    MultiPolyFq f = random_fq_poly(rng, f3, 2, 3, 2);
    // Two random Laurent-coefficient arguments in 2 substitution variables.
    std::vector<MultiPolyL> args;
    for (int j = 0; j < 2; ++j) {
      MultiPolyL arg(f3, 2);
      for (int k = 0; k < 2; ++k) {
        ExpVec e = {static_cast<uint32_t>(rng.below(2)), static_cast<uint32_t>(rng.below(2))};
        LaurentPoly c(f3);
        c.add_term(static_cast<long long>(rng.below(3)) - 1, random_nonzero(rng, f3));
        arg.add_term(std::move(e), c);
      }
      args.push_back(arg);
    }
    MultiPolyL comp = compose(f, args);
    auto rand_pt = [&] {
      LaurentPoly v(f3);
      v.add_term(static_cast<long long>(rng.below(3)) - 1, random_nonzero(rng, f3));
      return v;
    };
    for (int pt_trial = 0; pt_trial < 4; ++pt_trial) {
      std::vector<LaurentPoly> pt = {rand_pt(), rand_pt()};
      std::vector<LaurentPoly> inner;
      for (const auto& arg : args) inner.push_back(eval(arg, pt));
      LaurentPoly lifted_direct = eval(f, inner);
      CHECK(eval(comp, pt) == lifted_direct);
    }
  }
}

TEST_CASE("substitution layout: variable counts and flat indices") {
  std::vector<long long> degrees = {2, 0, 1};
  CHECK(substitution_var_count(degrees) == 6);  // (2+1) + (0+1) + (1+1)
  CHECK(substitution_flat_index(degrees, 0, 0) == 0);
  CHECK(substitution_flat_index(degrees, 0, 2) == 2);
  CHECK(substitution_flat_index(degrees, 1, 0) == 3);
  CHECK(substitution_flat_index(degrees, 2, 1) == 5);
}

TEST_CASE("expansion worked example: t^{-1} x1 x2 + x3^2") {
  auto f2 = F2();
  MultiPolyL F(f2, 3);
  F.add_term({1, 1, 0}, laurent_of(f2, {{-1, 1}}));
  F.add_term({0, 0, 2}, laurent_of(f2, {{0, 1}}));
  // All three variables constant (degree cap 0): y1 y2 appears at t^{-1},
  // y3^2 at t^0.
  auto coeffs = expand_substitution(F, {0, 0, 0});
  REQUIRE(coeffs.size() == 2);
  MultiPolyFq at_m1(f2, 3), at_0(f2, 3);
  at_m1.add_term({1, 1, 0}, f2->one());
  at_0.add_term({0, 0, 2}, f2->one());
  CHECK(coeffs.at(-1) == at_m1);
  CHECK(coeffs.at(0) == at_0);
}

TEST_CASE("expansion worked example: degree-1 caps split by powers of t") {
  auto f2 = F2();
  // F = t^{-2} x1 with x1 = y10 + y11 t gives t^{-2} y10 + t^{-1} y11.
  MultiPolyL F1(f2, 1);
  F1.add_term({1}, laurent_of(f2, {{-2, 1}}));
  auto c1 = expand_substitution(F1, {1});
  REQUIRE(c1.size() == 2);
  MultiPolyFq m2(f2, 2), m1(f2, 2);
  m2.add_term({1, 0}, f2->one());
  m1.add_term({0, 1}, f2->one());
  CHECK(c1.at(-2) == m2);
  CHECK(c1.at(-1) == m1);

  // F = x1^2 with x1 = y10 + y11 t gives y10^2 + y11^2 t^2 (characteristic 2).
  MultiPolyL F2sq(f2, 1);
  F2sq.add_term({2}, laurent_of(f2, {{0, 1}}));
  auto c2 = expand_substitution(F2sq, {1});
  REQUIRE(c2.size() == 2);
  MultiPolyFq s0(f2, 2), s2(f2, 2);
  s0.add_term({2, 0}, f2->one());
  s2.add_term({0, 2}, f2->one());
  CHECK(c2.at(0) == s0);
  CHECK(c2.at(2) == s2);
}

TEST_CASE("expansion evaluates consistently with the substitution identity") {
  Rng rng(777);
  auto f3 = F3();
  for (int trial = 0; trial < 12; ++trial) {
    // Random Laurent-coefficient form in 2 variables.
    MultiPolyL F(f3, 2);
    for (int k = 0; k < 3; ++k) {
      ExpVec e = {static_cast<uint32_t>(rng.below(3)), static_cast<uint32_t>(rng.below(3))};
      LaurentPoly c(f3);
      c.add_term(static_cast<long long>(rng.below(5)) - 2, random_nonzero(rng, f3));
      F.add_term(std::move(e), c);
    }
    std::vector<long long> degrees = {static_cast<long long>(rng.below(3)),
                                      static_cast<long long>(rng.below(2))};
    auto coeffs = expand_substitution(F, degrees);
    size_t nv = substitution_var_count(degrees);

    for (int pt_trial = 0; pt_trial < 6; ++pt_trial) {
      // Random assignment of the substitution variables.
      std::vector<FqElem> y(nv);
      for (auto& c : y) c = random_elem(rng, f3);
      // Reassemble x_j = sum_b y_{j,b} t^b and evaluate F directly.
      std::vector<LaurentPoly> x;
      for (size_t j = 0; j < degrees.size(); ++j) {
        LaurentPoly xj(f3);
        for (long long b = 0; b <= degrees[j]; ++b)
          xj.add_term(b, y[substitution_flat_index(degrees, j, b)]);
        x.push_back(xj);
      }
      LaurentPoly direct = eval(F, x);
      // Sum the expanded coefficient polynomials against the same assignment.
      LaurentPoly rebuilt(f3);
      for (const auto& [m, gm] : coeffs) rebuilt.add_term(m, eval(gm, y));
      CHECK(direct == rebuilt);
    }
  }
}

TEST_CASE("expansion preserves the Chevalley property") {
  Rng rng(31);
  auto f2 = F2();
  for (int trial = 0; trial < 10; ++trial) {
    MultiPolyFq base = random_chevalley_fq(rng, f2, 2, 2);
    MultiPolyL F(f2, 2);
    for (const auto& [e, c] : base.terms())
      F.add_term(e, laurent_of(f2, {{static_cast<long long>(rng.below(3)) - 1, 1}}));
    if (F.is_zero()) continue;
    auto coeffs = expand_substitution(F, {1, 1});
    for (const auto& [m, gm] : coeffs) {
      CHECK(degree_info(gm).is_chevalley);
      CHECK(degree_info(gm).total_degree <= degree_info(F).total_degree);
    }
  }
}

}  // TEST_SUITE
