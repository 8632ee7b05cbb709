#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "scholz/ambiguous.hpp"
#include "scholz/class_group.hpp"
#include "scholz/error.hpp"
#include "scholz/primary.hpp"
#include "scholz/real_quadratic.hpp"
#include "scholz/units.hpp"

using namespace scholz;

namespace {

RelQuadField real_field(long d) { return RelQuadField::build(GroundField::get(FieldId::Q), RingElement(Integer(d))); }

KElement random_element(const GroundField& F, std::mt19937_64& rng, int bound) {
  auto r = [&] { return Integer(static_cast<long>(rng() % (2 * bound + 1)) - bound); };
  auto e = [&] { return F.rational() ? RingElement(r()) : RingElement(r(), r()); };
  return {e(), e()};
}

}  // namespace

TEST_CASE("relative field arithmetic") {
  std::mt19937_64 rng(17);
  struct Case {
    FieldId id;
    RingElement mu;
  };
  std::vector<Case> cases = {{FieldId::Q, RingElement(Integer(221))},   {FieldId::Q, RingElement(Integer(-7))},
                             {FieldId::Q, RingElement(Integer(6))},     {FieldId::Qi, RingElement(-11, 24)},
                             {FieldId::Qsqrt_2, RingElement(-25, 6)},   {FieldId::Qsqrt_3, RingElement(Integer(13))},
                             {FieldId::Qsqrt_7, RingElement(Integer(-3))}, {FieldId::Qsqrt_11, RingElement(Integer(5))}};
  for (const auto& c : cases) {
    const auto& F = GroundField::get(c.id);
    RelQuadField K = RelQuadField::build(F, c.mu);
    CAPTURE(K.label());
    for (int i = 0; i < 100; ++i) {
      KElement a = random_element(F, rng, 30), b = random_element(F, rng, 30), d = random_element(F, rng, 30);
      CHECK(K.mul(a, b) == K.mul(b, a));
      CHECK(K.mul(K.mul(a, b), d) == K.mul(a, K.mul(b, d)));
      CHECK(K.rel_norm(K.mul(a, b)) == F.mul(K.rel_norm(a), K.rel_norm(b)));
      CHECK(K.conj(K.conj(a)) == a);
      CHECK(K.mul(a, K.conj(a)) == K.from_base(K.rel_norm(a)));
      if (!(a == KElement{}) && !(b == KElement{})) {
        auto q = K.exact_div(K.mul(a, b), b);
        REQUIRE(q);
        CHECK(*q == a);
        CHECK(OIdeal::principal(K, a).norm(K) == abs(K.abs_norm(a)));
        auto s = sqrt_in(K, K.mul(a, a));
        REQUIRE(s);
        CHECK(K.mul(*s, *s) == K.mul(a, a));
      }
    }
    KElement sd = K.sqrt_delta();
    CHECK(K.mul(sd, sd) == K.from_base(K.relative_discriminant()));
    // places above each small prime multiply back to its ideal
    for (const auto& P : places_up_to(F, 60)) {
      KSplitting S = split_prime(K, P);
      OIdeal prod = OIdeal::principal(K, K.one());
      for (const auto& I : S.ideals) prod = prod.multiply(K, I);
      if (S.kind == SplitKind::ramified) prod = prod.multiply(K, S.ideals[0]);
      CHECK(prod == OIdeal::principal(K, K.from_base(P.generator)));
      for (const auto& Q : S.places) {
        CHECK(conjugate_place(K, conjugate_place(K, Q)) == Q);
        if (S.kind == SplitKind::ramified) CHECK(conjugate_place(K, Q) == Q);
      }
    }
  }
  CHECK_THROWS_AS(real_field(12), error);
  CHECK_THROWS_AS(RelQuadField::build(GroundField::get(FieldId::Qi), RingElement(-1, 0)), error);
  // 1 + sqrt(mu) generates a non-maximal order at 2 and mu is not 2-primary
  CHECK_THROWS_AS(RelQuadField::build(GroundField::get(FieldId::Qsqrt_2), RingElement(-7, 10)), error);
}

TEST_CASE("residue symbols at split places of real quadratic fields") {
  std::mt19937_64 rng(23);
  for (long d : {5L, 13L, 21L, 221L, 145L, 7L, 10L}) {
    RelQuadField K = real_field(d);
    const auto& F = K.base();
    for (const auto& P : places_up_to(F, 300)) {
      if (P.p == 2 || K.split_kind(P) != SplitKind::split) continue;
      auto places = K.places_over(P);
      REQUIRE(places.size() == 2);
      // theta^2 - t theta + n = 0 has two roots mod p; the two places see one each
      oracle::i64 t = K.t().x.get_si(), n = K.n().x.get_si();
      std::vector<oracle::u64> roots;
      for (oracle::u64 r = 0; r < P.p; ++r)
        if (oracle::modp(static_cast<oracle::i64>(oracle::mulm(r, r, P.p)) - t * static_cast<oracle::i64>(r) + n, P.p) == 0)
          roots.push_back(r);
      REQUIRE(roots.size() == 2);
      for (int i = 0; i < 20; ++i) {
        KElement a = random_element(F, rng, 1000);
        oracle::i64 x = a.x.x.get_si(), y = a.y.x.get_si();
        std::multiset<int> want, got;
        for (auto r : roots) want.insert(oracle::legendre(x + y * static_cast<oracle::i64>(r), P.p));
        if (want.count(0)) continue;
        for (const auto& Q : places) got.insert(to_int(Q.symbol(K, a)));
        CHECK(want == got);
      }
    }
  }
}

TEST_CASE("units of real quadratic fields match the continued fraction") {
  for (long d = 2; d < 120; ++d) {
    if (!is_squarefree(Integer(d))) continue;
    CAPTURE(d);
    RelQuadField K = real_field(d);
    UnitResult U = unit_search(K);
    REQUIRE(U.eta);
    CHECK(U.odd_index_certified);
    const PellUnit& e = fundamental_unit(Integer(d));
    CHECK(std::fabs(std::fabs(static_cast<double>(K.log_ratio(*U.eta))) - 2 * e.regulator) < 1e-6 * (1 + e.regulator));
    CHECK(abs(K.rel_norm(*U.eta).x) == 1);
    CHECK(K.rel_norm(*U.eta).x == e.norm);
  }
}

TEST_CASE("relation class groups over Q match the form class group") {
  for (long d = 2; d < 200; ++d) {
    if (!is_squarefree(Integer(d))) continue;
    CAPTURE(d);
    RelQuadField K = real_field(d);
    ClassGroupResult C = class_group(K);
    const auto& W = wide_class_data(field_discriminant(d));
    std::vector<Integer> want(W.invariant_factors.begin(), W.invariant_factors.end());
    CHECK(C.invariant_factors == want);
    CHECK(C.certified);
  }
}

TEST_CASE("units and classes over imaginary ground fields") {
  struct Case {
    FieldId id;
    RingElement pi1, pi2;
  };
  std::vector<Case> cases = {{FieldId::Qi, RingElement(1, 4), RingElement(5, 4)},
                             {FieldId::Qsqrt_2, RingElement(3, 2), RingElement(-3, 4)},
                             {FieldId::Qsqrt_3, RingElement(Integer(7)), RingElement(Integer(13))}};
  for (const auto& c : cases) {
    const auto& F = GroundField::get(c.id);
    RingElement mu = F.mul(c.pi1, c.pi2);
    if (c.id == FieldId::Qsqrt_3) mu = RingElement(Integer(13));
    RelQuadField K = RelQuadField::build(F, mu);
    CAPTURE(K.label());
    UnitResult U = unit_search(K);
    REQUIRE(U.eta);
    CHECK(U.odd_index_certified);
    CHECK(F.unit_index(K.rel_norm(*U.eta)) >= 0);
    CHECK(U.regulator > 0);
    ClassGroupResult C = class_group(K, 1, &U);
    CHECK(C.certified);
    CHECK(C.analytic_ratio > 0.7);
    CHECK(C.analytic_ratio < 1.4);
    Integer prod = 1;
    for (const auto& d : C.invariant_factors) prod *= d;
    CHECK(prod == C.h);
    // every factor-base place has a class, and a place times its conjugate is the class of its norm
    for (const auto& P : C.factor_base) {
      auto v = class_of(K, C, P);
      CHECK(v.size() == C.invariant_factors.size());
    }
  }
}

TEST_CASE("two-primary test in K agrees with enumeration mod 4") {
  const auto& F = GroundField::get(FieldId::Qi);
  RelQuadField K = RelQuadField::build(F, RingElement(-11, 24));
  std::set<std::tuple<long, long, long, long>> squares;
  auto m4 = [](const Integer& v) -> long { return Integer(((v % 4) + 4) % 4).get_si(); };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          KElement x{RingElement(a, b), RingElement(c, d)};
          KElement s = K.mul(x, x);
          squares.insert({m4(s.x.x), m4(s.x.y), m4(s.y.x), m4(s.y.y)});
        }
  std::mt19937_64 rng(29);
  int checked = 0;
  while (checked < 300) {
    KElement a = random_element(F, rng, 50);
    if (K.abs_norm(a) % 2 == 0) continue;
    bool want = squares.count({m4(a.x.x), m4(a.x.y), m4(a.y.x), m4(a.y.y)}) > 0;
    CHECK(is_two_primary(K, a) == want);
    ++checked;
  }
}

TEST_CASE("first supplementary law on small ideals") {
  std::mt19937_64 rng(31);
  for (FieldId id : GroundField::all()) {
    const auto& F = GroundField::get(id);
    std::vector<PrimePlace> odd;
    for (const auto& P : places_up_to(F, 200))
      if (P.p != 2) odd.push_back(P);
    for (int i = 0; i < 50; ++i) {
      std::vector<PrimePlace> ideal;
      for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
        const auto& P = odd[rng() % odd.size()];
        if (std::find(ideal.begin(), ideal.end(), P) == ideal.end()) ideal.push_back(P);
      }
      CHECK(supplementary_check(F, ideal).pass());
      if (id == FieldId::Q) CHECK(supplementary_check(F, ideal, true).pass());
    }
    std::vector<PrimePlace> twice = {odd[0], odd[0]};
    CHECK_THROWS_AS(supplementary_check(F, twice), error);
  }
}

TEST_CASE("ambiguous class numbers of real quadratic fields") {
  for (long d : {221L, 145L, 65L, 21L, 105L, 15L}) {
    RelQuadField K = real_field(d);
    UnitResult U = unit_search(K);
    ClassGroupResult C = class_group(K, 1, &U);
    AmbiguousReport A = ambiguous_counts(K, C, &U);
    CAPTURE(d);
    CHECK(A.consistent());
    CHECK(A.am_formula * A.norm_index == A.am_st_formula * A.unit_norm_index);
  }
}
