#include <doctest.h>

#include <cmath>

#include "scholz/ambiguous.hpp"
#include "scholz/class_group.hpp"
#include "scholz/error.hpp"
#include "scholz/primary.hpp"
#include "scholz/real_quadratic.hpp"
#include "scholz/units.hpp"
#include "scholz/verify.hpp"

using namespace scholz;

namespace {

const GroundField& Q() { return GroundField::get(FieldId::Q); }
const GroundField& Qi() { return GroundField::get(FieldId::Qi); }
const GroundField& Q2() { return GroundField::get(FieldId::Qsqrt_2); }
RingElement z(long v) { return RingElement(Integer(v)); }
RelQuadField real_field(long d) { return RelQuadField::build(Q(), z(d)); }

const Clause* clause(const VerificationRecord& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("ring basics") {
  CHECK(Qi().norm(RingElement(1, 4)) == 17);
  CHECK(Q2().norm(RingElement(3, 2)) == 17);
  CHECK(Qi().norm(z(-1)) == 1);
  CHECK(Qi().associated(Qi().gcd(RingElement(1, 4), z(17)), RingElement(1, 4)));
  CHECK(Q().gcd(z(6), z(4)) == z(2));
  CHECK(Qi().associated(Qi().gcd(RingElement(3, 5), RingElement()), RingElement(3, 5)));
  CHECK_THROWS_AS(Qi().divmod(RingElement(1, 1), RingElement()), error);

  Splitting s17 = factor_rational_prime(17, Qi());
  CHECK(s17.kind == SplitKind::split);
  REQUIRE(s17.places.size() == 2);
  for (const auto& P : s17.places)
    CHECK((Qi().associated(P.generator, RingElement(1, 4)) || Qi().associated(P.generator, RingElement(1, -4))));
  CHECK(factor_rational_prime(3, Qi()).kind == SplitKind::inert);
  Splitting s41 = factor_rational_prime(41, Q2());
  CHECK(s41.kind == SplitKind::split);
  for (const auto& P : s41.places) CHECK(Q2().norm(P.generator) == 41);
  CHECK_THROWS_AS(factor_rational_prime(15, Qi()), error);

  CHECK(primary_associate(Qi(), RingElement(5, 4)) == RingElement(5, 4));
  CHECK(primary_associate(Q2(), RingElement(3, 4)) == RingElement(-3, 4));
  CHECK(primary_associate(Q(), z(-13)) == z(13));

  u64 r = sqrt_mod(13, 17);
  CHECK((r == 8 || r == 9));
  r = sqrt_mod(5, 29);
  CHECK((r == 11 || r == 18));
  CHECK_THROWS_AS(sqrt_mod(3, 7), error);
}

TEST_CASE("symbol values") {
  CHECK(jacobi(2, 15) == Sign::plus);
  CHECK(jacobi(-1, 5) == Sign::plus);
  CHECK(jacobi(3, 7) == Sign::minus);
  CHECK(quad_symbol(Qi(), RingElement(1, 4), place_of(Qi(), RingElement(5, 4))) == Sign::plus);
  CHECK(quad_symbol(Q2(), RingElement(3, 2), place_of(Q2(), RingElement(-3, 4))) == Sign::plus);
  CHECK(quartic_rational(Integer(29), 5) == Sign::minus);
  CHECK(quartic_rational(Integer(13), 17) == Sign::plus);
  CHECK(quartic_rational(Integer(2), 17) == Sign::minus);
  CHECK_THROWS_AS(quartic_rational(Integer(3), 7), error);

  // over Z the biquadratic symbol is the rational quartic symbol
  for (u64 p : primes_up_to(150))
    for (u64 q : primes_up_to(150)) {
      if (p % 4 != 1 || q % 4 != 1 || p == q || jacobi(static_cast<i64>(p), q) != Sign::plus) continue;
      CHECK(quartic_primary(Q(), z(static_cast<long>(p)), z(static_cast<long>(q))) == quartic_rational(Integer(static_cast<unsigned long>(p)), q));
    }
  auto [s, t] = quartic_primary_both_roots(Q2(), RingElement(3, 2), RingElement(-3, 4));
  CHECK(s == t);

  CHECK(unit_group_symbol(Q(), place_of(Q(), z(13))) == Sign::plus);
  CHECK(unit_group_symbol(Q(), place_of(Q(), z(7))) == Sign::minus);
  CHECK(unit_group_symbol(Qi(), factor_rational_prime(17, Qi()).places[0]) == Sign::plus);
  CHECK(unit_group_symbol(Qi(), factor_rational_prime(13, Qi()).places[0]) == Sign::minus);
}

TEST_CASE("real quadratic values") {
  const PellUnit& e5 = fundamental_unit(Integer(5));
  CHECK((e5.half && e5.x == 0 && e5.y == 1 && e5.norm == -1));
  const PellUnit& e13 = fundamental_unit(Integer(13));
  CHECK((e13.x == 1 && e13.y == 1 && e13.norm == -1));
  const PellUnit& e21 = fundamental_unit(Integer(21));
  CHECK((e21.x == 2 && e21.y == 1 && e21.norm == 1));

  CHECK(narrow_class_group(5).h_plus == 1);
  CHECK(narrow_class_group(65).h_plus == 2);
  FormClassGroup G145 = narrow_class_group(145);
  CHECK(G145.invariant_factors == std::vector<i64>{4});
  CHECK_THROWS_AS(narrow_class_group(20), error);

  CHECK(eps_symbol(13, 17) == Sign::minus);
  CHECK(eps_symbol(17, 13) == Sign::minus);
  CHECK(eps_symbol(5, 29) == Sign::plus);

  CHECK(wide_class_data(21).h == 1);
  CHECK(wide_class_data(65).h == 2);
  CHECK(wide_class_data(221).h == 2);
  CHECK(wide_class_data(221).unit_norm == 1);
}

TEST_CASE("relative quadratic engine values") {
  RelQuadField K221 = real_field(221);
  CHECK(K221.half_basis());
  CHECK(K221.absolute_discriminant() == 221);
  RelQuadField K10 = real_field(10);
  CHECK_FALSE(K10.half_basis());
  CHECK(K10.absolute_discriminant() == 40);
  RelQuadField Kqi = RelQuadField::build(Qi(), Qi().mul(RingElement(1, 4), RingElement(5, 4)));
  CHECK(Kqi.base().id() == FieldId::Qi);

  CHECK(K221.split_kind(place_of(Q(), z(5))) == SplitKind::split);
  CHECK(K221.split_kind(place_of(Q(), z(13))) == SplitKind::ramified);
  CHECK(K221.split_kind(place_of(Q(), z(3))) == SplitKind::inert);  // (221/3) = (2/3) = -1

  UnitResult U65 = unit_search(real_field(65));
  REQUIRE(U65.eta);
  CHECK(U65.odd_index_certified);
  CHECK(U65.eta_norm == z(-1));
  CHECK(std::fabs(std::fabs(static_cast<double>(real_field(65).log_ratio(*U65.eta))) - 2 * std::log(8 + std::sqrt(65.0))) < 1e-9);

  RelQuadField Kpi = RelQuadField::build(Qi(), RingElement(1, 4));
  UnitResult Upi = unit_search(Kpi);
  REQUIRE(Upi.eta);
  CHECK(Qi().unit_index(Upi.eta_norm) >= 0);
  CHECK_THROWS_AS(unit_search(real_field(-7)), error);

  KElement w2 = K221.mul(K221.theta(), K221.theta());  // (1 + sqrt 221)^2 / 4
  CHECK(is_square(K221, K221.scale(z(4), w2)));
  RelQuadField K5 = real_field(5);
  CHECK_FALSE(is_square(K5, K5.theta()));

  CHECK(class_group(real_field(21)).h == 1);
  ClassGroupResult C145 = class_group(real_field(145));
  CHECK(C145.invariant_factors == std::vector<Integer>{4});
  ClassGroupResult Cqi = class_group(Kqi);
  CHECK(Cqi.two_class_number % 2 == 0);
}

TEST_CASE("primary elements and the supplementary law") {
  CHECK(is_two_primary(Q(), z(-3)));
  CHECK_FALSE(is_primary(Q(), z(-3)));
  CHECK(is_primary(Q(), z(13)));
  CHECK(is_two_primary(Qi(), RingElement(1, 4)));
  CHECK_THROWS_AS(is_two_primary(Q(), z(6)), error);

  PrimePlace p13 = place_of(Q(), z(13)), p7 = place_of(Q(), z(7)), p3 = place_of(Q(), z(3));
  auto r13 = supplementary_check(Q(), std::span<const PrimePlace>(&p13, 1));
  CHECK(r13.unit_symbol == Sign::plus);
  CHECK(r13.pass());
  auto r7 = supplementary_check(Q(), std::span<const PrimePlace>(&p7, 1));
  CHECK(r7.unit_symbol == Sign::minus);
  CHECK(r7.primary_units.empty());
  CHECK(r7.pass());
  auto r3 = supplementary_check(Q(), std::span<const PrimePlace>(&p3, 1), true);
  CHECK_FALSE(r3.primary_units.empty());
  CHECK(r3.pass());
}

TEST_CASE("ambiguous classes and the Galois action") {
  RelQuadField K = real_field(221);
  UnitResult U = unit_search(K);
  ClassGroupResult C = class_group(K, 1, &U);
  AmbiguousReport A = ambiguous_counts(K, C, &U);
  CHECK(A.e_product == 4);
  CHECK(A.am_formula == 2);
  CHECK(A.am_direct == 2);

  RelQuadField K13 = real_field(13);
  UnitResult U13 = unit_search(K13);
  AmbiguousReport A13 = ambiguous_counts(K13, class_group(K13, 1, &U13), &U13);
  CHECK(A13.am_formula == 1);
  CHECK(A13.consistent());

  KElement g{z(3), z(1)};
  CHECK(galois_action(K, OIdeal::principal(K, g)) == OIdeal::principal(K, K.conj(g)));
  auto ram = K.places_over(place_of(Q(), z(13)));
  REQUIRE(ram.size() == 1);
  OIdeal R = OIdeal::from_place(K, ram[0]);
  CHECK(galois_action(K, R) == R);
  auto sp = K.places_over(place_of(Q(), z(5)));
  REQUIRE(sp.size() == 2);
  CHECK(galois_action(K, OIdeal::from_place(K, sp[0])) == OIdeal::from_place(K, sp[1]));
}

TEST_CASE("unit symbols in K") {
  RelQuadField K = real_field(13);
  UnitResult U = unit_search(K);
  auto P = K.places_over(place_of(Q(), z(17)));
  REQUIRE(P.size() == 2);
  CHECK(unit_symbol_rel(K, U, P[0]) == Sign::minus);
  CHECK(unit_symbol_rel(K, U, P[1]) == Sign::minus);
  UnitResult bad = U;
  bad.odd_index_certified = false;
  CHECK_THROWS_AS(unit_symbol_rel(K, bad, P[0]), error);
}

TEST_CASE("theorem records") {
  auto a = verify_tsrc(3, 7);
  CHECK(a.case_label == "a");
  CHECK(a.h == 1);
  CHECK(a.unit_norm == z(1));
  CHECK_FALSE(a.failed());
  auto b = verify_tsrc(5, 13);
  CHECK(b.case_label == "b");
  CHECK(b.h == 2);
  CHECK(b.unit_norm == z(-1));
  auto c = verify_tsrc(13, 17);
  CHECK(c.case_label == "c-");
  CHECK(c.e1_p2 == Sign::minus);
  CHECK(c.e2_p1 == Sign::minus);
  CHECK(*c.quartic12 * *c.quartic21 == Sign::minus);
  CHECK(c.h == 2);
  auto d = verify_tsrc(5, 29);
  CHECK(d.case_label == "c+");
  CHECK(*d.h % 8 == 4);
  CHECK(clause(d, "strong_h_4mod8") != nullptr);
  for (auto* r : {&a, &b, &c, &d}) CHECK_FALSE(r->failed());
  CHECK_THROWS_AS(verify_tsrc(3, 5), error);

  // over Q the main theorem reproduces the classical record
  auto m = verify_tmain(Q(), z(13), z(17));
  CHECK(m.legendre == c.legendre);
  CHECK(m.e1_p2 == c.e1_p2);
  CHECK(m.h == c.h);
  CHECK_FALSE(m.failed());

  auto qi = verify_tmain(Qi(), RingElement(1, 4), RingElement(5, 4));
  CHECK_FALSE(qi.failed());
  CHECK_FALSE(qi.skipped());
  auto q2 = verify_tmain(Q2(), RingElement(3, 2), RingElement(-3, 4));
  CHECK(q2.legendre == Sign::plus);
  CHECK_FALSE(q2.failed());
  auto s2 = verify_srl2(RingElement(3, 2), RingElement(-3, 4));
  CHECK(s2.legendre == Sign::plus);
  CHECK_FALSE(s2.failed());
  CHECK_THROWS_AS(verify_srli(RingElement(1, 2), RingElement(5, 4)), error);

  auto X = x_character(Q(), z(13), z(17));
  CHECK(X.x_minus_one == Sign::minus);
  CHECK(X.quartic_product == Sign::minus);
  CHECK_FALSE(X.failed());
}
