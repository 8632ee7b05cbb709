#pragma once

#include <optional>
#include <span>
#include <utility>

#include "scholz/ground_field.hpp"

namespace scholz {

enum class Sign : int { minus = -1, plus = 1 };

constexpr Sign operator*(Sign a, Sign b) { return static_cast<int>(a) == static_cast<int>(b) ? Sign::plus : Sign::minus; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign sign_of(int v) { return v < 0 ? Sign::minus : Sign::plus; }
constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Jacobi symbol (a/n) for odd n > 0 via binary reciprocity.
/// Throws errc::shared_factor when gcd(a, n) > 1 and errc::bad_modulus for even or non-positive n.
Sign jacobi(const Integer& a, const Integer& n);
Sign jacobi(i64 a, u64 n);
/// Jacobi symbol allowing a zero result (returns 0 on a shared factor).
int jacobi_value(u64 a, u64 n);

/// Quadratic residue symbol [a / p] in the ground ring, by Euler's criterion in the residue field.
/// Throws errc::even_place for places above 2 and errc::shared_factor when p divides a.
Sign quad_symbol(const GroundField& F, const RingElement& a, const PrimePlace& p);
/// Multiplicative extension to a product of odd places (listed with multiplicity).
Sign quad_symbol(const GroundField& F, const RingElement& a, std::span<const PrimePlace> ideal);

/// (a/q)_4 = (r/q) with r^2 = a mod q. Throws errc::bad_modulus unless q is a prime = 1 mod 4,
/// and errc::not_a_residue when (a/q) = -1.
Sign quartic_rational(const Integer& a, u64 q);
/// The same symbol evaluated with the root r (first) and with -r (second).
std::pair<Sign, Sign> quartic_rational_both_roots(const Integer& a, u64 q);

/// Rational biquadratic symbol (pi1/pi2)_4 for primary pi1, pi2 with [pi1/pi2] = +1.
/// Throws errc::not_primary or errc::not_a_residue.
Sign quartic_primary(const GroundField& F, const RingElement& pi1, const RingElement& pi2);
std::pair<Sign, Sign> quartic_primary_both_roots(const GroundField& F, const RingElement& pi1, const RingElement& pi2);

/// Generators of the unit group modulo squares, plus an optional infinite-order generator.
struct UnitGroupDescription {
  FieldId field;
  RingElement torsion_generator;
  std::optional<RingElement> infinite_generator;
};
UnitGroupDescription unit_group(const GroundField& F);

/// (E/a): +1 iff every listed generator is a quadratic residue modulo every place of the ideal.
Sign unit_group_symbol(const GroundField& F, const UnitGroupDescription& E, std::span<const PrimePlace> ideal);
inline Sign unit_group_symbol(const GroundField& F, const PrimePlace& p) {
  return unit_group_symbol(F, unit_group(F), std::span<const PrimePlace>(&p, 1));
}

}  // namespace scholz
