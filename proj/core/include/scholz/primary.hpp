#pragma once

#include <span>
#include <vector>

#include "scholz/rel_field.hpp"

namespace scholz {

/// a == xi^2 mod 4 O_K for some xi in O_K. Throws errc::even_element on even norm.
bool is_two_primary(const RelQuadField& K, const KElement& a);
/// Two-primary and positive at every real embedding of K.
bool is_primary(const RelQuadField& K, const KElement& a);

/// Ground-field versions (see GroundField::is_two_primary / is_primary).
bool is_two_primary(const GroundField& F, const RingElement& a);
bool is_primary(const GroundField& F, const RingElement& a);

/// The first supplementary law for a squarefree odd ideal given by its prime places.
struct SupplementaryReport {
  bool strict = false;
  RingElement generator;          // product of the place generators
  Sign unit_symbol = Sign::plus;  // (E/a), or (E+/a) for the strict variant
  /// Indices k such that zeta^k * generator is primary (2-primary in the strict variant).
  std::vector<int> primary_units;
  bool equivalence = false;  // unit_symbol == +1  <=>  primary_units nonempty
  bool uniqueness = false;   // primary_units is empty or a single coset of squares
  bool pass() const { return equivalence && uniqueness; }
};

/// Throws errc::not_squarefree on repeated places and errc::even_place on places above 2.
SupplementaryReport supplementary_check(const GroundField& F, std::span<const PrimePlace> ideal, bool strict = false);

}  // namespace scholz
