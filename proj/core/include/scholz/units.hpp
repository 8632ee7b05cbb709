#pragma once

#include <optional>
#include <string>

#include "scholz/rel_field.hpp"

namespace scholz {

struct UnitOptions {
  /// Box search over y with coordinate bounds 2^k, k = kmin..kmax.
  int kmin = 4;
  int kmax = 5;
  /// Fall back to units from the kernel of the relation matrix when the box is exhausted.
  bool use_relations = true;
  int effort = 1;
};

struct UnitResult {
  KElement torsion_generator;
  int torsion_order = 0;
  /// Infinite-order unit with |sigma_1(eta)| > 1.
  std::optional<KElement> eta;
  RingElement eta_norm;  // N_{K/F}(eta), a root of unity of F
  /// eta * zeta is a non-square in K for every root of unity zeta.
  bool odd_index_certified = false;
  long double regulator = 0;  // regulator attached to eta
  std::string method;         // "pell", "box" or "relations"
  int bound_exponent = 0;     // last box exponent searched
};

/// Roots of unity of K: a generator and its order.
std::pair<KElement, int> torsion_of(const RelQuadField& K);

/// Unit group of a rank-one K. Throws errc::wrong_rank or errc::search_exhausted.
UnitResult unit_search(const RelQuadField& K, const UnitOptions& opts = {});

/// The group symbol (E_K / P): -1 as soon as one generator is a non-residue.
/// Throws errc::uncertified_units.
Sign unit_symbol_rel(const RelQuadField& K, const UnitResult& E, const KPlace& P);

/// The subgroup N_{K/F}(E_K) of E_F, as a sorted list of unit indices zeta^k.
std::vector<int> unit_norm_indices(const RelQuadField& K, const UnitResult& E);

}  // namespace scholz
