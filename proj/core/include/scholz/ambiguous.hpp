#pragma once

#include <optional>
#include <vector>

#include "scholz/class_group.hpp"
#include "scholz/units.hpp"

namespace scholz {

struct AmbiguousReport {
  /// Places of F ramified in K, and the product of all ramification indices (finite and infinite).
  std::vector<PrimePlace> ramified;
  int infinite_ramified = 0;
  long e_product = 1;
  /// (E_F : E_F cap N K^x) from Hilbert symbols, and (E_F : N E_K) from the unit group.
  long norm_index = 1;
  long unit_norm_index = 1;
  long am_formula = 0;
  long am_st_formula = 0;
  /// Direct counts from the class group and the Galois action (certified class groups only).
  std::optional<long> am_direct;
  std::optional<long> am_st_direct;
  bool consistent() const {
    return am_direct && am_st_direct && *am_direct == am_formula && *am_st_direct == am_st_formula;
  }
};

/// Hilbert symbol (u, delta)_P for a unit u of F at every place, combined into
/// "u is a norm from K". Throws errc::unsupported when two dyadic places ramify.
bool unit_is_local_norm(const RelQuadField& K, const RingElement& u);

/// Places of F that ramify in K.
std::vector<PrimePlace> ramified_places(const RelQuadField& K);

/// Evaluates both ambiguous class number formulas and, for a certified class group,
/// counts the fixed and strongly ambiguous classes directly.
/// Units may be null for fields of unit rank zero.
AmbiguousReport ambiguous_counts(const RelQuadField& K, const ClassGroupResult& C, const UnitResult* units);

/// Number of classes fixed by the Galois action in a computed class group.
long count_fixed_classes(const RelQuadField& K, const ClassGroupResult& C);
/// Order of the subgroup generated by the given class vectors.
long subgroup_order(const ClassGroupResult& C, const std::vector<std::vector<Integer>>& gens);

}  // namespace scholz
