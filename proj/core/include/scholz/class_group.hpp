#pragma once

#include <string>
#include <vector>

#include "scholz/lattice.hpp"
#include "scholz/rel_field.hpp"
#include "scholz/units.hpp"

namespace scholz {

/// A principal ideal (element) with its exponent vector over a factor base.
struct Relation {
  KElement element;
  std::vector<i64> exponents;
};

/// Factor base with a lookup from (F-place, K-place index) to position.
struct FactorBase {
  std::vector<KPlace> places;
  /// Position of a K-place, or -1.
  int find(const KPlace& P) const;
};

FactorBase make_factor_base(const RelQuadField& K, u64 bound);

/// Exponent vector of a nonzero element if it is smooth over the factor base.
std::optional<std::vector<i64>> smooth_exponents(const RelQuadField& K, const FactorBase& fb, const KElement& a);

/// Relations from rational-prime elements of F plus the first `target` smooth elements
/// a + b*theta (coprime a, b), scanned in order of absolute norm.
std::vector<Relation> collect_relations(const RelQuadField& K, const FactorBase& fb, std::size_t target, int effort);

struct ClassGroupResult {
  std::vector<KPlace> factor_base;
  std::size_t relation_count = 0;
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;  // each > 1, d_i | d_{i+1}
  Integer h = 0;
  Integer two_class_number = 0;
  /// Invariant factors at the three effort stages.
  std::vector<std::vector<Integer>> stages;
  double analytic_ratio = 0;
  bool stable = false;
  bool certified = false;
  std::string reason;  // why certification failed
  /// Class of each factor-base place, in coordinates modulo invariant_factors.
  std::vector<std::vector<Integer>> place_classes;
  /// Relations of the final stage (used for class lookups of other places).
  std::vector<Relation> relations;
  /// Column transform from the final Smith form (rows: factor-base places).
  IntMatrix transform;
  std::vector<Integer> diagonal;
};

/// Relation-lattice class group with analytic-ratio certification.
/// The unit data supplies the regulator; pass nullptr to compute it.
ClassGroupResult class_group(const RelQuadField& K, int effort = 1, const UnitResult* units = nullptr);

/// Class of an arbitrary place of K as coordinates modulo the invariant factors.
/// Places outside the factor base are reduced through a smooth cofactor.
/// Throws errc::effort_exceeded when no cofactor is found.
std::vector<Integer> class_of(const RelQuadField& K, const ClassGroupResult& C, const KPlace& P);
/// Class coordinates of an exponent vector over the factor base.
std::vector<Integer> class_of_vector(const ClassGroupResult& C, const std::vector<Integer>& v);

/// Truncated Euler product for the residue of the Dedekind zeta function at s = 1.
double zeta_residue_estimate(const RelQuadField& K, u64 prime_bound);

}  // namespace scholz
