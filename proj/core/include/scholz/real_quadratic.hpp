#pragma once

#include <memory>

#include "scholz/forms.hpp"
#include "scholz/symbols.hpp"

namespace scholz {

/// Fundamental unit eps = x + y w of Q(sqrt d), with w = (1 + sqrt d)/2 when d = 1 mod 4
/// and w = sqrt d otherwise. Always eps > 1.
struct PellUnit {
  Integer d;
  Integer x;
  Integer y;
  bool half = false;
  int norm = 1;
  std::size_t period = 0;
  double regulator = 0;  // log eps
};

/// Continued-fraction (PQa) computation for squarefree d > 1.
/// Throws errc::not_squarefree. Results are memoized (thread-safe).
const PellUnit& fundamental_unit(const Integer& d);

/// Norm of x + y w in Z.
Integer pell_norm(const PellUnit& u);

/// Image of eps_d in Z/q under the root w -> (1 + r)/2 (resp. r) with r^2 = d mod q.
u64 reduce_unit(const PellUnit& u, u64 q, u64 root);

/// (eps_p / q) for primes p, q = 1 mod 4 with (p/q) = +1; the choice of sqrt(p) mod q
/// does not matter because N eps_p = -1. Throws errc::bad_residue_class or errc::not_split.
Sign eps_symbol(u64 p, u64 q);
/// The same symbol under both square roots of p mod q.
std::pair<Sign, Sign> eps_symbol_both_roots(u64 p, u64 q);

/// Class data of the real quadratic field of fundamental discriminant D.
struct WideClassData {
  i64 D = 0;
  i64 h = 0;
  i64 h_plus = 0;
  int unit_norm = 0;
  std::vector<i64> invariant_factors;         // wide
  std::vector<i64> narrow_invariant_factors;  // Cl+
};
/// Memoized; the unit norm from continued fractions is cross-checked against the form cycle criterion.
const WideClassData& wide_class_data(i64 D);

/// Fundamental discriminant of Q(sqrt d) for squarefree d > 1.
i64 field_discriminant(i64 d);

}  // namespace scholz
