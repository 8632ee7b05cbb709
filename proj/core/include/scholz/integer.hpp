#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace scholz {

using Integer = mpz_class;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u128 exp, u64 mod);
u64 invmod(u64 a, u64 mod);

// Reduces an arbitrary-precision integer into [0, m).
u64 mod_u64(const Integer& a, u64 m);
inline u64 mod_u64(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

/// Deterministic Miller-Rabin below 2^64, BPSW (GMP) above.
bool is_prime(u64 n);
bool is_prime(const Integer& n);

/// Tonelli-Shanks square root modulo an odd prime. Throws errc::not_a_residue
/// when `a` is a non-residue; `0` maps to `0`.
u64 sqrt_mod(u64 a, u64 p);
std::optional<u64> try_sqrt_mod(u64 a, u64 p);

Integer isqrt(const Integer& n);
std::optional<Integer> exact_sqrt(const Integer& n);
u64 isqrt(u64 n);

std::vector<u64> primes_up_to(u64 n);

struct PrimePower {
  Integer p;
  unsigned e;
};
/// Trial division; intended for the desk-scale norms this library deals with.
std::vector<PrimePower> factor(Integer n);
bool is_squarefree(const Integer& n);

inline bool fits_i64(const Integer& a) { return a.fits_slong_p(); }
Integer to_integer(i128 v);
i128 to_i128(const Integer& v);

std::string to_string(const Integer& v);

}  // namespace scholz
