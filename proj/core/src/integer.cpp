#include "scholz/integer.hpp"

#include <algorithm>
#include <cmath>

#include "scholz/error.hpp"

namespace scholz {

std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_prime: return "NotPrime";
    case errc::no_primary_associate: return "NoPrimaryAssociate";
    case errc::not_a_residue: return "NotAResidue";
    case errc::shared_factor: return "SharedFactor";
    case errc::even_place: return "EvenPlace";
    case errc::bad_modulus: return "BadModulus";
    case errc::not_primary: return "NotPrimary";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::not_fundamental: return "NotFundamental";
    case errc::not_split: return "NotSplit";
    case errc::bad_residue_class: return "BadResidueClass";
    case errc::trivial_extension: return "TrivialExtension";
    case errc::non_monogenic_at_two: return "NonMonogenicAtTwo";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::wrong_rank: return "WrongRank";
    case errc::uncertified_result: return "UncertifiedResult";
    case errc::effort_exceeded: return "EffortExceeded";
    case errc::even_element: return "EvenElement";
    case errc::not_two_ramified: return "NotTwoRamified";
    case errc::uncertified_dependency: return "UncertifiedDependency";
    case errc::lift_not_found: return "LiftNotFound";
    case errc::bad_congruence: return "BadCongruence";
    case errc::uncertified_units: return "UncertifiedUnits";
    case errc::unsupported: return "Unsupported";
    case errc::internal: return "InternalError";
  }
  return "Unknown";
}

u64 powmod(u64 base, u128 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 mod) {
  i128 t = 0, new_t = 1;
  i128 r = mod, new_r = a % mod;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) raise(errc::shared_factor, "element is not invertible modulo " + std::to_string(mod));
  if (t < 0) t += mod;
  return static_cast<u64>(t);
}

u64 mod_u64(const Integer& a, u64 m) {
  // mpz_fdiv_ui takes an unsigned long, which is 64 bits on the supported targets.
  return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m));
}

namespace {

bool miller_rabin_round(u64 n, u64 d, unsigned s, u64 a) {
  u64 x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1 || x == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64.
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<u64>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::optional<u64> try_sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  if (s == 1) return powmod(a, (p + 1) / 4, p);
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

u64 sqrt_mod(u64 a, u64 p) {
  if (p < 3 || (p & 1) == 0) raise(errc::bad_modulus, "sqrt_mod needs an odd prime, got " + std::to_string(p));
  auto r = try_sqrt_mod(a, p);
  if (!r) raise(errc::not_a_residue, std::to_string(a % p) + " mod " + std::to_string(p));
  return *r;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimePower> factor(Integer n) {
  std::vector<PrimePower> out;
  if (n < 0) n = -n;
  if (n == 0) raise(errc::division_by_zero, "cannot factor 0");
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (Integer d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& pe : factor(n)) {
    if (pe.e > 1) return false;
  }
  return true;
}

Integer to_integer(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(static_cast<u64>(u)));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

i128 to_i128(const Integer& v) {
  Integer a = abs(v);
  Integer lo_part = a & Integer("18446744073709551615");
  Integer hi_part = a >> 64;
  u128 u = (static_cast<u128>(hi_part.get_ui()) << 64) | static_cast<u128>(lo_part.get_ui());
  i128 r = static_cast<i128>(u);
  return v < 0 ? -r : r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace scholz
