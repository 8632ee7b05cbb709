#pragma once
// Brute-force reference implementations. Deliberately naive: they share no code
// with the library beyond the ring-element struct.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "scholz/ground_field.hpp"

namespace oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline u64 mulm(u64 a, u64 b, u64 m) { return static_cast<u64>((unsigned __int128)a * b % m); }

inline u64 powm(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulm(r, b, m);
    b = mulm(b, b, m);
    e >>= 1;
  }
  return r;
}

inline u64 modp(i64 a, u64 p) {
  i64 r = a % static_cast<i64>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Euler's criterion: 0, 1 or -1.
inline int legendre(i64 a, u64 p) {
  u64 x = modp(a, p);
  if (x == 0) return 0;
  return powm(x, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Jacobi symbol through trial factorisation of n.
inline int jacobi(i64 a, u64 n) {
  int r = 1;
  for (u64 p = 3; n > 1; p += 2) {
    while (n % p == 0) {
      r *= legendre(a, p);
      n /= p;
    }
    if (p * p > n && n > 1) {
      r *= legendre(a, n);
      break;
    }
  }
  return r;
}

/// Smallest r with r^2 = a mod p.
inline std::optional<u64> sqrt_mod(i64 a, u64 p) {
  u64 x = modp(a, p);
  for (u64 r = 0; r < p; ++r)
    if (mulm(r, r, p) == x) return r;
  return std::nullopt;
}

/// (a/q)_4 for a square a mod q, q = 1 mod 4: the Legendre symbol of a square root.
inline int quartic(i64 a, u64 q) {
  auto r = sqrt_mod(a, q);
  return r ? legendre(static_cast<i64>(*r), q) : 0;
}

/// Fundamental unit of Q(sqrt d) as (X, Y, norm) with eps = (X + Y sqrt d)/2, X^2 - d Y^2 = +-4, smallest Y > 0.
inline std::optional<std::tuple<i64, i64, int>> pell(i64 d, i64 ymax = 2000000) {
  for (i64 y = 1; y <= ymax; ++y) {
    for (int s : {-1, 1}) {
      __int128 t = (__int128)d * y * y + 4 * s;
      if (t <= 0) continue;
      i64 x = static_cast<i64>(sqrtl(static_cast<long double>(t)));
      while ((__int128)x * x > t) --x;
      while ((__int128)(x + 1) * (x + 1) <= t) ++x;
      if ((__int128)x * x != t) continue;
      // (x + y sqrt d)/2 must be integral in Q(sqrt d)
      if (d % 4 != 1 && (x % 2 || y % 2)) continue;
      return std::tuple{x, y, -s == 1 ? -1 : 1};
    }
  }
  return std::nullopt;
}

/// Narrow class number of discriminant D > 0 (non-square) from cycles of reduced forms.
inline long narrow_class_number(i64 D) {
  long double s = sqrtl(static_cast<long double>(D));
  auto reduced = [&](i64 a, i64 b) {
    long double sa = std::fabs(static_cast<long double>(a));
    return b > 0 && b < s && s - b < 2 * sa && 2 * sa < s + b;
  };
  std::set<std::tuple<i64, i64, i64>> forms;
  for (i64 b = 1; b < s; ++b) {
    if ((b - D) % 2 != 0) continue;
    i64 ac = (b * b - D) / 4;  // negative
    for (i64 a = 1; a <= -ac; ++a) {
      if (ac % a) continue;
      for (i64 sa : {a, -a}) {
        i64 c = ac / sa;
        if (reduced(sa, b)) forms.insert({sa, b, c});
      }
    }
  }
  // rho: (a, b, c) -> (c, b', a') with b' = -b mod 2c chosen in the reduced window
  auto rho = [&](std::tuple<i64, i64, i64> f) {
    auto [a, b, c] = f;
    i64 m = 2 * std::llabs(c);
    i64 bb = -b;
    // choose bb = -b mod 2|c| with s - 2|c| < bb < s
    i64 k = static_cast<i64>(std::floor((s - bb) / m));
    bb += k * m;
    if (bb >= s) bb -= m;
    while (bb + m < s) bb += m;
    i64 cc = (bb * bb - D) / (4 * c);
    return std::tuple{c, bb, cc};
  };
  std::set<std::tuple<i64, i64, i64>> seen;
  long cycles = 0;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    ++cycles;
    auto g = f;
    for (int guard = 0; guard < 100000 && !seen.count(g); ++guard) {
      seen.insert(g);
      g = rho(g);
    }
  }
  return cycles;
}

/// Image of x + y w in F_p under the root r of w's minimal polynomial that kills pi.
struct DegreeOne {
  u64 p;
  u64 r;
};
inline DegreeOne degree_one(const scholz::GroundField& F, const scholz::RingElement& pi) {
  u64 p = F.norm(pi).get_ui();
  i64 T = F.gen_trace(), N = F.gen_norm();
  for (u64 r = 0; r < p; ++r) {
    if (modp(static_cast<i64>(mulm(r, r, p)) - T * static_cast<i64>(r) + N, p) != 0) continue;
    i64 x = pi.x.get_si() % static_cast<i64>(p), y = pi.y.get_si() % static_cast<i64>(p);
    if (modp(x + static_cast<i64>(mulm(modp(y, p), r, p)), p) == 0) return {p, r};
  }
  return {p, 0};
}

inline u64 image(const DegreeOne& P, const scholz::RingElement& a) {
  i64 x = scholz::Integer(a.x % static_cast<long>(P.p)).get_si(), y = scholz::Integer(a.y % static_cast<long>(P.p)).get_si();
  return modp(x + static_cast<i64>(mulm(modp(y, P.p), P.r, P.p)), P.p);
}

/// [a / pi] for a degree-one prime pi.
inline int residue_symbol(const scholz::GroundField& F, const scholz::RingElement& a, const scholz::RingElement& pi) {
  auto P = degree_one(F, pi);
  return legendre(static_cast<i64>(image(P, a)), P.p);
}

/// a == xi^2 mod 4 by enumerating xi modulo 4.
inline bool two_primary(const scholz::GroundField& F, const scholz::RingElement& a) {
  auto m4 = [](const scholz::Integer& v) -> scholz::Integer { return ((v % 4) + 4) % 4; };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < (F.rational() ? 1 : 4); ++y) {
      scholz::RingElement s = F.mul(scholz::RingElement(x, y), scholz::RingElement(x, y));
      if (m4(s.x) == m4(a.x) && m4(s.y) == m4(a.y)) return true;
    }
  return false;
}

}  // namespace oracle
