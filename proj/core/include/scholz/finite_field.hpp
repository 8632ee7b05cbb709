#pragma once

#include <optional>
#include <vector>

#include "scholz/integer.hpp"

namespace scholz {

/// Element a + b*w of a residue field; b is always 0 in prime fields.
struct Fq {
  u64 a = 0;
  u64 b = 0;
  friend bool operator==(const Fq&, const Fq&) = default;
};

/// The residue field of a prime of a ground ring: either F_p, or F_p[w]/(w^2 - T w + N)
/// with the minimal polynomial of the ring generator irreducible mod p.
class ResidueField {
 public:
  static ResidueField prime(u64 p);
  static ResidueField quadratic(u64 p, u64 trace, u64 norm);

  u64 characteristic() const { return p_; }
  int degree() const { return degree_; }
  u128 order() const { return degree_ == 1 ? u128(p_) : u128(p_) * p_; }

  Fq from_int(u64 v) const { return {v % p_, 0}; }
  Fq from_signed(i64 v) const { return {mod_u64(v, p_), 0}; }
  Fq make(u64 a, u64 b) const { return {a % p_, degree_ == 1 ? 0 : b % p_}; }
  Fq zero() const { return {0, 0}; }
  Fq one() const { return {1 % p_, 0}; }

  Fq add(Fq x, Fq y) const;
  Fq sub(Fq x, Fq y) const;
  Fq neg(Fq x) const;
  Fq mul(Fq x, Fq y) const;
  Fq pow(Fq x, u128 e) const;
  Fq inv(Fq x) const;
  Fq div(Fq x, Fq y) const { return mul(x, inv(y)); }
  bool is_zero(Fq x) const { return x.a == 0 && x.b == 0; }

  /// Norm down to F_p (the identity in prime fields).
  u64 norm(Fq x) const;

  /// Quadratic character: 0, +1 or -1. Characteristic 2 fields report +1 for units.
  int legendre(Fq x) const;
  bool is_square(Fq x) const { return legendre(x) >= 0; }
  std::optional<Fq> sqrt(Fq x) const;

  /// Roots of X^2 - t X + n, listed in ascending (a, b) order.
  std::vector<Fq> quadratic_roots(Fq t, Fq n) const;

  std::vector<Fq> elements() const;

 private:
  ResidueField(u64 p, int degree, u64 trace, u64 norm) : p_(p), degree_(degree), trace_(trace), norm_(norm) {}
  Fq nonresidue() const;

  u64 p_;
  int degree_;
  u64 trace_;  // w^2 = trace*w - norm
  u64 norm_;
};

}  // namespace scholz
