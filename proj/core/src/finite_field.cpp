#include "scholz/finite_field.hpp"

#include "scholz/error.hpp"

namespace scholz {

ResidueField ResidueField::prime(u64 p) { return ResidueField(p, 1, 0, 0); }

ResidueField ResidueField::quadratic(u64 p, u64 trace, u64 norm) {
  return ResidueField(p, 2, trace % p, norm % p);
}

Fq ResidueField::add(Fq x, Fq y) const {
  u64 a = x.a + y.a;
  u64 b = x.b + y.b;
  if (a >= p_) a -= p_;
  if (b >= p_) b -= p_;
  return {a, b};
}

Fq ResidueField::neg(Fq x) const { return {x.a ? p_ - x.a : 0, x.b ? p_ - x.b : 0}; }

Fq ResidueField::sub(Fq x, Fq y) const { return add(x, neg(y)); }

Fq ResidueField::mul(Fq x, Fq y) const {
  if (degree_ == 1) return {mulmod(x.a, y.a, p_), 0};
  // (a1 + b1 w)(a2 + b2 w) with w^2 = T w - N
  u64 bb = mulmod(x.b, y.b, p_);
  u64 a = mulmod(x.a, y.a, p_);
  u64 nbb = mulmod(norm_, bb, p_);
  a = a >= nbb ? a - nbb : a + p_ - nbb;
  u64 b = (mulmod(x.a, y.b, p_) + mulmod(x.b, y.a, p_)) % p_;
  b = (b + mulmod(trace_, bb, p_)) % p_;
  return {a, b};
}

Fq ResidueField::pow(Fq x, u128 e) const {
  Fq r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

u64 ResidueField::norm(Fq x) const {
  if (degree_ == 1) return x.a;
  // N(a + b w) = a^2 + T a b + N b^2
  u64 r = mulmod(x.a, x.a, p_);
  r = (r + mulmod(trace_, mulmod(x.a, x.b, p_), p_)) % p_;
  r = (r + mulmod(norm_, mulmod(x.b, x.b, p_), p_)) % p_;
  return r;
}

Fq ResidueField::inv(Fq x) const {
  if (is_zero(x)) raise(errc::division_by_zero, "inverse of zero in residue field");
  if (degree_ == 1) return {invmod(x.a, p_), 0};
  // conj(a + b w) = (a + T b) - b w, and x * conj(x) = N(x)
  u64 n_inv = invmod(norm(x), p_);
  Fq conj{(x.a + mulmod(trace_, x.b, p_)) % p_, x.b ? p_ - x.b : 0};
  return mul(conj, {n_inv, 0});
}

int ResidueField::legendre(Fq x) const {
  if (is_zero(x)) return 0;
  if (p_ == 2) return 1;
  u64 n = norm(x);
  u64 e = powmod(n, (p_ - 1) / 2, p_);
  return e == 1 ? 1 : -1;
}

Fq ResidueField::nonresidue() const {
  for (u64 b = 0; b < p_; ++b) {
    for (u64 a = 0; a < p_; ++a) {
      Fq z = make(a, b);
      if (legendre(z) == -1) return z;
    }
    if (degree_ == 1) break;
  }
  raise(errc::internal, "no non-residue found");
}

std::optional<Fq> ResidueField::sqrt(Fq x) const {
  if (is_zero(x)) return x;
  u128 q = order();
  if (p_ == 2) return pow(x, q / 2);
  if (legendre(x) != 1) return std::nullopt;
  if (degree_ == 1) return Fq{*try_sqrt_mod(x.a, p_), 0};
  // Tonelli-Shanks in F_{p^2}
  u128 m = q - 1;
  unsigned s = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++s;
  }
  Fq z = nonresidue();
  Fq c = pow(z, m);
  Fq t = pow(x, m);
  Fq r = pow(x, (m + 1) / 2);
  unsigned bits = s;
  while (!(t == one())) {
    unsigned i = 0;
    Fq t2 = t;
    while (!(t2 == one())) {
      t2 = mul(t2, t2);
      ++i;
    }
    Fq b = c;
    for (unsigned j = 0; j + 1 < bits - i; ++j) b = mul(b, b);
    bits = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

std::vector<Fq> ResidueField::quadratic_roots(Fq t, Fq n) const {
  std::vector<Fq> roots;
  if (p_ == 2) {
    for (const Fq& e : elements()) {
      if (is_zero(add(sub(mul(e, e), mul(t, e)), n))) roots.push_back(e);
    }
    return roots;
  }
  Fq inv2 = inv(from_int(2));
  Fq disc = sub(mul(t, t), mul(from_int(4), n));
  auto s = sqrt(disc);
  if (!s) return roots;
  Fq r1 = mul(add(t, *s), inv2);
  Fq r2 = mul(sub(t, *s), inv2);
  roots.push_back(r1);
  if (!(r1 == r2)) roots.push_back(r2);
  if (roots.size() == 2 && (roots[1].b < roots[0].b || (roots[1].b == roots[0].b && roots[1].a < roots[0].a))) {
    std::swap(roots[0], roots[1]);
  }
  return roots;
}

std::vector<Fq> ResidueField::elements() const {
  std::vector<Fq> out;
  u64 bmax = degree_ == 1 ? 1 : p_;
  for (u64 b = 0; b < bmax; ++b)
    for (u64 a = 0; a < p_; ++a) out.push_back({a, b});
  return out;
}

}  // namespace scholz
