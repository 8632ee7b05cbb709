#include "scholz/rel_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scholz/error.hpp"

namespace scholz {

namespace {

RingElement ri(long v) { return RingElement(Integer(v)); }

struct Scaled {
  std::complex<long double> value;
  long exponent = 0;  // true value = value * 2^exponent
};

// Embeds x + y*w, scaling huge coordinates to avoid overflow.
Scaled embed_scaled(const GroundField& F, const RingElement& a) {
  std::size_t bits = std::max(mpz_sizeinbase(a.x.get_mpz_t(), 2), mpz_sizeinbase(a.y.get_mpz_t(), 2));
  long shift = bits > 900 ? static_cast<long>(bits) - 900 : 0;
  auto conv = [&](const Integer& v) {
    long e;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(m), static_cast<int>(e - shift));
  };
  long double x = conv(a.x), y = conv(a.y);
  std::complex<long double> w = F.rational() ? std::complex<long double>(0, 0) : F.generator_value();
  return {std::complex<long double>(x, 0) + y * w, shift};
}

long double log_abs(const Scaled& s) {
  return std::log(std::abs(s.value)) + static_cast<long double>(s.exponent) * std::numbers::ln2_v<long double>;
}

}  // namespace

RelQuadField RelQuadField::build(const GroundField& F, const RingElement& mu) {
  if (mu.is_zero()) raise(errc::not_squarefree, "radicand is zero");
  if (F.rational() && mu.y != 0) raise(errc::not_squarefree, "radicand outside Z");
  Integer N = F.norm(mu);
  if (N < 0) N = -N;
  for (const auto& pp : factor(N)) {
    for (const auto& P : factor_rational_prime(pp.p.get_ui(), F).places)
      if (P.valuation(F, mu) >= 2) raise(errc::not_squarefree, "radicand " + scholz::to_string(mu) + " is not squarefree");
  }
  if (F.is_square(mu)) raise(errc::trivial_extension, "radicand is a square in the ground field");

  RelQuadField K;
  K.F_ = &F;
  K.mu_ = mu;
  const long ymax = F.rational() ? 0 : 3;
  bool found = false;
  for (long x = 0; x < 4 && !found; ++x)
    for (long y = 0; y <= ymax && !found; ++y) {
      RingElement s{Integer(x), Integer(y)};
      if (F.congruent(F.mul(s, s), mu, 4)) {
        found = true;
        K.half_ = true;
        K.s_ = s;
        RingElement num = F.mul(s, s) - mu;
        K.t_ = s;
        K.n_ = RingElement(Integer(num.x / 4), Integer(num.y / 4));
      }
    }
  if (!found) {
    K.half_ = false;
    K.s_ = RingElement();
    K.t_ = RingElement();
    K.n_ = -mu;
    for (const auto& Q : factor_rational_prime(2, F).places) {
      auto R = Q.residue_field(F);
      for (const Fq& e : R.elements()) {
        RingElement s = Q.lift(e);
        RingElement diff = F.mul(s, s) - mu;
        if (!Q.divides(F, diff)) continue;
        if (Q.valuation(F, diff) >= 2)
          raise(errc::non_monogenic_at_two, "O_F[sqrt mu] is not maximal above 2 and mu is not 2-primary");
        break;
      }
    }
  }
  K.delta_ = F.mul(K.t_, K.t_) - Integer(4) * K.n_;
  Integer nd = F.norm(K.delta_);
  K.disc_ = Integer(F.discriminant()) * Integer(F.discriminant()) * nd;
  if (F.rational()) {
    if (K.delta_.x > 0) { K.r1_ = 2; K.r2_ = 0; } else { K.r1_ = 0; K.r2_ = 1; }
  } else {
    K.r1_ = 0;
    K.r2_ = 2;
  }
  long double absd = std::fabs(static_cast<long double>(K.disc_.get_d()));
  const long double pi = std::numbers::pi_v<long double>;
  if (K.degree() == 2)
    K.minkowski_ = static_cast<double>(K.r1_ == 2 ? std::sqrt(absd) / 2 : 2 / pi * std::sqrt(absd));
  else
    K.minkowski_ = static_cast<double>(3 / (2 * pi * pi) * std::sqrt(absd));
  K.sqrt_delta_ = std::sqrt(F.embed(K.delta_));
  return K;
}

std::string RelQuadField::label() const {
  return std::string(F_->name()) + "(sqrt(" + scholz::to_string(mu_) + "))";
}

KElement RelQuadField::sqrt_delta() const { return {-t_, ri(2)}; }

KElement RelQuadField::mul(const KElement& a, const KElement& b) const {
  const auto& F = *F_;
  RingElement yy = F.mul(a.y, b.y);
  return {F.mul(a.x, b.x) - F.mul(n_, yy), F.mul(a.x, b.y) + F.mul(a.y, b.x) + F.mul(t_, yy)};
}

KElement RelQuadField::scale(const RingElement& c, const KElement& a) const {
  return {F_->mul(c, a.x), F_->mul(c, a.y)};
}

KElement RelQuadField::pow(KElement a, unsigned long e) const {
  KElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

KElement RelQuadField::conj(const KElement& a) const { return {a.x + F_->mul(a.y, t_), -a.y}; }

RingElement RelQuadField::rel_norm(const KElement& a) const {
  const auto& F = *F_;
  return F.mul(a.x, a.x) + F.mul(t_, F.mul(a.x, a.y)) + F.mul(n_, F.mul(a.y, a.y));
}

RingElement RelQuadField::rel_trace(const KElement& a) const { return Integer(2) * a.x + F_->mul(t_, a.y); }

std::optional<KElement> RelQuadField::exact_div(const KElement& a, const RingElement& b) const {
  auto x = F_->exact_div(a.x, b);
  if (!x) return std::nullopt;
  auto y = F_->exact_div(a.y, b);
  if (!y) return std::nullopt;
  return KElement{*x, *y};
}

std::optional<KElement> RelQuadField::exact_div(const KElement& a, const KElement& b) const {
  if (b.x.is_zero() && b.y.is_zero()) raise(errc::division_by_zero, "division by zero in K");
  return exact_div(mul(a, conj(b)), rel_norm(b));
}

KElement RelQuadField::unit_inverse(const KElement& u) const {
  auto r = exact_div(one(), u);
  if (!r) raise(errc::internal, "unit_inverse: not a unit");
  return *r;
}

std::array<std::complex<long double>, 2> RelQuadField::embed(const KElement& a) const {
  const auto& F = *F_;
  std::complex<long double> t = F.embed(t_);
  std::complex<long double> r1 = (t + sqrt_delta_) / 2.0L, r2 = (t - sqrt_delta_) / 2.0L;
  auto x = F.embed(a.x), y = F.embed(a.y);
  return {x + y * r1, x + y * r2};
}

long double RelQuadField::log_ratio(const KElement& a) const {
  const auto& F = *F_;
  std::complex<long double> t = F.embed(t_);
  std::complex<long double> r[2] = {(t + sqrt_delta_) / 2.0L, (t - sqrt_delta_) / 2.0L};
  // sigma_k(a) = x + y r_k with a common scale
  std::size_t bits = 0;
  for (const Integer* v : {&a.x.x, &a.x.y, &a.y.x, &a.y.y}) bits = std::max(bits, mpz_sizeinbase(v->get_mpz_t(), 2));
  long shift = bits > 900 ? static_cast<long>(bits) - 900 : 0;
  auto conv = [&](const Integer& v) {
    long e;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(m), static_cast<int>(e - shift));
  };
  std::complex<long double> w = F.rational() ? std::complex<long double>(0, 0) : F.generator_value();
  auto x = std::complex<long double>(conv(a.x.x), 0) + conv(a.x.y) * w;
  auto y = std::complex<long double>(conv(a.y.x), 0) + conv(a.y.y) * w;
  long double s1 = std::log(std::abs(x + y * r[0])), s2 = std::log(std::abs(x + y * r[1]));
  const long double sh = static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
  s1 += sh;
  s2 += sh;
  long double ln = log_abs(embed_scaled(F, rel_norm(a)));
  return s1 >= s2 ? 2 * s1 - ln : ln - 2 * s2;
}

SplitKind RelQuadField::split_kind(const PrimePlace& p) const {
  auto R = p.residue_field(*F_);
  auto roots = R.quadratic_roots(p.reduce(*F_, t_), p.reduce(*F_, n_));
  if (roots.empty()) return SplitKind::inert;
  if (roots.size() == 1) return SplitKind::ramified;
  return SplitKind::split;
}

std::vector<KPlace> RelQuadField::places_over(const PrimePlace& p) const {
  auto R = p.residue_field(*F_);
  auto roots = R.quadratic_roots(p.reduce(*F_, t_), p.reduce(*F_, n_));
  std::vector<KPlace> out;
  Integer Np = p.norm();
  if (roots.empty()) {
    out.push_back({p, SplitKind::inert, Fq{}, Np * Np, 0});
  } else if (roots.size() == 1) {
    out.push_back({p, SplitKind::ramified, roots[0], Np, 0});
  } else {
    out.push_back({p, SplitKind::split, roots[0], Np, 0});
    out.push_back({p, SplitKind::split, roots[1], Np, 1});
  }
  return out;
}

std::string RelQuadField::to_string(const KElement& a) const {
  return "[" + scholz::to_string(a.x) + ", " + scholz::to_string(a.y) + "]";
}

unsigned KPlace::valuation(const RelQuadField& K, const KElement& a) const {
  const auto& F = K.base();
  if (a.x.is_zero() && a.y.is_zero()) raise(errc::division_by_zero, "valuation of zero");
  unsigned k = 0;
  KElement b = a;
  while (below.divides(F, b.x) && below.divides(F, b.y)) {
    b = *K.exact_div(b, below.generator);
    ++k;
  }
  unsigned base = kind == SplitKind::ramified ? 2 * k : k;
  if (kind == SplitKind::inert) return base;
  auto R = below.residue_field(F);
  if (!R.is_zero(reduce(K, b))) return base;
  return base + below.valuation(F, K.rel_norm(b));
}

Fq KPlace::reduce(const RelQuadField& K, const KElement& a) const {
  const auto& F = K.base();
  auto R = below.residue_field(F);
  return R.add(below.reduce(F, a.x), R.mul(below.reduce(F, a.y), theta_root));
}

Sign KPlace::symbol(const RelQuadField& K, const KElement& a) const {
  const auto& F = K.base();
  if (below.p == 2) raise(errc::even_place, "residue symbol at a place above 2");
  int l;
  if (kind == SplitKind::inert) {
    if (below.degree != 1) raise(errc::unsupported, "residue symbol at an inert place of degree four");
    auto R = ResidueField::quadratic(below.p, below.reduce(F, K.t()).a, below.reduce(F, K.n()).a);
    l = R.legendre(R.make(below.reduce(F, a.x).a, below.reduce(F, a.y).a));
  } else {
    auto R = below.residue_field(F);
    l = R.legendre(reduce(K, a));
  }
  if (l == 0) raise(errc::shared_factor, "element divisible by the place");
  return sign_of(l);
}

KPlace conjugate_place(const RelQuadField& K, const KPlace& P) {
  if (P.kind != SplitKind::split) return P;
  auto ps = K.places_over(P.below);
  return ps[1 - P.index];
}

KSplitting split_prime(const RelQuadField& K, const PrimePlace& p) {
  KSplitting s;
  s.places = K.places_over(p);
  s.kind = s.places[0].kind;
  for (const auto& P : s.places) s.ideals.push_back(OIdeal::from_place(K, P));
  return s;
}

namespace {

// Canonical representative of b modulo the ideal (a) of the ground ring.
RingElement reduce_mod(const GroundField& F, const RingElement& b, const RingElement& a) {
  if (F.rational()) {
    Integer m = abs(a.x);
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), b.x.get_mpz_t(), m.get_mpz_t());
    return RingElement(r);
  }
  // Z-basis of a*O_F in (x, y) coordinates, brought to {(e,0), (f,g)}
  RingElement u1 = a, u2 = F.mul(a, RingElement(Integer(0), Integer(1)));
  while (u2.y != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), u1.y.get_mpz_t(), u2.y.get_mpz_t());
    u1 = u1 - q * u2;
    std::swap(u1, u2);
  }
  Integer e = abs(u2.x);
  if (u1.y < 0) u1 = -u1;
  Integer g = u1.y;
  RingElement r = b;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), r.y.get_mpz_t(), g.get_mpz_t());
  r = r - k * u1;
  mpz_fdiv_r(r.x.get_mpz_t(), r.x.get_mpz_t(), e.get_mpz_t());
  return r;
}

OIdeal hermite(const RelQuadField& K, std::vector<KElement> rows) {
  const auto& F = K.base();
  auto nrm = [&](const RingElement& v) -> Integer { return abs(F.norm(v)); };
  // Euclid on the theta-coordinate
  while (true) {
    std::size_t piv = rows.size();
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].y.is_zero()) continue;
      ++nonzero;
      if (piv == rows.size() || nrm(rows[i].y) < nrm(rows[piv].y)) piv = i;
    }
    if (nonzero <= 1) break;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == piv || rows[i].y.is_zero()) continue;
      auto q = F.divmod(rows[i].y, rows[piv].y).quotient;
      rows[i] = K.sub(rows[i], K.scale(q, rows[piv]));
    }
  }
  OIdeal I;
  RingElement a;
  for (const auto& r : rows) {
    if (r.y.is_zero()) {
      a = F.gcd(a, r.x);
    } else {
      I.b = r.x;
      I.c = r.y;
    }
  }
  if (I.c.is_zero() || a.is_zero()) raise(errc::internal, "ideal of rank below two");
  I.a = F.canonical_associate(a);
  RingElement cc = F.canonical_associate(I.c);
  for (const auto& u : F.units()) {
    if (F.mul(u, I.c) == cc) {
      I.b = F.mul(u, I.b);
      break;
    }
  }
  I.c = cc;
  I.b = reduce_mod(F, I.b, I.a);
  return I;
}

}  // namespace

OIdeal OIdeal::generated(const RelQuadField& K, const std::vector<KElement>& gens) {
  std::vector<KElement> rows;
  for (const auto& g : gens) {
    rows.push_back(g);
    rows.push_back(K.mul(g, K.theta()));
  }
  return hermite(K, rows);
}

OIdeal OIdeal::principal(const RelQuadField& K, const KElement& g) { return generated(K, {g}); }

OIdeal OIdeal::from_place(const RelQuadField& K, const KPlace& P) {
  if (P.kind == SplitKind::inert) return generated(K, {K.from_base(P.below.generator)});
  KElement g{-P.below.lift(P.theta_root), RingElement(Integer(1))};
  return generated(K, {K.from_base(P.below.generator), g});
}

std::vector<KElement> OIdeal::generators() const { return {{a, RingElement()}, {b, c}}; }

Integer OIdeal::norm(const RelQuadField& K) const { return abs(K.base().norm(K.base().mul(a, c))); }

bool OIdeal::contains(const RelQuadField& K, const KElement& v) const {
  const auto& F = K.base();
  auto lam = F.exact_div(v.y, c);
  if (!lam) return false;
  return F.divides(a, v.x - F.mul(*lam, b));
}

OIdeal OIdeal::multiply(const RelQuadField& K, const OIdeal& other) const {
  std::vector<KElement> gens;
  for (const auto& g : generators())
    for (const auto& h : other.generators()) gens.push_back(K.mul(g, h));
  return generated(K, gens);
}

OIdeal galois_action(const RelQuadField& K, const OIdeal& I) {
  std::vector<KElement> gens;
  for (const auto& g : I.generators()) gens.push_back(K.conj(g));
  return OIdeal::generated(K, gens);
}

std::optional<KElement> sqrt_in(const RelQuadField& K, const KElement& a) {
  const auto& F = K.base();
  if (a.x.is_zero() && a.y.is_zero()) return a;
  if (a.y.is_zero()) {
    if (auto r = F.sqrt(a.x)) return K.from_base(*r);
    auto s = F.sqrt(F.mul(a.x, K.relative_discriminant()));
    if (!s) return std::nullopt;
    auto b = K.exact_div(K.scale(*s, K.sqrt_delta()), K.relative_discriminant());
    if (b && K.mul(*b, *b) == a) return b;
    return std::nullopt;
  }
  auto r = F.sqrt(K.rel_norm(a));
  if (!r) return std::nullopt;
  for (const RingElement& m : {*r, -*r}) {
    auto T = F.sqrt(K.rel_trace(a) + Integer(2) * m);
    if (!T || T->is_zero()) continue;
    auto b = K.exact_div(K.add(a, K.from_base(m)), *T);
    if (b && K.mul(*b, *b) == a) return b;
  }
  return std::nullopt;
}

std::optional<KPlace> nonresidue_witness(const RelQuadField& K, const KElement& a, int tries) {
  const auto& F = K.base();
  int seen = 0;
  for (u64 p = 3; seen < tries && p < 1000000; p += 2) {
    if (!is_prime(p)) continue;
    for (const auto& P : factor_rational_prime(p, F).places) {
      if (P.degree != 1) continue;
      for (const auto& Q : K.places_over(P)) {
        if (Q.kind == SplitKind::ramified) continue;
        Fq v;
        int l;
        if (Q.kind == SplitKind::inert) {
          auto R = ResidueField::quadratic(p, P.reduce(F, K.t()).a, P.reduce(F, K.n()).a);
          l = R.legendre(R.make(P.reduce(F, a.x).a, P.reduce(F, a.y).a));
        } else {
          v = Q.reduce(K, a);
          l = P.residue_field(F).legendre(v);
        }
        if (l == 0) continue;
        ++seen;
        if (l < 0) return Q;
      }
    }
  }
  return std::nullopt;
}

bool is_square(const RelQuadField& K, const KElement& a) {
  if (sqrt_in(K, a)) return true;
  if (!nonresidue_witness(K, a, 40)) raise(errc::internal, "square test: exact and local answers disagree");
  return false;
}

std::vector<KPlace> kplaces_up_to(const RelQuadField& K, u64 bound) {
  std::vector<KPlace> out;
  for (const auto& P : places_up_to(K.base(), bound))
    for (const auto& Q : K.places_over(P))
      if (Q.norm <= bound) out.push_back(Q);
  std::stable_sort(out.begin(), out.end(), [](const KPlace& x, const KPlace& y) {
    if (x.norm != y.norm) return x.norm < y.norm;
    if (x.below.p != y.below.p) return x.below.p < y.below.p;
    if (x.below.root != y.below.root) return x.below.root < y.below.root;
    return x.index < y.index;
  });
  return out;
}

}  // namespace scholz
