#include "scholz/ground_field.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "scholz/error.hpp"

namespace scholz {

RingElement widen(const SmallElement& a) {
  return {Integer(static_cast<long>(a.x)), Integer(static_cast<long>(a.y))};
}

std::optional<SmallElement> narrow(const RingElement& a) {
  if (!a.x.fits_slong_p() || !a.y.fits_slong_p()) return std::nullopt;
  return SmallElement{a.x.get_si(), a.y.get_si()};
}

std::string to_string(const RingElement& a) {
  if (a.y == 0) return a.x.get_str();
  return "(" + a.x.get_str() + "," + a.y.get_str() + ")";
}

std::string_view to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::split: return "split";
    case SplitKind::inert: return "inert";
    case SplitKind::ramified: return "ramified";
  }
  return "?";
}

namespace {

bool lex_greater(const RingElement& a, const RingElement& b) {
  if (a.x != b.x) return a.x > b.x;
  return a.y > b.y;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divisible(const Integer& a, const Integer& m) {
  return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t()) != 0;
}

}  // namespace

GroundField::GroundField(FieldId id, std::string_view name, int trace, int norm, int disc, int w)
    : id_(id), name_(name), trace_(trace), norm_(norm), disc_(disc), w_(w) {
  RingElement zeta = torsion_generator();
  RingElement u{1};
  for (int k = 0; k < w_; ++k) {
    units_.push_back(u);
    u = mul(u, zeta);
  }
  if (!(u == RingElement{1})) raise(errc::internal, "torsion generator has wrong order");
}

const GroundField& GroundField::get(FieldId id) {
  static const std::array<GroundField, 6> fields = {
      GroundField(FieldId::Q, "Q", 0, 0, 1, 2),
      GroundField(FieldId::Qi, "Qi", 0, 1, -4, 4),
      GroundField(FieldId::Qsqrt_2, "Qsqrt-2", 0, 2, -8, 2),
      GroundField(FieldId::Qsqrt_3, "Qsqrt-3", 1, 1, -3, 6),
      GroundField(FieldId::Qsqrt_7, "Qsqrt-7", 1, 2, -7, 2),
      GroundField(FieldId::Qsqrt_11, "Qsqrt-11", 1, 3, -11, 2),
  };
  return fields[static_cast<std::size_t>(id)];
}

const std::vector<FieldId>& GroundField::all() {
  static const std::vector<FieldId> ids = {FieldId::Q,       FieldId::Qi,      FieldId::Qsqrt_2,
                                           FieldId::Qsqrt_3, FieldId::Qsqrt_7, FieldId::Qsqrt_11};
  return ids;
}

const GroundField& GroundField::parse(std::string_view name) {
  for (FieldId id : all()) {
    if (get(id).name() == name) return get(id);
  }
  raise(errc::unsupported, "unknown ground field '" + std::string(name) + "'");
}

RingElement GroundField::torsion_generator() const {
  switch (id_) {
    case FieldId::Qi: return {0, 1};
    case FieldId::Qsqrt_3: return {0, 1};  // (1 + sqrt(-3))/2, a primitive sixth root of unity
    default: return {-1, 0};
  }
}

int GroundField::unit_index(const RingElement& u) const {
  for (std::size_t k = 0; k < units_.size(); ++k) {
    if (units_[k] == u) return static_cast<int>(k);
  }
  return -1;
}

RingElement GroundField::pow(RingElement a, unsigned long e) const {
  RingElement r{1};
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

GroundField::DivMod GroundField::divmod(const RingElement& a, const RingElement& b) const {
  if (b.is_zero()) raise(errc::division_by_zero, "Euclidean division by zero");
  if (rational()) {
    Integer q0 = fdiv(a.x, b.x);
    DivMod best{{q0}, {a.x - q0 * b.x}};
    for (int d : {1, -1}) {
      Integer q = q0 + d;
      Integer r = a.x - q * b.x;
      if (abs(r) < abs(best.remainder.x)) best = {{q}, {r}};
    }
    return best;
  }
  RingElement num = mul(a, conj(b));
  Integer n = norm(b);
  Integer qx0 = fdiv(num.x, n);
  Integer qy0 = fdiv(num.y, n);
  std::optional<DivMod> best;
  Integer best_norm;
  for (int dx = -1; dx <= 2; ++dx) {
    for (int dy = -1; dy <= 2; ++dy) {
      RingElement q{qx0 + dx, qy0 + dy};
      RingElement r = a - mul(q, b);
      Integer rn = norm(r);
      if (!best || rn < best_norm) {
        best = DivMod{q, r};
        best_norm = rn;
      }
    }
  }
  if (best_norm >= n) raise(errc::internal, "norm-Euclidean step failed");
  return *best;
}

std::optional<RingElement> GroundField::exact_div(const RingElement& a, const RingElement& b) const {
  if (b.is_zero()) raise(errc::division_by_zero, "exact division by zero");
  if (rational()) {
    if (!divisible(a.x, b.x)) return std::nullopt;
    return RingElement{Integer(a.x / b.x)};
  }
  RingElement num = mul(a, conj(b));
  Integer n = norm(b);
  if (!divisible(num.x, n) || !divisible(num.y, n)) return std::nullopt;
  return RingElement{Integer(num.x / n), Integer(num.y / n)};
}

RingElement GroundField::canonical_associate(const RingElement& a) const {
  RingElement best = a;
  for (const auto& u : units_) {
    RingElement c = mul(u, a);
    if (lex_greater(c, best)) best = c;
  }
  return best;
}

bool GroundField::associated(const RingElement& a, const RingElement& b) const {
  return canonical_associate(a) == canonical_associate(b);
}

RingElement GroundField::gcd(RingElement a, RingElement b) const {
  while (!b.is_zero()) {
    RingElement r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return canonical_associate(a);
}

std::optional<RingElement> GroundField::sqrt(const RingElement& a) const {
  if (a.is_zero()) return a;
  if (rational()) {
    auto r = exact_sqrt(a.x);
    if (!r) return std::nullopt;
    return RingElement{*r};
  }
  auto s = exact_sqrt(norm(a));
  if (!s) return std::nullopt;
  Integer t2 = trace(a) + 2 * *s;
  if (t2 < 0) return std::nullopt;
  auto tau = exact_sqrt(t2);
  if (!tau) return std::nullopt;
  RingElement beta;
  if (*tau != 0) {
    RingElement num{a.x + *s, a.y};
    if (!divisible(num.x, *tau) || !divisible(num.y, *tau)) return std::nullopt;
    beta = {Integer(num.x / *tau), Integer(num.y / *tau)};
  } else {
    // trace-free root: beta = (k/2) * (2w - T), beta^2 = k^2 d_F / 4
    if (a.y != 0) return std::nullopt;
    Integer four_x = 4 * a.x;
    if (!divisible(four_x, Integer(disc_))) return std::nullopt;
    auto k = exact_sqrt(Integer(four_x / disc_));
    if (!k) return std::nullopt;
    Integer kt = *k * trace_;
    if (!divisible(kt, 2)) return std::nullopt;
    beta = {Integer(-kt / 2), *k};
  }
  if (!(mul(beta, beta) == a)) return std::nullopt;
  return beta;
}

bool GroundField::congruent(const RingElement& a, const RingElement& b, const Integer& m) const {
  RingElement d = a - b;
  return divisible(d.x, m) && divisible(d.y, m);
}

std::complex<long double> GroundField::generator_value() const {
  if (rational()) return {0.0L, 0.0L};
  return {static_cast<long double>(trace_) / 2.0L, std::sqrt(static_cast<long double>(-disc_)) / 2.0L};
}

std::complex<long double> GroundField::embed(const RingElement& a) const {
  long double x = static_cast<long double>(a.x.get_d());
  long double y = static_cast<long double>(a.y.get_d());
  return std::complex<long double>(x, 0.0L) + y * generator_value();
}

bool GroundField::is_two_primary(const RingElement& a) const {
  if (divisible(norm(a), 2)) raise(errc::even_element, "element " + to_string(a) + " has even norm");
  const Integer four = 4;
  int ymax = rational() ? 0 : 3;
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v <= ymax; ++v) {
      RingElement xi{u, v};
      if (congruent(a, mul(xi, xi), four)) return true;
    }
  }
  return false;
}

bool GroundField::is_primary(const RingElement& a) const {
  if (!is_two_primary(a)) return false;
  return !rational() || a.x > 0;
}

std::vector<RingElement> GroundField::elements_in_box(i64 bound) const {
  std::vector<RingElement> out;
  i64 ymax = rational() ? 0 : bound;
  for (i64 x = -bound; x <= bound; ++x)
    for (i64 y = -ymax; y <= ymax; ++y) out.push_back({Integer(static_cast<long>(x)), Integer(static_cast<long>(y))});
  return out;
}

// ---------------------------------------------------------------------------
// prime places

ResidueField PrimePlace::residue_field(const GroundField& F) const {
  if (degree == 1) return ResidueField::prime(p);
  return ResidueField::quadratic(p, mod_u64(static_cast<i64>(F.gen_trace()), p), mod_u64(static_cast<i64>(F.gen_norm()), p));
}

Fq PrimePlace::reduce(const GroundField&, const RingElement& a) const {
  u64 x = mod_u64(a.x, p);
  u64 y = mod_u64(a.y, p);
  if (degree == 1) return {(x + mulmod(y, root, p)) % p, 0};
  return {x, y};
}

Fq PrimePlace::reduce(const GroundField&, const SmallElement& a) const {
  u64 x = mod_u64(a.x, p);
  u64 y = mod_u64(a.y, p);
  if (degree == 1) return {(x + mulmod(y, root, p)) % p, 0};
  return {x, y};
}

bool PrimePlace::divides(const GroundField& F, const RingElement& a) const {
  Fq r = reduce(F, a);
  return r.a == 0 && r.b == 0;
}

unsigned PrimePlace::valuation(const GroundField& F, RingElement a) const {
  if (a.is_zero()) raise(errc::division_by_zero, "valuation of zero");
  unsigned v = 0;
  while (divides(F, a)) {
    auto q = F.exact_div(a, generator);
    if (!q) raise(errc::internal, "place generator does not divide an element of its ideal");
    a = std::move(*q);
    ++v;
  }
  return v;
}

Splitting factor_rational_prime(u64 p, const GroundField& F) {
  if (!is_prime(p)) raise(errc::not_prime, std::to_string(p) + " is not prime");
  Integer P(static_cast<unsigned long>(p));
  if (F.rational()) {
    return {SplitKind::inert, {PrimePlace{RingElement{P}, p, 1, false, 0}}};
  }
  ResidueField fp = ResidueField::prime(p);
  Fq t = fp.from_signed(F.gen_trace());
  Fq n = fp.from_signed(F.gen_norm());
  auto roots = fp.quadratic_roots(t, n);
  if (roots.empty()) {
    return {SplitKind::inert, {PrimePlace{RingElement{P}, p, 2, false, 0}}};
  }
  bool ramified = (F.discriminant() % static_cast<long>(p)) == 0;
  Splitting out{ramified ? SplitKind::ramified : SplitKind::split, {}};
  for (const Fq& r : roots) {
    RingElement w_minus_t{Integer(-static_cast<long>(r.a)), Integer(1)};
    RingElement g = F.gcd(RingElement{P}, w_minus_t);
    if (F.norm(g) != P) raise(errc::internal, "prime generator has wrong norm");
    out.places.push_back(PrimePlace{g, p, 1, ramified, r.a});
    if (ramified) break;
  }
  return out;
}

PrimePlace place_of(const GroundField& F, const RingElement& pi) {
  Integer n = abs(F.norm(pi));
  if (F.rational()) {
    if (pi.y != 0 || !is_prime(n)) raise(errc::not_prime, to_string(pi) + " is not prime");
    return PrimePlace{RingElement{n}, static_cast<u64>(n.get_ui()), 1, false, 0};
  }
  if (is_prime(n)) {
    auto s = factor_rational_prime(static_cast<u64>(n.get_ui()), F);
    for (const auto& place : s.places) {
      if (place.divides(F, pi)) return place;
    }
    raise(errc::internal, "no place above " + n.get_str() + " contains " + to_string(pi));
  }
  auto r = exact_sqrt(n);
  if (r && is_prime(*r)) {
    auto s = factor_rational_prime(static_cast<u64>(r->get_ui()), F);
    if (s.kind == SplitKind::inert && F.associated(pi, s.places[0].generator)) return s.places[0];
  }
  raise(errc::not_prime, to_string(pi) + " does not generate a prime ideal");
}

std::vector<PrimePlace> places_up_to(const GroundField& F, u64 bound) {
  std::vector<PrimePlace> out;
  for (u64 p : primes_up_to(bound)) {
    auto s = factor_rational_prime(p, F);
    for (auto& place : s.places) {
      if (place.norm() <= Integer(static_cast<unsigned long>(bound))) out.push_back(place);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const PrimePlace& a, const PrimePlace& b) {
    if (a.norm() != b.norm()) return a.norm() < b.norm();
    return a.root < b.root;
  });
  return out;
}

namespace {

bool meets_normalisation(const GroundField& F, const RingElement& c) {
  if (!F.is_primary(c)) return false;
  if (F.id() == FieldId::Qi) return F.congruent(c, RingElement{1}, 4);
  return true;
}

}  // namespace

RingElement primary_generator(const GroundField& F, const RingElement& pi) {
  if (pi.is_zero()) raise(errc::no_primary_associate, "zero has no primary associate");
  std::optional<RingElement> best;
  for (const auto& u : F.units()) {
    RingElement c = F.mul(u, pi);
    if (!meets_normalisation(F, c)) continue;
    if (!best || lex_greater(c, *best)) best = c;
  }
  if (!best) raise(errc::no_primary_associate, to_string(pi) + " has no primary associate in " + std::string(F.name()));
  return *best;
}

RingElement primary_associate(const GroundField& F, const RingElement& pi) {
  bool d1 = F.id() == FieldId::Qi || F.id() == FieldId::Qsqrt_2;
  if (!d1) return primary_generator(F, pi);
  std::optional<RingElement> best;
  auto better = [](const RingElement& c, const RingElement& b) {
    bool cp = c.y > 0, bp = b.y > 0;
    if (cp != bp) return cp;
    return lex_greater(c, b);
  };
  for (const RingElement& base : {pi, F.conj(pi)}) {
    for (const auto& u : F.units()) {
      RingElement c = F.mul(u, base);
      if (!meets_normalisation(F, c)) continue;
      if (!best || better(c, *best)) best = c;
    }
  }
  if (!best) raise(errc::no_primary_associate, to_string(pi) + " has no primary associate in " + std::string(F.name()));
  return *best;
}

}  // namespace scholz
