#include "scholz/symbols.hpp"

#include "scholz/error.hpp"

namespace scholz {

int jacobi_value(u64 a, u64 n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      u64 r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

Sign jacobi(i64 a, u64 n) {
  if (n == 0 || (n & 1) == 0) raise(errc::bad_modulus, "Jacobi symbol needs an odd positive modulus");
  int v = jacobi_value(mod_u64(a, n), n);
  if (v == 0) raise(errc::shared_factor, "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") > 1");
  return sign_of(v);
}

Sign jacobi(const Integer& a, const Integer& n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t())) raise(errc::bad_modulus, "Jacobi symbol needs an odd positive modulus");
  if (n.fits_ulong_p()) {
    u64 nn = n.get_ui();
    int v = jacobi_value(mod_u64(a, nn), nn);
    if (v == 0) raise(errc::shared_factor, "gcd(" + a.get_str() + ", " + n.get_str() + ") > 1");
    return sign_of(v);
  }
  Integer x, m = n;
  mpz_fdiv_r(x.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  int t = 1;
  while (x != 0) {
    while (mpz_even_p(x.get_mpz_t())) {
      x >>= 1;
      unsigned long r = mpz_fdiv_ui(m.get_mpz_t(), 8);
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(x, m);
    if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(m.get_mpz_t(), 4) == 3) t = -t;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  if (m != 1) raise(errc::shared_factor, "gcd(" + a.get_str() + ", " + n.get_str() + ") > 1");
  return sign_of(t);
}

Sign quad_symbol(const GroundField& F, const RingElement& a, const PrimePlace& p) {
  if (p.p == 2) raise(errc::even_place, "residue symbol at a place above 2");
  Fq image = p.reduce(F, a);
  if (image.a == 0 && image.b == 0) raise(errc::shared_factor, "place above " + std::to_string(p.p) + " divides " + to_string(a));
  if (p.degree == 1) return sign_of(jacobi_value(image.a, p.p));
  return sign_of(p.residue_field(F).legendre(image));
}

Sign quad_symbol(const GroundField& F, const RingElement& a, std::span<const PrimePlace> ideal) {
  Sign s = Sign::plus;
  for (const auto& p : ideal) s = s * quad_symbol(F, a, p);
  return s;
}

namespace {

void check_quartic_modulus(u64 q) {
  if (q % 4 != 1 || !is_prime(q)) raise(errc::bad_modulus, "quartic symbol needs a prime q = 1 mod 4, got " + std::to_string(q));
}

}  // namespace

std::pair<Sign, Sign> quartic_rational_both_roots(const Integer& a, u64 q) {
  check_quartic_modulus(q);
  u64 am = mod_u64(a, q);
  if (am == 0) raise(errc::shared_factor, "q divides a");
  auto r = try_sqrt_mod(am, q);
  if (!r) raise(errc::not_a_residue, a.get_str() + " is not a square mod " + std::to_string(q));
  return {sign_of(jacobi_value(*r, q)), sign_of(jacobi_value(q - *r, q))};
}

Sign quartic_rational(const Integer& a, u64 q) { return quartic_rational_both_roots(a, q).first; }

std::pair<Sign, Sign> quartic_primary_both_roots(const GroundField& F, const RingElement& pi1, const RingElement& pi2) {
  if (!F.is_primary(pi1) || !F.is_primary(pi2)) raise(errc::not_primary, "quartic symbol needs primary arguments");
  if (F.rational()) {
    if (!pi2.x.fits_ulong_p()) raise(errc::unsupported, "modulus exceeds 64 bits");
    return quartic_rational_both_roots(pi1.x, pi2.x.get_ui());
  }
  PrimePlace place = place_of(F, pi2);
  ResidueField k = place.residue_field(F);
  Fq image = place.reduce(F, pi1);
  if (k.is_zero(image)) raise(errc::shared_factor, "pi2 divides pi1");
  auto r = k.sqrt(image);
  if (!r) raise(errc::not_a_residue, to_string(pi1) + " is not a square modulo " + to_string(pi2));
  return {sign_of(k.legendre(*r)), sign_of(k.legendre(k.neg(*r)))};
}

Sign quartic_primary(const GroundField& F, const RingElement& pi1, const RingElement& pi2) {
  return quartic_primary_both_roots(F, pi1, pi2).first;
}

UnitGroupDescription unit_group(const GroundField& F) {
  return {F.id(), F.torsion_generator(), std::nullopt};
}

Sign unit_group_symbol(const GroundField& F, const UnitGroupDescription& E, std::span<const PrimePlace> ideal) {
  if (quad_symbol(F, E.torsion_generator, ideal) == Sign::minus) return Sign::minus;
  if (E.infinite_generator && quad_symbol(F, *E.infinite_generator, ideal) == Sign::minus) return Sign::minus;
  return Sign::plus;
}

}  // namespace scholz
