#include "scholz/primary.hpp"

#include <algorithm>

#include "scholz/error.hpp"

namespace scholz {

bool is_two_primary(const GroundField& F, const RingElement& a) { return F.is_two_primary(a); }
bool is_primary(const GroundField& F, const RingElement& a) { return F.is_primary(a); }

bool is_two_primary(const RelQuadField& K, const KElement& a) {
  const auto& F = K.base();
  if (mpz_even_p(Integer(K.abs_norm(a)).get_mpz_t())) raise(errc::even_element, "element of even norm");
  const long ymax = F.rational() ? 0 : 3;
  std::vector<RingElement> reps;
  for (long x = 0; x < 4; ++x)
    for (long y = 0; y <= ymax; ++y) reps.push_back(RingElement{Integer(x), Integer(y)});
  for (const auto& u : reps)
    for (const auto& v : reps) {
      KElement xi{u, v};
      KElement d = K.sub(K.mul(xi, xi), a);
      if (F.congruent(d.x, RingElement(), 4) && F.congruent(d.y, RingElement(), 4)) return true;
    }
  return false;
}

bool is_primary(const RelQuadField& K, const KElement& a) {
  if (!is_two_primary(K, a)) return false;
  if (K.r1() == 0) return true;
  for (const auto& z : K.embed(a))
    if (z.real() <= 0) return false;
  return true;
}

SupplementaryReport supplementary_check(const GroundField& F, std::span<const PrimePlace> ideal, bool strict) {
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal[i].p == 2) raise(errc::even_place, "ideal is not odd");
    for (std::size_t j = 0; j < i; ++j)
      if (ideal[i] == ideal[j]) raise(errc::not_squarefree, "ideal is not squarefree");
  }
  SupplementaryReport r;
  r.strict = strict;
  r.generator = RingElement(Integer(1));
  for (const auto& P : ideal) r.generator = F.mul(r.generator, P.generator);

  // Strict sense over Q: the totally positive units are {1}, so the symbol condition is vacuous.
  bool vacuous = strict && F.rational();
  r.unit_symbol = vacuous ? Sign::plus : quad_symbol(F, F.torsion_generator(), ideal);

  const auto& units = F.units();
  for (std::size_t k = 0; k < units.size(); ++k) {
    RingElement c = F.mul(units[k], r.generator);
    bool ok = strict ? F.is_two_primary(c) : F.is_primary(c);
    if (ok) r.primary_units.push_back(static_cast<int>(k));
  }
  r.equivalence = (r.unit_symbol == Sign::plus) == !r.primary_units.empty();
  // E_F is cyclic of even order w, so the squares are the even powers of zeta.
  r.uniqueness = true;
  if (!r.primary_units.empty()) {
    int parity = r.primary_units[0] % 2;
    std::size_t expect = units.size() / 2;
    r.uniqueness = r.primary_units.size() == expect &&
                   std::all_of(r.primary_units.begin(), r.primary_units.end(), [&](int k) { return k % 2 == parity; });
  }
  return r;
}

}  // namespace scholz
