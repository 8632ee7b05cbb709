#include "scholz/sweep.hpp"

#include "scholz/error.hpp"

namespace scholz {

namespace {

RingElement preferred_generator(const GroundField& F, const RingElement& pi, bool canonical_conjugate) {
  try {
    return canonical_conjugate ? primary_associate(F, pi) : primary_generator(F, pi);
  } catch (const error&) {
    return F.canonical_associate(pi);
  }
}

}  // namespace

std::vector<RingElement> degree_one_primes(const GroundField& F, u64 bound) {
  std::vector<RingElement> out;
  for (const auto& P : places_up_to(F, bound)) {
    if (P.degree != 1 || P.p == 2) continue;
    out.push_back(F.rational() ? RingElement(Integer(static_cast<unsigned long>(P.p)))
                               : preferred_generator(F, P.generator, false));
  }
  return out;
}

std::vector<PrimePair> prime_pairs(const GroundField& F, u64 bound) {
  struct Entry {
    u64 p;
    std::vector<RingElement> gens;
  };
  std::vector<Entry> by_norm;
  for (const auto& P : places_up_to(F, bound)) {
    if (P.degree != 1 || P.p == 2) continue;
    RingElement g = F.rational() ? RingElement(Integer(static_cast<unsigned long>(P.p)))
                                 : preferred_generator(F, P.generator, false);
    if (by_norm.empty() || by_norm.back().p != P.p) by_norm.push_back({P.p, {}});
    by_norm.back().gens.push_back(g);
  }
  std::vector<PrimePair> out;
  for (std::size_t i = 0; i < by_norm.size(); ++i) {
    const auto& a = by_norm[i];
    RingElement pi1 = F.rational() ? a.gens.front() : preferred_generator(F, a.gens.front(), true);
    for (std::size_t j = i + 1; j < by_norm.size(); ++j)
      for (const auto& pi2 : by_norm[j].gens) out.push_back({pi1, pi2, a.p, by_norm[j].p});
  }
  return out;
}

}  // namespace scholz
