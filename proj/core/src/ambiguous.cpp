#include "scholz/ambiguous.hpp"

#include <deque>
#include <map>

#include "scholz/error.hpp"

namespace scholz {

std::vector<PrimePlace> ramified_places(const RelQuadField& K) {
  const auto& F = K.base();
  std::vector<PrimePlace> out;
  Integer N = abs(F.norm(K.relative_discriminant()));
  std::vector<u64> primes{2};
  for (const auto& pp : factor(N))
    if (pp.p != 2) primes.push_back(pp.p.get_ui());
  for (u64 p : primes)
    for (const auto& P : factor_rational_prime(p, F).places)
      if (K.split_kind(P) == SplitKind::ramified) out.push_back(P);
  return out;
}

bool unit_is_local_norm(const RelQuadField& K, const RingElement& u) {
  const auto& F = K.base();
  int product = 1;
  bool all_plus = true;
  int unknown = 0;
  auto record = [&](int v) {
    product *= v;
    all_plus = all_plus && v == 1;
  };
  for (const auto& P : ramified_places(K)) {
    if (P.p == 2) {
      ++unknown;
      continue;
    }
    record(to_int(quad_symbol(F, u, P)));
  }
  if (F.rational() && K.r1() == 0) record(u.x < 0 ? -1 : 1);
  // unramified dyadic places contribute +1; a single ramified one is fixed by the product formula
  if (unknown == 0 && product != 1) raise(errc::internal, "Hilbert symbols violate the product formula");
  if (!all_plus) return false;
  if (unknown > 1) raise(errc::unsupported, "Hilbert symbol at two ramified dyadic places");
  return true;
}

namespace {

using ClassVec = std::vector<Integer>;

ClassVec add(const ClassGroupResult& C, const ClassVec& a, const ClassVec& b) {
  ClassVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
    if (r[i] >= C.invariant_factors[i]) r[i] -= C.invariant_factors[i];
  }
  return r;
}

}  // namespace

long subgroup_order(const ClassGroupResult& C, const std::vector<ClassVec>& gens) {
  ClassVec zero(C.invariant_factors.size(), 0);
  std::map<ClassVec, bool> seen{{zero, true}};
  std::deque<ClassVec> q{zero};
  while (!q.empty()) {
    ClassVec g = q.front();
    q.pop_front();
    for (const auto& s : gens) {
      ClassVec n = add(C, g, s);
      if (seen.emplace(n, true).second) q.push_back(n);
    }
    if (seen.size() > 1000000) raise(errc::effort_exceeded, "class group too large to enumerate");
  }
  return static_cast<long>(seen.size());
}

long count_fixed_classes(const RelQuadField& K, const ClassGroupResult& C) {
  FactorBase fb{C.factor_base};
  const std::size_t n = fb.places.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) {
    int k = fb.find(conjugate_place(K, fb.places[j]));
    if (k < 0) raise(errc::internal, "factor base not closed under conjugation");
    perm[j] = static_cast<std::size_t>(k);
  }
  // walk the group from the place classes, carrying the Galois image along
  ClassVec zero(C.invariant_factors.size(), 0);
  std::map<ClassVec, ClassVec> image{{zero, zero}};
  std::deque<ClassVec> q{zero};
  while (!q.empty()) {
    ClassVec g = q.front();
    q.pop_front();
    ClassVec sg = image[g];
    for (std::size_t j = 0; j < n; ++j) {
      ClassVec h = add(C, g, C.place_classes[j]);
      ClassVec sh = add(C, sg, C.place_classes[perm[j]]);
      auto [it, inserted] = image.emplace(h, sh);
      if (inserted) {
        q.push_back(h);
      } else if (it->second != sh) {
        raise(errc::internal, "Galois action not well defined on the class group");
      }
    }
    if (image.size() > 1000000) raise(errc::effort_exceeded, "class group too large to enumerate");
  }
  long fixed = 0;
  for (const auto& [g, sg] : image)
    if (g == sg) ++fixed;
  return fixed;
}

AmbiguousReport ambiguous_counts(const RelQuadField& K, const ClassGroupResult& C, const UnitResult* units) {
  const auto& F = K.base();
  AmbiguousReport r;
  r.ramified = ramified_places(K);
  r.infinite_ramified = (F.rational() && K.r1() == 0) ? 1 : 0;
  r.e_product = 1L << (r.ramified.size() + r.infinite_ramified);

  // E_F is cyclic and E_F^2 consists of norms, so both indices are 1 or 2.
  r.norm_index = unit_is_local_norm(K, F.torsion_generator()) ? 1 : 2;
  std::vector<int> normed;
  if (units) {
    normed = unit_norm_indices(K, *units);
  } else {
    UnitResult tors;
    auto [z, w] = torsion_of(K);
    tors.torsion_generator = z;
    tors.torsion_order = w;
    normed = unit_norm_indices(K, tors);
  }
  r.unit_norm_index = F.torsion_order() / static_cast<long>(normed.size());
  if (r.unit_norm_index < r.norm_index) raise(errc::internal, "a norm of a unit failed the local norm test");

  r.am_formula = r.e_product / (2 * r.norm_index);
  r.am_st_formula = r.e_product / (2 * r.unit_norm_index);

  if (C.certified) {
    r.am_direct = count_fixed_classes(K, C);
    std::vector<ClassVec> gens;
    for (const auto& P : r.ramified)
      for (const auto& Q : K.places_over(P)) gens.push_back(class_of(K, C, Q));
    r.am_st_direct = subgroup_order(C, gens);
  }
  return r;
}

}  // namespace scholz
