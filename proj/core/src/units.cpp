#include "scholz/units.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "scholz/class_group.hpp"
#include "scholz/error.hpp"
#include "scholz/lattice.hpp"
#include "scholz/real_quadratic.hpp"

namespace scholz {

std::pair<KElement, int> torsion_of(const RelQuadField& K) {
  const auto& F = K.base();
  KElement z = K.from_base(F.torsion_generator());
  int w = F.torsion_order();
  while (true) {
    auto r = sqrt_in(K, z);
    if (!r) break;
    z = *r;
    w *= 2;
  }
  if (w % 3 != 0) {
    if (auto r = sqrt_in(K, K.from_base(RingElement(Integer(-3))))) {
      auto omega = K.exact_div(K.add(*r, K.from_base(RingElement(Integer(-1)))), RingElement(Integer(2)));
      if (!omega) raise(errc::internal, "cube root of unity not integral");
      z = K.mul(z, *omega);
      w *= 3;
    }
  }
  return {z, w};
}

namespace {

constexpr long double kTol = 1e-6L;

bool is_unit_norm(const GroundField& F, const RingElement& n) { return F.unit_index(n) >= 0; }

// Makes |sigma_1| > 1, then removes square factors up to roots of unity.
void finish(const RelQuadField& K, UnitResult& U, KElement eta) {
  const auto& F = K.base();
  if (K.log_ratio(eta) < 0) eta = K.unit_inverse(eta);
  std::vector<KElement> roots{K.one()};
  for (int k = 1; k < U.torsion_order; ++k) roots.push_back(K.mul(roots.back(), U.torsion_generator));
  bool certified = false;
  for (int round = 0; round < 64 && !certified; ++round) {
    certified = true;
    for (const auto& z : roots) {
      KElement c = K.mul(eta, z);
      if (auto r = sqrt_in(K, c)) {
        eta = K.log_ratio(*r) < 0 ? K.unit_inverse(*r) : *r;
        certified = false;
        break;
      }
      if (!nonresidue_witness(K, c, 40)) raise(errc::internal, "square test: exact and local answers disagree");
    }
  }
  U.eta = eta;
  U.eta_norm = K.rel_norm(eta);
  if (!is_unit_norm(F, U.eta_norm)) raise(errc::internal, "unit search produced a non-unit");
  U.odd_index_certified = certified;
  long double l = K.log_ratio(eta);
  U.regulator = F.rational() ? l / 2 : l;
}

std::optional<KElement> box_search(const RelQuadField& K, int k, i64 inner) {
  const auto& F = K.base();
  const i64 bound = i64(1) << k;
  RingElement delta = K.relative_discriminant();
  std::optional<KElement> best;
  long double best_l = 0;
  for (const auto& y : F.elements_in_box(bound)) {
    if (y.is_zero()) continue;
    if (abs(y.x) <= inner && abs(y.y) <= inner) continue;
    if (y.x < 0 || (y.x == 0 && y.y < 0)) continue;
    RingElement dy = F.mul(delta, F.mul(y, y));
    for (const auto& u : F.units()) {
      auto r = F.sqrt(dy + Integer(4) * u);
      if (!r) continue;
      for (const RingElement& s : {*r, -*r}) {
        RingElement x2 = s - F.mul(K.t(), y);
        if (!mpz_even_p(x2.x.get_mpz_t()) || !mpz_even_p(x2.y.get_mpz_t())) continue;
        KElement eta{RingElement(Integer(x2.x / 2), Integer(x2.y / 2)), y};
        if (!(K.rel_norm(eta) == u)) continue;
        long double l = std::fabs(K.log_ratio(eta));
        if (l < kTol) continue;
        if (!best || l < best_l) {
          best = eta;
          best_l = l;
        }
      }
    }
  }
  return best;
}

std::optional<KElement> kernel_unit(const RelQuadField& K, u64 bound, std::size_t extra, int effort) {
  FactorBase fb = make_factor_base(K, bound);
  auto rels = collect_relations(K, fb, fb.places.size() + extra, effort);
  if (rels.size() <= fb.places.size()) return std::nullopt;
  std::vector<std::vector<i64>> M;
  std::vector<long double> logs;
  for (const auto& r : rels) {
    M.push_back(r.exponents.empty() ? std::vector<i64>{0} : r.exponents);
    logs.push_back(r.element.y.is_zero() ? 0.0L : K.log_ratio(r.element));
  }
  auto ker = integer_kernel(M);
  struct Vec {
    long double l;
    std::vector<i64> c;
  };
  std::vector<Vec> vs;
  for (const auto& k : ker) {
    long double l = 0;
    for (std::size_t i = 0; i < k.size(); ++i) l += k[i] * logs[i];
    if (std::fabs(l) > kTol) vs.push_back({l, k});
  }
  if (vs.empty()) return std::nullopt;
  // real Euclid on the log values
  while (vs.size() > 1) {
    std::sort(vs.begin(), vs.end(), [](const Vec& a, const Vec& b) { return std::fabs(a.l) < std::fabs(b.l); });
    std::vector<Vec> next{vs[0]};
    for (std::size_t j = 1; j < vs.size(); ++j) {
      long double q = std::nearbyint(vs[j].l / vs[0].l);
      Vec r = vs[j];
      r.l -= q * vs[0].l;
      for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= static_cast<i64>(q) * vs[0].c[i];
      if (std::fabs(r.l) > kTol) next.push_back(std::move(r));
    }
    if (next.size() == vs.size()) {
      bool progress = false;
      for (std::size_t j = 1; j < next.size(); ++j) progress = progress || std::fabs(next[j].l) < std::fabs(vs[j].l);
      if (!progress) break;
    }
    vs = std::move(next);
  }
  const auto& c = vs[0].c;
  KElement P = K.one(), Q = K.one();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 0) P = K.mul(P, K.pow(rels[i].element, static_cast<unsigned long>(c[i])));
    if (c[i] < 0) Q = K.mul(Q, K.pow(rels[i].element, static_cast<unsigned long>(-c[i])));
  }
  auto eta = K.exact_div(K.mul(P, K.conj(Q)), K.rel_norm(Q));
  if (!eta || !is_unit_norm(K.base(), K.rel_norm(*eta))) return std::nullopt;
  return eta;
}

}  // namespace

UnitResult unit_search(const RelQuadField& K, const UnitOptions& opts) {
  if (K.unit_rank() != 1) raise(errc::wrong_rank, "unit search needs unit rank one, got " + std::to_string(K.unit_rank()));
  const auto& F = K.base();
  UnitResult U;
  auto [z, w] = torsion_of(K);
  U.torsion_generator = z;
  U.torsion_order = w;
  if (F.rational()) {
    const auto& pu = fundamental_unit(K.mu().x);
    U.method = "pell";
    finish(K, U, KElement{RingElement(pu.x), RingElement(pu.y)});
    return U;
  }
  i64 inner = 0;
  for (int k = opts.kmin; k <= opts.kmax; ++k) {
    U.bound_exponent = k;
    if (auto eta = box_search(K, k, k == opts.kmin ? -1 : inner)) {
      U.method = "box";
      finish(K, U, *eta);
      return U;
    }
    inner = i64(1) << k;
  }
  if (opts.use_relations) {
    // small factor bases first: the lattice reduction dominates the cost
    const u64 mink = std::max<u64>(40, static_cast<u64>(K.minkowski_bound()));
    for (int e = opts.effort; e <= 4 * opts.effort; e *= 2) {
      std::optional<KElement> eta;
      for (u64 bound : {u64(30), u64(60), mink})
        if (bound <= mink && (eta = kernel_unit(K, bound, bound == mink ? 40 : 12, e))) break;
      if (eta) {
        U.method = "relations";
        finish(K, U, *eta);
        return U;
      }
    }
  }
  raise(errc::search_exhausted, "no unit found up to box bound 2^" + std::to_string(U.bound_exponent));
}

Sign unit_symbol_rel(const RelQuadField& K, const UnitResult& E, const KPlace& P) {
  if (!E.odd_index_certified || !E.eta) raise(errc::uncertified_units, "unit group not certified");
  Sign a = P.symbol(K, E.torsion_generator);
  Sign b = P.symbol(K, *E.eta);
  return (a == Sign::minus || b == Sign::minus) ? Sign::minus : Sign::plus;
}

std::vector<int> unit_norm_indices(const RelQuadField& K, const UnitResult& E) {
  const auto& F = K.base();
  const int w = F.torsion_order();
  std::vector<int> gens;
  gens.push_back(F.unit_index(K.rel_norm(E.torsion_generator)));
  if (E.eta) gens.push_back(F.unit_index(E.eta_norm));
  std::set<int> H{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int h : std::vector<int>(H.begin(), H.end()))
      for (int g : gens)
        if (H.insert((h + g) % w).second) grew = true;
  }
  return {H.begin(), H.end()};
}

}  // namespace scholz
