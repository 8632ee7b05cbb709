#include "scholz/class_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scholz/error.hpp"
#include "scholz/symbols.hpp"

namespace scholz {

int FactorBase::find(const KPlace& P) const {
  for (std::size_t i = 0; i < places.size(); ++i)
    if (places[i] == P) return static_cast<int>(i);
  return -1;
}

FactorBase make_factor_base(const RelQuadField& K, u64 bound) {
  return {kplaces_up_to(K, bound)};
}

std::optional<std::vector<i64>> smooth_exponents(const RelQuadField& K, const FactorBase& fb, const KElement& a) {
  Integer rest = abs(K.abs_norm(a));
  if (rest == 0) raise(errc::division_by_zero, "zero element has no factorisation");
  std::vector<i64> e(fb.places.size(), 0);
  for (std::size_t i = 0; i < fb.places.size() && rest != 1; ++i) {
    const auto& P = fb.places[i];
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), P.below.p)) continue;
    unsigned v = P.valuation(K, a);
    for (unsigned k = 0; k < v; ++k) rest /= P.norm;
    e[i] = v;
  }
  if (rest != 1) return std::nullopt;
  return e;
}

namespace {

struct Candidate {
  i128 norm;
  std::uint32_t ia, ib;
};

i128 small_norm(const GroundField& F, const SmallElement& t, const SmallElement& n, const SmallElement& a,
                const SmallElement& b) {
  auto mul = [&](const BasicElement<i128>& u, const BasicElement<i128>& v) { return F.mul(u, v); };
  BasicElement<i128> A{a.x, a.y}, B{b.x, b.y}, T{t.x, t.y}, N{n.x, n.y};
  auto nu = mul(A, A) + mul(T, mul(A, B)) + mul(N, mul(B, B));
  i128 r = F.norm(nu);
  return r < 0 ? -r : r;
}

}  // namespace

std::vector<Relation> collect_relations(const RelQuadField& K, const FactorBase& fb, std::size_t target, int effort) {
  const auto& F = K.base();
  std::vector<Relation> out;
  // principal ideals generated by rational primes of F
  std::vector<bool> done(fb.places.size(), false);
  for (std::size_t i = 0; i < fb.places.size(); ++i) {
    if (done[i]) continue;
    KElement g = K.from_base(fb.places[i].below.generator);
    auto e = smooth_exponents(K, fb, g);
    if (!e) continue;  // a conjugate factor lies outside the base
    for (std::size_t j = 0; j < fb.places.size(); ++j)
      if ((*e)[j] != 0) done[j] = true;
    out.push_back({g, *e});
  }

  auto t = narrow(K.t()), n = narrow(K.n());
  if (!t || !n) raise(errc::effort_exceeded, "field too large for relation search");
  std::vector<SmallElement> as, bs;
  if (F.rational()) {
    i64 A = 200 * effort, B = 20 * effort;
    for (i64 x = -A; x <= A; ++x) as.push_back({x, 0});
    for (i64 x = 1; x <= B; ++x) bs.push_back({x, 0});
  } else {
    i64 A = 16 * effort, B = 3 * effort;
    for (const auto& e : F.elements_in_box(A)) as.push_back(*narrow(e));
    for (const auto& e : F.elements_in_box(B))
      if (!e.is_zero() && F.canonical_associate(e) == e) bs.push_back(*narrow(e));
  }
  std::vector<u64> primes;
  for (const auto& P : fb.places)
    if (primes.empty() || primes.back() != P.below.p) primes.push_back(P.below.p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::vector<Candidate> cand;
  cand.reserve(as.size() * bs.size());
  for (std::uint32_t j = 0; j < bs.size(); ++j)
    for (std::uint32_t i = 0; i < as.size(); ++i) {
      i128 nn = small_norm(F, *t, *n, as[i], bs[j]);
      if (nn != 0) cand.push_back({nn, i, j});
    }
  std::sort(cand.begin(), cand.end(), [](const Candidate& x, const Candidate& y) {
    if (x.norm != y.norm) return x.norm < y.norm;
    if (x.ib != y.ib) return x.ib < y.ib;
    return x.ia < y.ia;
  });
  const std::size_t fixed = out.size();
  for (const auto& c : cand) {
    if (out.size() - fixed >= target) break;
    i128 r = c.norm;
    for (u64 p : primes) {
      while (r % p == 0) r /= p;
      if (r == 1) break;
    }
    if (r != 1) continue;
    const SmallElement &a = as[c.ia], &b = bs[c.ib];
    if (!(F.gcd(widen(a), widen(b)) == F.canonical_associate(RingElement(Integer(1))))) continue;
    KElement el{widen(a), widen(b)};
    auto e = smooth_exponents(K, fb, el);
    if (e) out.push_back({el, *e});
  }
  return out;
}

namespace {

// Row-style Hermite form by insertion; rows reduced modulo the determinant once full rank.
class HermiteBuilder {
 public:
  explicit HermiteBuilder(std::size_t n) : n_(n), piv_(n) {}

  void insert(std::vector<Integer> v) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (sgn(v[j]) == 0) continue;
      if (modulus_ != 0) reduce(v, j);
      if (sgn(v[j]) == 0) continue;
      if (piv_[j].empty()) {
        if (v[j] < 0)
          for (auto& x : v) x = -x;
        piv_[j] = std::move(v);
        ++rank_;
        if (rank_ == n_ && modulus_ == 0) set_modulus();
        return;
      }
      auto& p = piv_[j];
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p[j].get_mpz_t(), v[j].get_mpz_t());
      Integer a = p[j] / g, b = v[j] / g;
      std::vector<Integer> np(n_), nv(n_);
      for (std::size_t k = j; k < n_; ++k) {
        np[k] = x * p[k] + y * v[k];
        nv[k] = a * v[k] - b * p[k];
      }
      if (np[j] < 0)
        for (auto& z : np) z = -z;
      if (modulus_ != 0) reduce(np, j);
      p = std::move(np);
      v = std::move(nv);
    }
  }

  std::size_t rank() const { return rank_; }

  IntMatrix rows() const {
    IntMatrix m;
    for (const auto& r : piv_)
      if (!r.empty()) m.push_back(r);
    return m;
  }

 private:
  void reduce(std::vector<Integer>& v, std::size_t from) const {
    for (std::size_t k = from + 1; k < n_; ++k) mpz_fdiv_r(v[k].get_mpz_t(), v[k].get_mpz_t(), modulus_.get_mpz_t());
  }
  void set_modulus() {
    modulus_ = 1;
    for (std::size_t j = 0; j < n_; ++j) modulus_ *= piv_[j][j];
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<Integer> e(n_, 0);
      e[j] = modulus_;
      insert(std::move(e));
    }
    for (std::size_t j = 0; j < n_; ++j) reduce(piv_[j], j);
  }

  std::size_t n_;
  std::vector<std::vector<Integer>> piv_;
  std::size_t rank_ = 0;
  Integer modulus_ = 0;
};

struct StageResult {
  std::vector<Integer> factors;
  bool full_rank = false;
  std::size_t rank = 0;
  SmithForm snf;
};

StageResult solve_stage(const std::vector<Relation>& rels, std::size_t count, std::size_t n, bool transform) {
  StageResult s;
  HermiteBuilder hb(n);
  for (std::size_t i = 0; i < count && i < rels.size(); ++i) {
    std::vector<Integer> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = rels[i].exponents[k];
    hb.insert(std::move(v));
  }
  s.rank = hb.rank();
  s.full_rank = s.rank == n;
  if (!s.full_rank) return s;
  if (n == 0) return s;
  s.snf = smith_normal_form(hb.rows(), transform);
  for (const auto& d : s.snf.diagonal)
    if (d > 1) s.factors.push_back(d);
  return s;
}

}  // namespace

namespace {

// Euler factor contribution prod (1 - 1/NP)^-1 over places P | p of K, for odd p.
long double local_factor(const RelQuadField& K, u64 p) {
  const auto& F = K.base();
  const RingElement& delta = K.relative_discriminant();
  auto over = [&](u64 r) {  // F-place of degree one with w -> r
    u64 d = (mod_u64(delta.x, p) + mulmod(mod_u64(delta.y, p), r, p)) % p;
    long double q = 1.0L / p;
    int l = jacobi_value(d, p);
    if (l == 0) return 1.0L / (1.0L - q);
    if (l > 0) return 1.0L / ((1.0L - q) * (1.0L - q));
    return 1.0L / (1.0L - q * q);
  };
  if (F.rational()) return over(0);
  const u64 T = mod_u64(static_cast<i64>(F.gen_trace()), p), N = mod_u64(static_cast<i64>(F.gen_norm()), p);
  u64 disc = (mulmod(T, T, p) + p - mulmod(4, N, p)) % p;
  int l = jacobi_value(disc, p);
  u64 inv2 = (p + 1) / 2;
  if (l == 0) return over(mulmod(T, inv2, p));
  if (l > 0) {
    u64 s = sqrt_mod(disc, p);
    return over(mulmod((T + s) % p, inv2, p)) * over(mulmod((T + p - s) % p, inv2, p));
  }
  // inert in F: residue field of order p^2, delta a square there iff its norm is a square mod p
  long double q = 1.0L / (static_cast<long double>(p) * p);
  int m = jacobi_value(mod_u64(F.norm(delta), p), p);
  if (m == 0) return 1.0L / (1.0L - q);
  if (m > 0) return 1.0L / ((1.0L - q) * (1.0L - q));
  return 1.0L / (1.0L - q * q);
}

}  // namespace

double zeta_residue_estimate(const RelQuadField& K, u64 prime_bound) {
  long double r = 1;
  for (u64 p : primes_up_to(prime_bound)) {
    long double term = 1.0L - 1.0L / p;
    if (p == 2) {
      for (const auto& P : factor_rational_prime(p, K.base()).places)
        for (const auto& Q : K.places_over(P)) term /= 1.0L - 1.0L / static_cast<long double>(Q.norm.get_d());
    } else {
      term *= local_factor(K, p);
    }
    r *= term;
  }
  return static_cast<double>(r);
}

std::vector<Integer> class_of_vector(const ClassGroupResult& C, const std::vector<Integer>& v) {
  const std::size_t n = C.factor_base.size();
  const std::size_t off = C.diagonal.size() - C.invariant_factors.size();
  std::vector<Integer> out(C.invariant_factors.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Integer s = 0;
    for (std::size_t k = 0; k < n; ++k) s += v[k] * C.transform[k][off + i];
    mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), C.invariant_factors[i].get_mpz_t());
    out[i] = s;
  }
  return out;
}

ClassGroupResult class_group(const RelQuadField& K, int effort, const UnitResult* units) {
  ClassGroupResult R;
  FactorBase fb = make_factor_base(K, static_cast<u64>(std::floor(K.minkowski_bound())));
  R.factor_base = fb.places;
  const std::size_t n = fb.places.size();

  std::optional<UnitResult> own;
  long double regulator = 1;
  bool units_ok = true;
  if (K.unit_rank() == 1) {
    if (!units) {
      try {
        own = unit_search(K, UnitOptions{.effort = effort});
        units = &*own;
      } catch (const error& e) {
        units_ok = false;
        R.reason = std::string("units: ") + e.what();
      }
    }
    if (units) {
      regulator = units->regulator;
      if (!units->odd_index_certified) {
        units_ok = false;
        R.reason = "units: odd index not certified";
      }
    }
  }

  const std::size_t base = (2 * n + 20) * static_cast<std::size_t>(std::max(1, effort));
  auto rels = collect_relations(K, fb, 4 * base, effort);
  std::size_t fixed = 0;
  while (fixed < rels.size() && rels[fixed].element.y.is_zero()) ++fixed;
  StageResult last;
  for (int stage = 0; stage < 3; ++stage) {
    std::size_t count = fixed + (base << stage);
    bool final_stage = stage == 2;
    StageResult s = solve_stage(rels, count, n, final_stage);
    R.stages.push_back(s.full_rank ? s.factors : std::vector<Integer>{Integer(0)});
    if (final_stage) last = std::move(s);
  }
  R.relation_count = rels.size();
  R.rank = last.rank;
  if (!last.full_rank) {
    R.h = 0;
    R.certified = false;
    R.reason = "relation lattice not of full rank";
    return R;
  }
  R.invariant_factors = last.factors;
  R.h = 1;
  for (const auto& d : last.factors) R.h *= d;
  R.two_class_number = 1;
  for (Integer h = R.h; mpz_even_p(h.get_mpz_t()); h /= 2) R.two_class_number *= 2;
  if (n > 0) {
    R.transform = std::move(last.snf.V);
    R.diagonal = last.snf.diagonal;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> e(n, 0);
    e[j] = 1;
    R.place_classes.push_back(class_of_vector(R, e));
  }
  R.relations = std::move(rels);
  R.stable = R.stages[1] == R.stages[2];

  const long double pi = std::numbers::pi_v<long double>;
  int w = torsion_of(K).second;
  long double res = zeta_residue_estimate(K, 10000);
  long double absd = std::fabs(static_cast<long double>(K.absolute_discriminant().get_d()));
  long double hR_pred = res * w * std::sqrt(absd) / (std::pow(2.0L, K.r1()) * std::pow(2 * pi, K.r2()));
  R.analytic_ratio = static_cast<double>(static_cast<long double>(R.h.get_d()) * regulator / hR_pred);
  bool ratio_ok = R.analytic_ratio >= 0.7 && R.analytic_ratio <= 1.4;
  R.certified = R.stable && ratio_ok && units_ok;
  if (!R.certified && R.reason.empty())
    R.reason = !R.stable ? "invariant factors unstable across effort stages" : "analytic ratio outside [0.7, 1.4]";
  return R;
}

std::vector<Integer> class_of(const RelQuadField& K, const ClassGroupResult& C, const KPlace& P) {
  FactorBase fb{C.factor_base};
  int idx = fb.find(P);
  if (idx >= 0) return C.place_classes[idx];
  std::vector<Integer> zero(C.invariant_factors.size(), 0);
  if (P.kind == SplitKind::inert) return zero;
  const auto& F = K.base();
  FactorBase ext = fb;
  ext.places.push_back(P);
  RingElement r = P.below.lift(P.theta_root);
  auto box = F.elements_in_box(F.rational() ? 40 : 6);
  for (i64 bnd = 1; bnd <= 6; ++bnd)
    for (const auto& b : F.elements_in_box(bnd)) {
      if (b.is_zero()) continue;
      for (const auto& k : box) {
        RingElement a = F.mul(P.below.generator, k) - F.mul(b, r);
        KElement el{a, b};
        if (K.rel_norm(el).is_zero()) continue;
        auto e = smooth_exponents(K, ext, el);
        if (!e || e->back() != 1) continue;
        std::vector<Integer> v(C.factor_base.size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = -(*e)[j];
        return class_of_vector(C, v);
      }
    }
  raise(errc::effort_exceeded, "no smooth cofactor for a place outside the factor base");
}

}  // namespace scholz
