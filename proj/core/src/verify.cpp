#include "scholz/verify.hpp"

#include <chrono>
#include <mutex>
#include <sstream>
#include <tuple>

#include "scholz/ambiguous.hpp"
#include "scholz/error.hpp"
#include "scholz/primary.hpp"
#include "scholz/real_quadratic.hpp"

namespace scholz {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

bool VerificationRecord::failed() const {
  for (const auto& c : clauses)
    if (c.verdict == Verdict::fail) return true;
  return false;
}

bool VerificationRecord::skipped() const {
  if (failed()) return false;
  if (!skip_reason.empty()) return true;
  for (const auto& c : clauses)
    if (c.verdict == Verdict::skipped) return true;
  return false;
}

bool CharacterTable::failed() const {
  for (const auto& c : clauses)
    if (c.verdict == Verdict::fail) return true;
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string sign_str(Sign s) { return s == Sign::plus ? "+1" : "-1"; }

template <class Rec>
void check(Rec& rec, std::string name, bool ok, std::string detail = {}) {
  rec.clauses.push_back({std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail)});
}

template <class Rec>
void skip(Rec& rec, std::string name, std::string reason) {
  rec.clauses.push_back({std::move(name), Verdict::skipped, std::move(reason)});
}

Integer mod_int(const Integer& a, long m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer two_part(const std::vector<Integer>& invariants) {
  Integer r = 1;
  for (auto d : invariants)
    while (d % 2 == 0) {
      d /= 2;
      r *= 2;
    }
  return r;
}

u64 place_norm(const PrimePlace& P) { return P.degree == 1 ? P.p : P.p * P.p; }

// ---------------------------------------------------------------------------
// field data memo

using MemoKey = std::tuple<int, std::string, std::string>;
std::mutex memo_mutex;
std::map<MemoKey, std::shared_ptr<const FieldData>> memo;

std::shared_ptr<const FieldData> compute_field_data(const GroundField& F, const RingElement& mu, bool need_classes,
                                                    const VerifyOptions& opts) {
  auto d = std::make_shared<FieldData>();
  try {
    d->K = std::make_shared<const RelQuadField>(RelQuadField::build(F, mu));
  } catch (const error& e) {
    d->reason = e.what();
    return d;
  }
  const RelQuadField& K = *d->K;

  if (opts.cache) {
    if (auto c = opts.cache->find(F.id(), mu); c && c->certified && c->eta) {
      UnitResult u;
      auto [z, w] = torsion_of(K);
      u.torsion_generator = z;
      u.torsion_order = w;
      u.eta = c->eta;
      u.eta_norm = K.rel_norm(*c->eta);
      u.odd_index_certified = true;
      u.method = "cache";
      d->units = u;
      d->units_certified = true;
      d->invariant_factors = c->invariant_factors;
      d->h = 1;
      for (const auto& x : c->invariant_factors) d->h *= x;
      d->have_classes = true;
      d->classes_certified = true;
      return d;
    }
  }

  try {
    d->units = unit_search(K, opts.units);
    d->units_certified = d->units->odd_index_certified;
    if (!d->units_certified) d->reason = "uncertified_units: odd index not certified";
  } catch (const error& e) {
    d->reason = e.what();
  }
  if (need_classes) {
    ClassGroupResult C = class_group(K, opts.effort, d->units ? &*d->units : nullptr);
    for (int e = 2 * opts.effort; !C.stable && e <= 4 * opts.effort; e *= 2)
      C = class_group(K, e, d->units ? &*d->units : nullptr);
    d->have_classes = true;
    d->invariant_factors = C.invariant_factors;
    d->h = C.h;
    d->classes_certified = C.certified;
    if (!C.certified && d->reason.empty()) d->reason = "uncertified_result: " + C.reason;
    if (opts.cache && d->units_certified && d->classes_certified && d->units->eta) {
      CachedField c;
      c.field = F.id();
      c.mu = mu;
      c.invariant_factors = C.invariant_factors;
      c.eta = d->units->eta;
      c.certified = true;
      opts.cache->store(c);
    }
  }
  return d;
}

// ---------------------------------------------------------------------------

Sign lift_symbol(const RelQuadField& K, const UnitResult& E, const KPlace& P, int a, int b) {
  ResidueField rf = P.below.residue_field(K.base());
  Fq z = P.reduce(K, E.torsion_generator);
  Fq e = P.reduce(K, *E.eta);
  if (b < 0) e = rf.inv(e);
  Fq v = rf.mul(rf.pow(z, static_cast<u128>(a)), rf.pow(e, static_cast<u128>(b < 0 ? -b : b)));
  return rf.legendre(v) < 0 ? Sign::minus : Sign::plus;
}

struct Lift {
  int a = 0, b = 0;
  Sign symbol = Sign::plus;
  bool norm_lemma = true;
};

// All zeta^a eta^b with 0 <= a < w_K, |b| <= 2 w_F whose relative norm is zeta_F^target.
std::optional<Lift> lift_unit(const RelQuadField& K, const UnitResult& E, const KPlace& P, int target) {
  const auto& F = K.base();
  const int w = F.torsion_order();
  const int nz = F.unit_index(K.rel_norm(E.torsion_generator));
  const int ne = F.unit_index(E.eta_norm);
  if (nz < 0 || ne < 0) raise(errc::internal, "unit norm is not a root of unity");
  std::optional<Lift> first;
  bool same = true;
  for (int babs = 0; babs <= 2 * w; ++babs) {
    for (int b : {babs, -babs}) {
      if (babs == 0 && b < 0) continue;
      for (int a = 0; a < E.torsion_order; ++a) {
        long idx = (static_cast<long>(a) * nz + static_cast<long>(b) * ne) % w;
        if (idx < 0) idx += w;
        if (idx != target) continue;
        Sign s = lift_symbol(K, E, P, a, b);
        if (!first)
          first = Lift{a, b, s, true};
        else if (s != first->symbol)
          same = false;
      }
    }
  }
  if (first) first->norm_lemma = same;
  return first;
}

std::string lift_text(const Lift& l) {
  std::ostringstream os;
  os << "zeta^" << l.a << "*eta^" << l.b;
  return os.str();
}

// The unit u of F (first by index) making u*a primary, if any.
std::optional<RingElement> primary_twist(const GroundField& F, const RingElement& a) {
  for (const auto& u : F.units()) {
    RingElement m = F.mul(u, a);
    if (F.is_primary(m)) return m;
  }
  return std::nullopt;
}

long norm_index(const RelQuadField& K, const UnitResult& E) {
  return K.base().torsion_order() / static_cast<long>(unit_norm_indices(K, E).size());
}

long local_norm_index(const RelQuadField& K) {
  const auto& F = K.base();
  long count = 0;
  for (const auto& u : F.units())
    if (unit_is_local_norm(K, u)) ++count;
  return F.torsion_order() / count;
}

// Symbol of the unit group of F(sqrt pi) at a place above `other`, at both places above it.
struct RelSymbol {
  Sign group;       // (E / P)
  Sign fundamental;  // (eta / P)
  bool conjugate_independent;
};

RelSymbol rel_symbols(const FieldData& d, const PrimePlace& other) {
  const RelQuadField& K = *d.K;
  auto places = K.places_over(other);
  if (places.size() != 2) raise(errc::not_split, "prime does not split in the quadratic extension");
  const UnitResult& E = *d.units;
  RelSymbol r;
  r.group = unit_symbol_rel(K, E, places[0]);
  r.fundamental = places[0].symbol(K, *E.eta);
  r.conjugate_independent =
      unit_symbol_rel(K, E, places[1]) == r.group && places[1].symbol(K, *E.eta) == r.fundamental;
  return r;
}

void require_distinct(const PrimePlace& a, const PrimePlace& b) {
  if (a == b) raise(errc::bad_congruence, "the two primes generate the same ideal");
  if (a.p == 2 || b.p == 2) raise(errc::even_place, "primes above 2 are excluded");
}

}  // namespace

std::shared_ptr<const FieldData> field_data(const GroundField& F, const RingElement& mu, bool need_classes,
                                            const VerifyOptions& opts) {
  MemoKey key{static_cast<int>(F.id()), mu.x.get_str(), mu.y.get_str()};
  {
    std::lock_guard lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end() && (!need_classes || it->second->have_classes || !it->second->K)) return it->second;
  }
  auto d = compute_field_data(F, mu, need_classes, opts);
  std::lock_guard lock(memo_mutex);
  auto& slot = memo[key];
  if (!slot || (d->have_classes && !slot->have_classes)) slot = d;
  return slot;
}

// ---------------------------------------------------------------------------

VerificationRecord verify_tsrc(u64 p, u64 q) {
  auto t0 = Clock::now();
  if (p == q || p % 2 == 0 || q % 2 == 0 || !is_prime(p) || !is_prime(q))
    raise(errc::bad_congruence, "p and q must be distinct odd primes");
  if (p % 4 != q % 4) raise(errc::bad_congruence, "p and q must be congruent mod 4");

  VerificationRecord r;
  r.theorem = "tsrc";
  r.field = FieldId::Q;
  r.pi1 = RingElement(Integer(static_cast<unsigned long>(p)));
  r.pi2 = RingElement(Integer(static_cast<unsigned long>(q)));
  r.p = p;
  r.q = q;
  const auto& W = wide_class_data(static_cast<i64>(p * q));
  r.h = Integer(static_cast<long>(W.h));
  r.h_plus = Integer(static_cast<long>(W.h_plus));
  r.unit_norm = RingElement(Integer(W.unit_norm));
  r.unit_norm_index = W.unit_norm == -1 ? 1 : 2;
  r.units_certified = r.classes_certified = true;
  r.ef_p1 = jacobi(-1, p);
  r.ef_p2 = jacobi(-1, q);
  r.legendre = jacobi(static_cast<i64>(p), q);
  check(r, "fact_ef", *r.ef_p1 == *r.ef_p2);
  check(r, "fact_parity", (W.h % 2 == 1) == (*r.ef_p1 == Sign::minus));
  check(r, "quadratic_reciprocity",
        *r.legendre == (jacobi(static_cast<i64>(q), p) * (p % 4 == 3 ? Sign::minus : Sign::plus)));

  const long h = W.h;
  const bool plus = W.unit_norm == 1;
  if (p % 4 == 3) {
    r.case_label = "a";
    check(r, "a_h_odd", h % 2 == 1);
    check(r, "a_norm_plus", plus);
  } else if (*r.legendre == Sign::minus) {
    r.case_label = "b";
    check(r, "b_h_2mod4", h % 4 == 2);
    check(r, "b_norm_minus", !plus);
  } else {
    Sign e1 = eps_symbol(p, q), e2 = eps_symbol(q, p);
    Sign q12 = quartic_rational(Integer(static_cast<unsigned long>(p)), q);
    Sign q21 = quartic_rational(Integer(static_cast<unsigned long>(q)), p);
    r.e1_p2 = e1;
    r.e2_p1 = e2;
    r.quartic12 = q12;
    r.quartic21 = q21;
    r.case_label = e1 == Sign::minus ? "c-" : "c+";
    auto [ea, eb] = eps_symbol_both_roots(p, q);
    auto [qa, qb] = quartic_rational_both_roots(Integer(static_cast<unsigned long>(p)), q);
    auto [qc, qd] = quartic_rational_both_roots(Integer(static_cast<unsigned long>(q)), p);
    check(r, "root_independence", ea == eb && qa == qb && qc == qd);
    check(r, "c_reciprocity", e1 == e2, sign_str(e1) + " " + sign_str(e2));
    check(r, "strong_quartic", e1 == q12 * q21);
    if (e1 == Sign::minus) {
      check(r, "c_minus_h_2mod4", h % 4 == 2);
      check(r, "c_minus_norm_plus", plus);
    } else {
      check(r, "c_plus_h_0mod4", h % 4 == 0);
    }
    if (q12 == Sign::minus && q21 == Sign::minus) {
      check(r, "strong_h_4mod8", h % 8 == 4);
      check(r, "strong_norm_minus", !plus);
    }
    if (q12 == Sign::plus && q21 == Sign::plus) check(r, "strong_8_divides_hplus", W.h_plus % 8 == 0);
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------

VerificationRecord verify_tmain(const GroundField& F, const RingElement& pi1, const RingElement& pi2,
                                const VerifyOptions& opts) {
  auto t0 = Clock::now();
  const PrimePlace P1 = place_of(F, pi1), P2 = place_of(F, pi2);
  require_distinct(P1, P2);

  VerificationRecord r;
  r.theorem = "tmain";
  r.field = F.id();
  r.pi1 = pi1;
  r.pi2 = pi2;
  r.p = place_norm(P1);
  r.q = place_norm(P2);
  r.ef_p1 = unit_group_symbol(F, P1);
  r.ef_p2 = unit_group_symbol(F, P2);
  auto finish = [&] {
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  };

  auto mu = primary_twist(F, F.mul(pi1, pi2));
  if (!mu) {
    r.skip_reason = "not_two_ramified: no unit makes pi1*pi2 primary";
    skip(r, "tmain", r.skip_reason);
    return finish();
  }
  check(r, "fact_ef", *r.ef_p1 == *r.ef_p2);
  auto d = field_data(F, *mu, true, opts);
  r.units_certified = d->units_certified;
  r.classes_certified = d->classes_certified;
  if (d->units) {
    r.unit_norm = d->units->eta_norm;
    if (d->units_certified) r.unit_norm_index = norm_index(*d->K, *d->units);
  }
  if (d->have_classes) r.h = d->h;
  if (!d->units_certified || !d->classes_certified) {
    r.skip_reason = "uncertified_dependency: " + d->reason;
    skip(r, "tmain", r.skip_reason);
    return finish();
  }
  const RelQuadField& K = *d->K;
  const Integer& h = d->h;
  const long idx = *r.unit_norm_index;
  const bool primary = *r.ef_p1 == Sign::plus && *r.ef_p2 == Sign::plus;
  check(r, "fact_parity", (mod_int(h, 2) == 1) == (*r.ef_p1 == Sign::minus));

  if (!primary) {
    r.case_label = "1";
    r.legendre = quad_symbol(F, pi1, P2);
    check(r, "1_h_odd", mod_int(h, 2) == 1);
    check(r, "1_norm_index_2", idx == 2);
    try {
      check(r, "1_local_norm_index_2", local_norm_index(K) == 2);
    } catch (const error& e) {
      skip(r, "1_local_norm_index_2", e.what());
    }
    return finish();
  }

  const RingElement g1 = primary_generator(F, pi1), g2 = primary_generator(F, pi2);
  r.legendre = quad_symbol(F, g1, P2);
  check(r, "quadratic_reciprocity", *r.legendre == quad_symbol(F, g2, P1));
  if (*r.legendre == Sign::minus) {
    r.case_label = "2";
    check(r, "2_h_2mod4", mod_int(h, 4) == 2);
    check(r, "2_norm_index_1", idx == 1);
    return finish();
  }

  auto d1 = field_data(F, g1, false, opts);
  auto d2 = field_data(F, g2, false, opts);
  if (!d1->units_certified || !d2->units_certified) {
    r.units_certified = false;
    r.skip_reason = "uncertified_dependency: " + (d1->units_certified ? d2->reason : d1->reason);
    skip(r, "3_reciprocity", r.skip_reason);
    return finish();
  }
  RelSymbol s1 = rel_symbols(*d1, P2), s2 = rel_symbols(*d2, P1);
  r.e1_p2 = s1.group;
  r.e2_p1 = s2.group;
  try {
    r.quartic12 = quartic_primary(F, g1, g2);
    r.quartic21 = quartic_primary(F, g2, g1);
  } catch (const error&) {
  }
  check(r, "conjugate_independence", s1.conjugate_independent && s2.conjugate_independent);
  check(r, "lhodd_norms", norm_index(*d1->K, *d1->units) == 1 && norm_index(*d2->K, *d2->units) == 1);
  check(r, "3_reciprocity", s1.group == s2.group, sign_str(s1.group) + " " + sign_str(s2.group));
  if (s1.group == Sign::minus) {
    r.case_label = "4";
    check(r, "4_h_2mod4", mod_int(h, 4) == 2);
    check(r, "4_norm_index_2", idx == 2);
  } else {
    r.case_label = "5";
    check(r, "5_h_0mod4", mod_int(h, 4) == 0);
  }
  return finish();
}

// ---------------------------------------------------------------------------

namespace {

VerificationRecord verify_srl(FieldId id, const RingElement& pi, const RingElement& rho, const VerifyOptions& opts) {
  auto t0 = Clock::now();
  const GroundField& F = GroundField::get(id);
  const PrimePlace P1 = place_of(F, pi), P2 = place_of(F, rho);
  require_distinct(P1, P2);
  if (!F.is_two_primary(pi) || !F.is_two_primary(rho)) raise(errc::not_primary, "generators must be primary");
  if (P1.degree != 1 || P2.degree != 1 || P1.p % 8 != 1 || P2.p % 8 != 1)
    raise(errc::bad_congruence, "norms must be primes = 1 mod 8");

  VerificationRecord r;
  r.theorem = id == FieldId::Qi ? "srli" : "srl2";
  r.field = id;
  r.pi1 = pi;
  r.pi2 = rho;
  r.p = P1.p;
  r.q = P2.p;
  auto finish = [&] {
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  };
  r.legendre = quad_symbol(F, pi, P2);
  r.ef_p1 = unit_group_symbol(F, P1);
  r.ef_p2 = unit_group_symbol(F, P2);
  check(r, "fact_ef", *r.ef_p1 == *r.ef_p2);

  auto d = field_data(F, F.mul(pi, rho), true, opts);
  r.units_certified = d->units_certified;
  r.classes_certified = d->classes_certified;
  if (d->units) r.unit_norm = d->units->eta_norm;
  if (d->have_classes) r.h = two_part(d->invariant_factors);
  if (!d->units_certified || !d->classes_certified) {
    r.skip_reason = "uncertified_dependency: " + d->reason;
    skip(r, r.theorem, r.skip_reason);
    return finish();
  }
  r.unit_norm_index = norm_index(*d->K, *d->units);
  const Integer h2 = *r.h;
  const int k = F.unit_index(d->units->eta_norm);  // N eta = zeta^k
  const int w = F.torsion_order();

  if (*r.legendre == Sign::minus) {
    r.case_label = "1";
    check(r, "1_h_eq_2", h2 == 2);
    if (id == FieldId::Qi)
      check(r, "1_norm_pm_i", k == 1 || k == 3, to_string(d->units->eta_norm));
    else
      check(r, "1_norm_minus", k == w / 2, to_string(d->units->eta_norm));
    return finish();
  }

  auto d1 = field_data(F, pi, false, opts);
  auto d2 = field_data(F, rho, false, opts);
  if (!d1->units_certified || !d2->units_certified) {
    r.skip_reason = "uncertified_dependency: " + (d1->units_certified ? d2->reason : d1->reason);
    skip(r, "2_reciprocity", r.skip_reason);
    return finish();
  }
  RelSymbol s1 = rel_symbols(*d1, P2), s2 = rel_symbols(*d2, P1);
  r.e1_p2 = s1.fundamental;
  r.e2_p1 = s2.fundamental;
  try {
    r.quartic12 = quartic_primary(F, pi, rho);
    r.quartic21 = quartic_primary(F, rho, pi);
  } catch (const error&) {
  }
  check(r, "conjugate_independence", s1.conjugate_independent && s2.conjugate_independent);
  check(r, "2_reciprocity", s1.fundamental == s2.fundamental,
        sign_str(s1.fundamental) + " " + sign_str(s2.fundamental));
  if (s1.fundamental == Sign::minus) {
    r.case_label = "2a";
    check(r, "2a_h_2mod4", h2 == 2);
    if (id == FieldId::Qi)
      check(r, "2a_norm_pm_1", k == 0 || k == 2, to_string(d->units->eta_norm));
    else
      check(r, "2a_norm_plus", k == 0, to_string(d->units->eta_norm));
  } else {
    r.case_label = "2b";
    check(r, "2b_h_0mod4", mod_int(h2, 4) == 0);
  }
  return finish();
}

}  // namespace

VerificationRecord verify_srli(const RingElement& pi, const RingElement& rho, const VerifyOptions& opts) {
  return verify_srl(FieldId::Qi, pi, rho, opts);
}

VerificationRecord verify_srl2(const RingElement& pi, const RingElement& rho, const VerifyOptions& opts) {
  return verify_srl(FieldId::Qsqrt_2, pi, rho, opts);
}

// ---------------------------------------------------------------------------

bool x_admissible(const GroundField& F, const RingElement& pi1, const RingElement& pi2) {
  try {
    const PrimePlace P1 = place_of(F, pi1), P2 = place_of(F, pi2);
    if (P1 == P2 || P1.p == 2 || P2.p == 2) return false;
    if (unit_group_symbol(F, P1) == Sign::minus || unit_group_symbol(F, P2) == Sign::minus) return false;
    return quad_symbol(F, primary_generator(F, pi1), P2) == Sign::plus;
  } catch (const error&) {
    return false;
  }
}

CharacterTable x_character(const GroundField& F, const RingElement& pi1, const RingElement& pi2,
                           const VerifyOptions& opts) {
  const PrimePlace P1 = place_of(F, pi1), P2 = place_of(F, pi2);
  require_distinct(P1, P2);
  if (unit_group_symbol(F, P1) == Sign::minus || unit_group_symbol(F, P2) == Sign::minus)
    raise(errc::not_primary, "both primes must be primary");
  const RingElement g1 = primary_generator(F, pi1), g2 = primary_generator(F, pi2);
  if (quad_symbol(F, g1, P2) == Sign::minus) raise(errc::not_split, "the primes are not mutual residues");

  CharacterTable t;
  t.field = F.id();
  t.pi1 = g1;
  t.pi2 = g2;
  t.p = place_norm(P1);
  t.q = place_norm(P2);
  try {
    t.quartic_product = quartic_primary(F, g1, g2) * quartic_primary(F, g2, g1);
  } catch (const error&) {
  }

  auto d1 = field_data(F, g1, false, opts);
  auto d2 = field_data(F, g2, false, opts);
  auto dk = field_data(F, F.mul(g1, g2), false, opts);
  for (const auto* d : {&d1, &d2, &dk}) {
    if (!(*d)->units_certified) {
      t.skip_reason = "uncertified_dependency: " + (*d)->reason;
      skip(t, "x_character", t.skip_reason);
      return t;
    }
  }
  t.certified = true;
  const RelQuadField &k1 = *d1->K, &k2 = *d2->K;
  const KPlace Q2 = k1.places_over(P2).at(0);
  const KPlace Q1 = k2.places_over(P1).at(0);

  const int w = F.torsion_order();
  bool lemma = true;
  t.agreement = true;
  for (int target = 0; target < w; ++target) {
    auto l1 = lift_unit(k1, *d1->units, Q2, target);
    auto l2 = lift_unit(k2, *d2->units, Q1, target);
    if (!l1 || !l2) raise(errc::lift_not_found, "root of unity is not a norm of a unit");
    CharacterTable::Entry e;
    e.unit_index = target;
    e.x1 = l1->symbol;
    e.x2 = l2->symbol;
    e.eta1 = lift_text(*l1);
    e.eta2 = lift_text(*l2);
    e.norm_lemma = l1->norm_lemma && l2->norm_lemma;
    lemma = lemma && e.norm_lemma;
    if (*e.x1 != *e.x2) t.agreement = false;
    t.entries.push_back(e);
  }
  t.x_generator = t.entries[1 % w].x1;
  t.x_minus_one = t.entries[w / 2].x1;
  check(t, "x1_eq_x2", t.agreement);
  check(t, "norm_lemma", lemma);

  t.trivial_on_norms = true;
  for (int k : unit_norm_indices(*dk->K, *dk->units))
    if (*t.entries[k].x1 != Sign::plus) t.trivial_on_norms = false;
  check(t, "trivial_on_norms", t.trivial_on_norms);

  const Sign e1 = unit_symbol_rel(k1, *d1->units, Q2);
  const Sign e2 = unit_symbol_rel(k2, *d2->units, Q1);
  bool all_trivial = true;
  for (const auto& e : t.entries) all_trivial = all_trivial && *e.x1 == Sign::plus;
  check(t, "x_trivial_iff_symbols", all_trivial == (e1 == Sign::plus && e2 == Sign::plus));
  if (F.id() != FieldId::Qi) check(t, "x_minus_one_eq_e1", *t.x_minus_one == e1, sign_str(e1));

  switch (F.id()) {
    case FieldId::Q:
    case FieldId::Qsqrt_2:
      if (t.quartic_product)
        check(t, "instance_x_minus_one", *t.x_minus_one == *t.quartic_product, sign_str(*t.quartic_product));
      else
        skip(t, "instance_x_minus_one", "quartic symbol unavailable");
      break;
    case FieldId::Qi: {
      check(t, "instance_x_minus_one", *t.x_minus_one == Sign::plus);
      const int i_index = F.unit_index(RingElement(Integer(0), Integer(1)));
      Sign want = quartic_rational(Integer(2), t.p) * quartic_rational(Integer(2), t.q);
      check(t, "instance_x_i", *t.entries[i_index].x1 == want, sign_str(want));
      break;
    }
    default: break;
  }
  return t;
}

ConjectureRow conjecture_row(const GroundField& F, const RingElement& pi1, const RingElement& pi2,
                             const VerifyOptions& opts) {
  ConjectureRow row;
  row.field = F.id();
  row.pi1 = pi1;
  row.pi2 = pi2;
  try {
    CharacterTable t = x_character(F, pi1, pi2, opts);
    row.pi1 = t.pi1;
    row.pi2 = t.pi2;
    row.p = t.p;
    row.q = t.q;
    row.quartic_product = t.quartic_product;
    if (t.certified)
      row.x_minus_one = t.x_minus_one;
    else
      row.skip_reason = t.skip_reason;
  } catch (const error& e) {
    row.skip_reason = e.what();
  }
  return row;
}

}  // namespace scholz
