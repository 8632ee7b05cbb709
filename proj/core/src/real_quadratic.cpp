#include "scholz/real_quadratic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "scholz/error.hpp"

namespace scholz {

namespace {

// floor((P + sqrt d)/Q) for non-square d, Q != 0, s = floor(sqrt d)
Integer cf_digit(const Integer& P, const Integer& Q, const Integer& s) {
  Integer r;
  if (Q > 0) {
    mpz_fdiv_q(r.get_mpz_t(), Integer(P + s).get_mpz_t(), Q.get_mpz_t());
  } else {
    Integer aq = -Q;
    mpz_fdiv_q(r.get_mpz_t(), Integer(P + s).get_mpz_t(), aq.get_mpz_t());
    r = -(r + 1);
  }
  return r;
}

double log_of(const Integer& v) {
  long e;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

PellUnit compute_unit(const Integer& d) {
  if (d <= 1 || !is_squarefree(d)) raise(errc::not_squarefree, to_string(d) + " is not a squarefree integer > 1");
  PellUnit u;
  u.d = d;
  u.half = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1;
  const Integer P0 = u.half ? 1 : 0;
  const Integer Q0 = u.half ? 2 : 1;
  const Integer s = isqrt(d);
  Integer P = P0, Q = Q0;
  Integer A2 = 0, A1 = 1, B2 = 1, B1 = 0;
  for (std::size_t i = 0;; ++i) {
    Integer a = cf_digit(P, Q, s);
    Integer A = a * A1 + A2, B = a * B1 + B2;
    A2 = A1; A1 = A; B2 = B1; B1 = B;
    P = a * Q - P;
    Q = (d - P * P) / Q;
    if (Q == Q0) {
      u.period = i + 1;
      Integer G = Q0 * A - P0 * B;
      if (u.half) {
        u.x = (G - B) / 2;
        u.y = B;
      } else {
        u.x = G;
        u.y = B;
      }
      break;
    }
  }
  u.norm = u.period % 2 == 0 ? 1 : -1;
  Integer n = pell_norm(u);
  if (n != u.norm) raise(errc::internal, "continued fraction unit has wrong norm");
  // eps = (G + B sqrt d)/Q0 with both terms positive
  Integer G = u.half ? Integer(2 * u.x + u.y) : u.x;
  double lg = log_of(G), lb = log_of(u.y) + 0.5 * log_of(d);
  double hi = std::max(lg, lb);
  u.regulator = hi + std::log(std::exp(lg - hi) + std::exp(lb - hi)) - std::log(u.half ? 2.0 : 1.0);
  return u;
}

std::shared_mutex unit_mutex;
std::map<Integer, std::unique_ptr<PellUnit>> unit_memo;

std::shared_mutex class_mutex;
std::map<i64, std::unique_ptr<WideClassData>> class_memo;

}  // namespace

Integer pell_norm(const PellUnit& u) {
  if (u.half) return u.x * u.x + u.x * u.y - u.y * u.y * ((u.d - 1) / 4);
  return u.x * u.x - u.d * u.y * u.y;
}

const PellUnit& fundamental_unit(const Integer& d) {
  {
    std::shared_lock lock(unit_mutex);
    auto it = unit_memo.find(d);
    if (it != unit_memo.end()) return *it->second;
  }
  auto u = std::make_unique<PellUnit>(compute_unit(d));
  std::unique_lock lock(unit_mutex);
  auto [it, inserted] = unit_memo.emplace(d, std::move(u));
  return *it->second;
}

u64 reduce_unit(const PellUnit& u, u64 q, u64 root) {
  u64 w = root % q;
  if (u.half) w = mulmod((1 + w) % q, (q + 1) / 2, q);
  return (mod_u64(u.x, q) + mulmod(mod_u64(u.y, q), w, q)) % q;
}

namespace {

void check_pair(u64 p, u64 q) {
  if (p % 4 != 1 || q % 4 != 1 || !is_prime(p) || !is_prime(q) || p == q)
    raise(errc::bad_residue_class, "need distinct primes = 1 mod 4");
  if (jacobi(static_cast<i64>(p), q) != Sign::plus) raise(errc::not_split, "p is not a square mod q");
}

Sign symbol_at(const PellUnit& u, u64 q, u64 root) {
  return jacobi(static_cast<i64>(reduce_unit(u, q, root)), q);
}

}  // namespace

Sign eps_symbol(u64 p, u64 q) {
  check_pair(p, q);
  const auto& u = fundamental_unit(Integer(static_cast<unsigned long>(p)));
  return symbol_at(u, q, sqrt_mod(p % q, q));
}

std::pair<Sign, Sign> eps_symbol_both_roots(u64 p, u64 q) {
  check_pair(p, q);
  const auto& u = fundamental_unit(Integer(static_cast<unsigned long>(p)));
  u64 r = sqrt_mod(p % q, q);
  return {symbol_at(u, q, r), symbol_at(u, q, q - r)};
}

i64 field_discriminant(i64 d) {
  if (d <= 1 || !is_squarefree(Integer(static_cast<long>(d)))) raise(errc::not_squarefree, "need squarefree d > 1");
  return d % 4 == 1 ? d : 4 * d;
}

const WideClassData& wide_class_data(i64 D) {
  {
    std::shared_lock lock(class_mutex);
    auto it = class_memo.find(D);
    if (it != class_memo.end()) return *it->second;
  }
  require_fundamental(D);
  auto G = narrow_class_group(D);
  const auto& u = fundamental_unit(Integer(static_cast<long>(D % 4 == 0 ? D / 4 : D)));
  if ((u.norm == -1) != G.negative_norm_unit) raise(errc::internal, "unit norm disagrees with form cycles");
  auto w = std::make_unique<WideClassData>();
  w->D = D;
  w->h_plus = G.h_plus;
  w->h = u.norm == -1 ? G.h_plus : G.h_plus / 2;
  if (w->h != G.h) raise(errc::internal, "wide class number mismatch");
  w->unit_norm = u.norm;
  w->invariant_factors = G.wide_invariant_factors;
  w->narrow_invariant_factors = G.invariant_factors;
  std::unique_lock lock(class_mutex);
  auto [it, inserted] = class_memo.emplace(D, std::move(w));
  return *it->second;
}

}  // namespace scholz
