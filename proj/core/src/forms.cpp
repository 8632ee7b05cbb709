#include "scholz/forms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "scholz/error.hpp"
#include "scholz/lattice.hpp"

namespace scholz {

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Returns g = gcd(a, b) >= 0 with x a + y b = g.
i128 ext_gcd(i128 a, i128 b, i128& x, i128& y) {
  i128 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    i128 q = a / b;
    i128 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
  x = x0;
  y = y0;
  return a;
}

i128 pos_mod(i128 a, i128 m) {
  m = abs128(m);
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

i64 narrow64(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) raise(errc::internal, "form coefficient overflow");
  return static_cast<i64>(v);
}

}  // namespace

IndefiniteForms::IndefiniteForms(i64 D) : D_(D) {
  if (D <= 1) raise(errc::not_fundamental, "indefinite forms need D > 1");
  s_ = static_cast<i64>(isqrt(static_cast<u64>(D)));
  if (s_ * s_ == D) raise(errc::not_fundamental, "square discriminant");
}

bool IndefiniteForms::is_reduced(const Form& f) const {
  i64 A = f.a < 0 ? -f.a : f.a;
  return f.b >= 1 && f.b <= s_ && 2 * A + f.b >= s_ + 1 && 2 * A - f.b <= s_;
}

Form IndefiniteForms::rho(const Form& f) const {
  i128 c = f.c;
  i128 m = 2 * abs128(c);
  i128 b;
  if (abs128(c) <= s_) {
    // largest r < sqrt(D) with r = -b mod 2|c|
    b = s_ - pos_mod(s_ + i128(f.b), m);
  } else {
    b = pos_mod(-i128(f.b), m);
    if (b > abs128(c)) b -= m;
  }
  i128 num = b * b - D_;
  if (num % (4 * c) != 0) raise(errc::internal, "rho: non-integral form");
  return {narrow64(c), narrow64(b), narrow64(num / (4 * c))};
}

Form IndefiniteForms::reduce(Form f) const {
  if (scholz::discriminant(f) != D_) raise(errc::internal, "reduce: wrong discriminant");
  for (int guard = 0; !is_reduced(f); ++guard) {
    if (guard > 100000) raise(errc::internal, "reduce: no convergence");
    f = rho(f);
  }
  return f;
}

Form IndefiniteForms::compose(const Form& f, const Form& g) const {
  i128 a1 = f.a, b1 = f.b, a2 = g.a, b2 = g.b, c2 = g.c;
  i128 s = (b1 + b2) / 2;
  i128 n = b2 - s;
  i128 u, v;
  i128 d = ext_gcd(a2, a1, u, v);
  i128 y1 = u;
  i128 x2, y2;
  i128 d1 = ext_gcd(s, d, x2, y2);
  y2 = -y2;
  i128 v1 = a1 / d1;
  i128 v2 = a2 / d1;
  i128 r = pos_mod(y1 * y2 * n - x2 * c2, v1);
  i128 b3 = b2 + 2 * v2 * r;
  i128 a3 = v1 * v2;
  i128 num = b3 * b3 - D_;
  if (num % (4 * a3) != 0) raise(errc::internal, "compose: non-integral result");
  return {narrow64(a3), narrow64(b3), narrow64(num / (4 * a3))};
}

Form IndefiniteForms::principal() const {
  i64 b = D_ % 2;
  return reduce({1, b, (b * b - D_) / 4});
}

Form IndefiniteForms::negative_principal() const {
  i64 b = D_ % 2;
  return reduce({-1, b, (D_ - b * b) / 4});
}

std::vector<Form> IndefiniteForms::reduced_forms() const {
  std::vector<Form> out;
  for (i64 b = (D_ % 2 == 0 ? 2 : 1); b <= s_; b += 2) {
    i64 N = (D_ - b * b) / 4;
    for (i64 m = 1; m * m <= N; ++m) {
      if (N % m != 0) continue;
      for (i64 A : {m, N / m}) {
        if (2 * A + b < s_ + 1 || 2 * A - b > s_) continue;
        out.push_back({A, b, -N / A});
        out.push_back({-A, b, N / A});
        if (A * A == N) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Form> IndefiniteForms::cycle(const Form& reduced) const {
  std::vector<Form> out{reduced};
  for (Form f = rho(reduced); f != reduced; f = rho(f)) {
    out.push_back(f);
    if (out.size() > 10000000) raise(errc::internal, "cycle: runaway");
  }
  return out;
}

std::size_t FormClassGroup::class_index(const IndefiniteForms& arith, const Form& f) const {
  auto it = cycle_of.find(arith.reduce(f));
  if (it == cycle_of.end()) raise(errc::internal, "reduced form outside every cycle");
  return it->second;
}

bool is_fundamental_discriminant(i64 D) {
  if (D <= 1) return false;
  if (D % 4 == 1) return is_squarefree(Integer(static_cast<long>(D)));
  if (D % 4 != 0) return false;
  i64 m = D / 4;
  return (m % 4 == 2 || m % 4 == 3) && is_squarefree(Integer(static_cast<long>(m)));
}

void require_fundamental(i64 D) {
  if (!is_fundamental_discriminant(D))
    raise(errc::not_fundamental, std::to_string(D) + " is not a fundamental discriminant");
}

namespace {

// Orders cycle representatives by (|a|, b, sign a).
bool rep_less(const Form& x, const Form& y) {
  i64 ax = x.a < 0 ? -x.a : x.a, ay = y.a < 0 ? -y.a : y.a;
  if (ax != ay) return ax < ay;
  if (x.b != y.b) return x.b < y.b;
  return x.a < y.a;
}

std::vector<i64> to_small(const std::vector<Integer>& v) {
  std::vector<i64> out;
  for (const auto& d : v) out.push_back(d.get_si());
  return out;
}

}  // namespace

FormClassGroup narrow_class_group(i64 D) {
  require_fundamental(D);
  IndefiniteForms arith(D);
  FormClassGroup G;
  G.D = D;

  std::set<Form> seen;
  for (const Form& f : arith.reduced_forms()) {
    if (seen.count(f)) continue;
    auto cyc = arith.cycle(f);
    for (const auto& g : cyc) seen.insert(g);
    auto rep = std::min_element(cyc.begin(), cyc.end(), rep_less);
    std::rotate(cyc.begin(), rep, cyc.end());
    G.cycles.push_back(std::move(cyc));
  }
  std::sort(G.cycles.begin(), G.cycles.end(),
            [](const auto& x, const auto& y) { return rep_less(x.front(), y.front()); });
  for (std::size_t i = 0; i < G.cycles.size(); ++i) {
    G.representatives.push_back(G.cycles[i].front());
    for (const auto& f : G.cycles[i]) G.cycle_of[f] = i;
  }
  G.h_plus = static_cast<i64>(G.cycles.size());
  G.principal_index = G.class_index(arith, arith.principal());
  std::size_t neg = G.class_index(arith, arith.negative_principal());
  G.negative_norm_unit = neg == G.principal_index;

  // Greedy generators; every element of the generated subgroup gets an exponent vector.
  const std::size_t h = G.cycles.size();
  std::vector<std::vector<i64>> vec(h);
  std::vector<bool> in(h, false);
  vec[G.principal_index] = {};
  in[G.principal_index] = true;
  std::vector<std::size_t> members{G.principal_index};
  std::vector<std::size_t> gens;
  IntMatrix relations;
  auto mul = [&](std::size_t i, std::size_t j) {
    return G.class_index(arith, arith.compose(G.representatives[i], G.representatives[j]));
  };
  for (std::size_t cand = 0; cand < h && members.size() < h; ++cand) {
    if (in[cand]) continue;
    std::size_t k = gens.size();
    gens.push_back(cand);
    for (auto& v : vec) v.resize(k + 1, 0);
    // smallest n with cand^n in the current subgroup
    i64 n = 1;
    std::size_t pw = cand;
    while (!in[pw]) {
      pw = mul(pw, cand);
      ++n;
    }
    std::vector<Integer> rel(k + 1);
    for (std::size_t t = 0; t < k; ++t) rel[t] = -vec[pw][t];
    rel[k] = n;
    relations.push_back(rel);
    std::vector<std::size_t> added;
    for (std::size_t m : members) {
      std::size_t cur = m;
      for (i64 j = 1; j < n; ++j) {
        cur = mul(cur, cand);
        if (in[cur]) raise(errc::internal, "class group: inconsistent composition");
        in[cur] = true;
        vec[cur] = vec[m];
        vec[cur][k] = j;
        added.push_back(cur);
      }
    }
    members.insert(members.end(), added.begin(), added.end());
  }
  const std::size_t r = gens.size();
  for (auto& row : relations) row.resize(r, 0);
  auto narrow = quotient_group(relations, r);
  G.invariant_factors = to_small(narrow.invariant_factors);
  auto wide_rel = relations;
  std::vector<Integer> jrow(r);
  for (std::size_t t = 0; t < r; ++t) jrow[t] = vec[neg][t];
  wide_rel.push_back(jrow);
  auto wide = quotient_group(wide_rel, r);
  G.wide_invariant_factors = to_small(wide.invariant_factors);
  G.h = wide.order().get_si();
  return G;
}

}  // namespace scholz
