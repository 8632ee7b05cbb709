#include "scholz/lattice.hpp"

#include <cmath>
#include <utility>

#include "scholz/error.hpp"

namespace scholz {

Integer AbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

namespace {

struct SnfState {
  IntMatrix& A;
  std::size_t rows, cols;
  bool track;
  IntMatrix V, Vi;

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : A) std::swap(row[i], row[j]);
    if (track) {
      for (auto& row : V) std::swap(row[i], row[j]);
      std::swap(Vi[i], Vi[j]);
    }
  }
  // col j -= q * col t
  void col_sub(std::size_t j, std::size_t t, const Integer& q) {
    for (auto& row : A) row[j] -= q * row[t];
    if (track) {
      for (auto& row : V) row[j] -= q * row[t];
      for (std::size_t k = 0; k < cols; ++k) Vi[t][k] += q * Vi[j][k];
    }
  }
  void row_sub(std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t k = 0; k < cols; ++k) A[j][k] -= q * A[t][k];
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix M, bool want_transform) {
  const std::size_t r = M.size();
  const std::size_t n = r ? M[0].size() : 0;
  SnfState st{M, r, n, want_transform, {}, {}};
  if (want_transform) {
    st.V.assign(n, std::vector<Integer>(n, 0));
    st.Vi.assign(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) st.V[i][i] = st.Vi[i][i] = 1;
  }
  SmithForm out;
  std::size_t t = 0;
  for (; t < r && t < n; ++t) {
    while (true) {
      // pivot: smallest nonzero |entry| in the trailing block
      std::size_t pi = r, pj = n;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (sgn(M[i][j]) != 0 && (pi == r || mpz_cmpabs(M[i][j].get_mpz_t(), M[pi][pj].get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == r) goto done;
      std::swap(M[t], M[pi]);
      st.swap_cols(t, pj);
      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (sgn(M[i][t]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), M[i][t].get_mpz_t(), M[t][t].get_mpz_t());
        st.row_sub(i, t, q);
        if (sgn(M[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(M[t][j]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), M[t][j].get_mpz_t(), M[t][t].get_mpz_t());
        st.col_sub(j, t, q);
        if (sgn(M[t][j]) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(M[i][j].get_mpz_t(), M[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == r) break;
      for (std::size_t k = 0; k < n; ++k) M[t][k] += M[bad][k];
    }
    if (sgn(M[t][t]) < 0) M[t][t] = -M[t][t];
    out.diagonal.push_back(M[t][t]);
  }
done:
  out.rank = out.diagonal.size();
  out.diagonal.resize(n, 0);
  if (want_transform) {
    out.V = std::move(st.V);
    out.V_inv = std::move(st.Vi);
  }
  return out;
}

AbelianGroup quotient_group(const IntMatrix& M, std::size_t columns) {
  AbelianGroup g;
  if (M.empty()) {
    g.finite = columns == 0;
    return g;
  }
  auto s = smith_normal_form(M, false);
  g.finite = s.rank == columns;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.diagonal[i] > 1) g.invariant_factors.push_back(s.diagonal[i]);
  return g;
}

namespace {

using Row = std::vector<i128>;
constexpr i128 kLimit = i128(1) << 100;

long double dot(const std::vector<long double>& x, const std::vector<long double>& y) {
  long double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool lll128(std::vector<Row>& b) {
  const std::size_t m = b.size();
  if (m == 0) return true;
  const std::size_t n = b[0].size();
  std::vector<std::vector<long double>> bs(m, std::vector<long double>(n));
  std::vector<std::vector<long double>> mu(m, std::vector<long double>(m, 0));
  std::vector<long double> B(m);
  auto as_ld = [&](std::size_t i) {
    std::vector<long double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<long double>(b[i][k]);
    return v;
  };
  auto gso_row = [&](std::size_t i) {
    auto v = as_ld(i);
    bs[i] = v;
    for (std::size_t j = 0; j < i; ++j) {
      mu[i][j] = B[j] > 0 ? dot(v, bs[j]) / B[j] : 0;
      for (std::size_t k = 0; k < n; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
    }
    B[i] = dot(bs[i], bs[i]);
  };
  for (std::size_t i = 0; i < m; ++i) gso_row(i);
  std::size_t k = 1;
  long iterations = 0;
  while (k < m) {
    if (++iterations > 5000000) return false;
    for (std::size_t jj = k; jj-- > 0;) {
      long double q = std::nearbyint(mu[k][jj]);
      if (q == 0) continue;
      if (std::fabs(q) > 1e30L) return false;
      i128 qi = static_cast<i128>(q);
      for (std::size_t t = 0; t < n; ++t) {
        b[k][t] -= qi * b[jj][t];
        if (b[k][t] > kLimit || b[k][t] < -kLimit) return false;
      }
      gso_row(k);
    }
    if (B[k] < (0.99L - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gso_row(k - 1);
      gso_row(k);
      for (std::size_t i = k + 1; i < m; ++i) gso_row(i);
      k = k > 1 ? k - 1 : 1;
    } else {
      ++k;
    }
  }
  return true;
}

}  // namespace

bool lll_reduce(std::vector<std::vector<i64>>& basis) {
  std::vector<Row> b;
  for (const auto& v : basis) b.emplace_back(v.begin(), v.end());
  if (!lll128(b)) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = 0; k < b[i].size(); ++k) {
      if (b[i][k] > INT64_MAX || b[i][k] < INT64_MIN) return false;
      basis[i][k] = static_cast<i64>(b[i][k]);
    }
  return true;
}

std::vector<std::vector<i64>> integer_kernel(const std::vector<std::vector<i64>>& M) {
  const std::size_t r = M.size();
  if (r == 0) return {};
  const std::size_t n = M[0].size();
  i128 weight = i128(1) << 24;
  std::vector<Row> b(r, Row(n + r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < n; ++k) b[i][k] = weight * M[i][k];
    b[i][n + i] = 1;
  }
  if (!lll128(b)) raise(errc::internal, "integer_kernel: LLL overflow");
  std::vector<std::vector<i64>> out;
  for (const auto& row : b) {
    bool zero = true;
    for (std::size_t k = 0; k < n; ++k) zero = zero && row[k] == 0;
    if (!zero) continue;
    std::vector<i64> v(r);
    for (std::size_t i = 0; i < r; ++i) {
      if (row[n + i] > INT64_MAX || row[n + i] < INT64_MIN)
        raise(errc::internal, "integer_kernel: coefficient overflow");
      v[i] = static_cast<i64>(row[n + i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace scholz
