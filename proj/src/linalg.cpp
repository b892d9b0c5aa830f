#include "evreg/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "evreg/error.hpp"

namespace evreg {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::size_t modular_rank(const IntegerMatrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      m[i][j] = mpz_fdiv_ui(rows[i][j].get_mpz_t(), kPrime);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const std::uint64_t inv = powmod(m[rank][col], kPrime - 2);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const std::uint64_t f = mulmod(m[i][col], inv);
      for (std::size_t j = col; j < ncols; ++j) {
        const std::uint64_t sub = mulmod(f, m[rank][j]);
        m[i][j] = (m[i][j] + kPrime - sub) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t bareiss_rank(IntegerMatrix m) {
  if (m.empty()) return 0;
  const std::size_t ncols = m[0].size();
  Integer prev = 1;
  std::size_t rank = 0;
  Integer t;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const Integer& p = m[rank][col];
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        t = p * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t integer_rank(IntegerMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t full = std::min(rows.size(), rows[0].size());
  if (modular_rank(rows) == full) return full;
  return bareiss_rank(std::move(rows));
}

std::size_t exact_rank(std::vector<std::vector<FieldElement>> rows) {
  if (rows.empty()) return 0;
  const FieldPtr field = rows[0][0].field();
  const std::size_t ncols = rows[0].size();
  if (field->is_rational()) {
    IntegerMatrix ints(rows.size(), std::vector<Integer>(ncols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Integer l = 1;
      for (const auto& e : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational_part().get_den_mpz_t());
      for (std::size_t j = 0; j < ncols; ++j) {
        const Rational& r = rows[i][j].rational_part();
        ints[i][j] = r.get_num() * (l / r.get_den());
      }
    }
    return integer_rank(std::move(ints));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const FieldElement inv = rows[rank][col].inverse();
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const FieldElement f = rows[i][col] * inv;
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

MPoly determinant(std::vector<std::vector<MPoly>> m, const FieldPtr& field, int nvars) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(field, nvars, 1);
  MPoly prev = MPoly::constant(field, nvars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return MPoly(field, nvars);
    if (piv != k) {
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? t.scaled(prev.leading_coefficient().inverse())
                                     : exact_divide(t, prev);
      }
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

IntegerMatrix integer_left_kernel(const IntegerMatrix& rows) {
  if (rows.empty()) return {};
  const std::size_t r = rows.size();
  const std::size_t c = rows[0].size();
  IntegerMatrix m = rows;
  IntegerMatrix u(r, std::vector<Integer>(r, 0));
  for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;

  auto combine = [](std::vector<Integer>& a, std::vector<Integer>& b, const Integer& s, const Integer& t,
                    const Integer& x, const Integer& y) {
    // (a, b) <- (s*a + t*b, x*a + y*b)
    for (std::size_t k = 0; k < a.size(); ++k) {
      Integer na = s * a[k] + t * b[k];
      Integer nb = x * a[k] + y * b[k];
      a[k] = std::move(na);
      b[k] = std::move(nb);
    }
  };

  std::size_t pr = 0;
  for (std::size_t col = 0; col < c && pr < r; ++col) {
    for (std::size_t i = pr + 1; i < r; ++i) {
      if (m[i][col] == 0) continue;
      const Integer a = m[pr][col];
      const Integer b = m[i][col];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer x = b / g;
      const Integer y = -(a / g);
      // Unimodular: s*y - t*x = -(s*a + t*b)/g = -1.
      combine(m[pr], m[i], s, t, x, y);
      combine(u[pr], u[i], s, t, x, y);
    }
    if (m[pr][col] != 0) ++pr;
  }
  IntegerMatrix kernel;
  for (std::size_t i = pr; i < r; ++i) kernel.push_back(u[i]);
  return kernel;
}

}  // namespace evreg
