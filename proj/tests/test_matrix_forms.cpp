#include "matrix_forms.hpp"

#include <vector>

#include "doctest.h"

using namespace homn;

namespace {

// Dense fraction-free (Bareiss) determinant; the transcription oracle for
// the continuant recurrence, exercised for n <= 8.
Integer dense_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  bool negate = false;
  Integer prev = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    if (a[col][col].is_zero()) {
      std::size_t pivot = col;
      while (pivot < n && a[pivot][col].is_zero()) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[col], a[pivot]);
      negate = !negate;
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      for (std::size_t c = col + 1; c < n; ++c) {
        a[row][c] =
            (a[col][col] * a[row][c] - a[row][col] * a[col][c]).exact_div(prev);
      }
      a[row][col] = 0;
    }
    prev = a[col][col];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// V_n materialized: first row (M_2^(k), M_1^(k)), sub-diagonal 2^k,
// diagonal 2^k+1, super-diagonal 1.
std::vector<std::vector<Integer>> dense_tridiag(Order k, Index n) {
  const Integer q = Integer::pow2(k.k);
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n, Integer(0)));
  a[0][0] = hom_closed(k, 2).value();
  if (n > 1) a[0][1] = hom_closed(k, 1).value();
  for (std::size_t i = 1; i < n; ++i) {
    a[i][i - 1] = q;
    a[i][i] = q + 1;
    if (i + 1 < n) a[i][i + 1] = 1;
  }
  return a;
}

}  // namespace

TEST_CASE("generator matrix U") {
  const Matrix2 u1 = mat_u(Order(1));
  CHECK(u1 == Matrix2{0, 1, -2, 3});
  CHECK(u1.det() == Integer(2));
  const Matrix2 u2 = mat_u(Order(2));
  CHECK(u2 == Matrix2{0, 1, -4, 5});
  CHECK(u2.det() == Integer(4));
  CHECK(mat_u(Order(3)).det() == Integer(8));
}

TEST_CASE("matrix powers") {
  const Matrix2 u = mat_u(Order(1));
  CHECK(mat_power(u, 0) == Matrix2::identity());
  CHECK(mat_power(u, 2) == Matrix2{-2, 3, -6, 7});
  const Matrix2 p = mat_power(mat_u(Order(2)), 3);
  CHECK(p == Matrix2{-20, 21, -84, 85});
}

TEST_CASE("power law m^(a+b) = m^a m^b") {
  for (std::uint32_t k = 1; k <= 4; ++k) {
    const Matrix2 u = mat_u(Order(k));
    for (Index a = 0; a <= 16; ++a) {
      for (Index b = 0; b <= 16; ++b) {
        CHECK(mat_power(u, a + b) == mat_power(u, a) * mat_power(u, b));
      }
    }
  }
}

TEST_CASE("hom_via_matrix") {
  CHECK(hom_via_matrix(Order(3), 5) == Natural(4681));
  CHECK(hom_via_matrix(Order(1), 1) == Natural(1));
  CHECK(hom_via_matrix(Order(4), 3) == Natural(273));
  CHECK_THROWS_AS(hom_via_matrix(Order(2), 0), std::domain_error);
  for (std::uint32_t k = 1; k <= 8; ++k) {
    for (Index n = 1; n <= 64; ++n) {
      CHECK(hom_via_matrix(Order(k), n) == hom_closed(Order(k), n));
    }
  }
}

TEST_CASE("multiplication counter stays logarithmic") {
  std::uint64_t muls = 0;
  mat_power(mat_u(Order(1)), 1, &muls);
  CHECK(muls == 1);
  for (Index n = 1; n <= 4096; n = n * 3 + 1) {
    std::uint64_t count = 0;
    mat_power(mat_u(Order(2)), n, &count);
    std::uint64_t bits = 0;
    while ((Index{1} << bits) < n) ++bits;  // ceil(log2 n)
    CHECK(count <= 2 * bits + 2);
  }
}

TEST_CASE("u_power_checks: determinant, trace, entry pattern") {
  auto rep = u_power_checks(Order(1), 2);
  CHECK(rep.holds);
  CHECK(rep.lhs == Rational(4));
  rep = u_power_checks(Order(2), 1);
  CHECK(rep.holds);
  CHECK(rep.lhs == Rational(4));
  rep = u_power_checks(Order(3), 2);
  CHECK(rep.holds);
  CHECK(rep.lhs == Rational(64));
  CHECK_THROWS_AS(u_power_checks(Order(3), 0), std::domain_error);
  for (std::uint32_t k = 1; k <= 8; ++k) {
    for (Index n = 1; n <= 32; ++n) {
      CHECK(u_power_checks(Order(k), n).holds);
    }
  }
}

TEST_CASE("tridiagonal determinant chain") {
  CHECK(tridiag_det({Order(2), 1}) == Natural(5));
  CHECK(tridiag_det({Order(3), 3}) == Natural(585));
  CHECK(tridiag_det({Order(1), 4}) == Natural(31));
  CHECK_THROWS_AS(tridiag_det({Order(1), 0}), std::domain_error);

  const auto chain = tridiag_det_chain({Order(2), 3});
  const std::vector<Natural> want{5, 21, 85};
  CHECK(chain == want);

  for (std::uint32_t k = 1; k <= 8; ++k) {
    for (Index n = 1; n <= 64; ++n) {
      CHECK(tridiag_det({Order(k), n}) == hom_closed(Order(k), n + 1));
    }
  }
}

TEST_CASE("continuant agrees with the dense elimination oracle") {
  for (std::uint32_t k = 1; k <= 8; ++k) {
    for (Index n = 1; n <= 8; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(dense_det(dense_tridiag(Order(k), n)) ==
            tridiag_det({Order(k), n}).value());
    }
  }
}

TEST_CASE("tridiagonal spectral consequences") {
  auto rep = tridiag_spectral_checks({Order(1), 3});
  CHECK(rep.holds);
  CHECK(rep.lhs == Rational(15));  // det = M_4^(1), minors 3,7,15
  CHECK(tridiag_trace({Order(1), 3}) == Natural(9));
  rep = tridiag_spectral_checks({Order(2), 2});
  CHECK(rep.holds);
  CHECK(rep.lhs == Rational(21));
  CHECK(tridiag_trace({Order(2), 2}) == Natural(10));
  rep = tridiag_spectral_checks({Order(1), 1});
  CHECK(rep.holds);
  CHECK(rep.lhs == Rational(3));
  CHECK(tridiag_trace({Order(1), 1}) == Natural(3));
  CHECK_THROWS_AS(tridiag_spectral_checks({Order(1), 0}), std::domain_error);

  for (std::uint32_t k = 1; k <= 8; ++k) {
    for (Index n = 1; n <= 64; ++n) {
      CHECK(tridiag_spectral_checks({Order(k), n}).holds);
    }
  }
}
