#pragma once

// Matrix generator for logarithmic-time term computation,
//   U = [0, 1; -2^k, 2^k+1],  U^n = [-2^k M_{n-1}, M_n; -2^k M_n, M_{n+1}],
// and the tridiagonal continuant representation det(V_n) = M_{n+1}^(k).
// V_n is never materialized: its determinant chain follows the three-term
// continuant recurrence (a dense-elimination oracle lives in the tests).

#include <cstdint>
#include <vector>

#include "core_sequences.hpp"
#include "identities.hpp"

namespace homn {

struct Matrix2 {
  Integer a11, a12, a21, a22;

  static Matrix2 identity() { return {1, 0, 0, 1}; }

  Integer det() const { return a11 * a22 - a12 * a21; }
  Integer trace() const { return a11 + a22; }

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }

  friend bool operator==(const Matrix2& a, const Matrix2& b) = default;
};

// The generator U with det U = 2^k.
Matrix2 mat_u(Order k);

// m^n by binary exponentiation, m^0 = identity. When mul_count is given it
// receives the number of 2x2 multiplications performed (<= 2 log2 n + 2).
Matrix2 mat_power(const Matrix2& m, Index n, std::uint64_t* mul_count = nullptr);

// M_n^(k) read from entry (1,2) of U^n; n >= 1 (U^0 is the identity and
// carries no sequence values).
Natural hom_via_matrix(Order k, Index n);

// det(U^n) = 2^{kn}, trace(U^n) = 1 + 2^{kn}, and the full entry pattern
// against recurrence-generated terms; n >= 1.
IdentityReport u_power_checks(Order k, Index n);

// The tridiagonal family: dimension-n matrix with first row
// (M_2^(k), M_1^(k)), sub-diagonal 2^k, diagonal 2^k+1, super-diagonal 1.
struct TridiagonalSpec {
  Order k;
  Index n;  // matrix dimension, >= 1
};

// det(V_n) = M_{n+1}^(k) via the continuant recurrence
// det(V_i) = (2^k+1) det(V_{i-1}) - 2^k det(V_{i-2}).
Natural tridiag_det(const TridiagonalSpec& spec);

// The whole chain det(V_1) .. det(V_n) (the leading principal minors).
std::vector<Natural> tridiag_det_chain(const TridiagonalSpec& spec);

// The diagonal sum M_2^(k) + (n-1)(2^k+1), which equals n (2^k+1).
Natural tridiag_trace(const TridiagonalSpec& spec);

// det(V_n) = M_{n+1}^(k) (eigenvalue product), trace(V_n) = n (2^k+1)
// (eigenvalue sum), and positivity of every leading principal minor.
IdentityReport tridiag_spectral_checks(const TridiagonalSpec& spec);

}  // namespace homn
