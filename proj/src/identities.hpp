#pragma once

// Mechanical checks of the quadratic and inter-sequence identities for
// higher-order Mersenne numbers. Each check computes the two sides by
// disjoint code paths -- left sides from recurrence-generated terms,
// right sides from closed-form powers -- so a single bug cannot validate
// itself. Checks return reports instead of booleans so counterexamples
// can be printed verbatim.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "core_sequences.hpp"
#include "rational.hpp"

namespace homn {

struct IdentityReport {
  std::string identity_name;
  std::map<std::string, Integer> parameters;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

std::string to_string(const IdentityReport& report);

// Assembles a report; holds is the exact rational equality of the sides.
IdentityReport make_identity_report(std::string name,
                                    std::map<std::string, Integer> parameters,
                                    Rational lhs, Rational rhs);

// M_{k(n+1)+alpha} = 2^k M_{kn+alpha} + M_k, for 0 <= alpha <= k-1.
IdentityReport check_index_shift(Order k, Index n, Index alpha);

// M_{n+m} = 2^n M_m + M_n.
IdentityReport check_index_addition(Index n, Index m);

// M_{2k} = M_k m_k;  M_{3k} = M_k (2^k m_k + 1);  M_{4k} = M_k m_k m_{2k}.
std::vector<IdentityReport> check_multiples(Order k);

// M_{n-r} M_{n+r} - (M_n)^2 = -(2^k)^{n-r} (M_r)^2, for n >= r.
IdentityReport catalan(Order k, Index n, Index r);

// M_{n-1} M_{n+1} - (M_n)^2 = -(2^k)^{n-1}, for n >= 1.
IdentityReport cassini(Order k, Index n);

// M_{n+1} M_m - M_n M_{m+1} = (2^k)^n M_{m-n}, for m > n.
IdentityReport docagne(Order k, Index m, Index n);

// Vajda-type identity. A brute-force oracle (committed under
// tests/fixtures/vajda_oracle.txt) shows that the form with rhs
// -(2^k)^n ((2^k)^r + 1)/(2^k - 1) M_m fails for every m > 0, while
//   M_{n+m} M_{n+r} - M_n M_{n+m+r} = (2^k)^n ((2^k)^r - 1)/(2^k - 1) M_m
//                                   = (2^k)^n M_r M_m
// holds identically. This function verifies the latter convention.
IdentityReport vajda(Order k, Index n, Index m, Index r);

// Statement of the convention vajda() verifies, for report headers.
std::string_view vajda_convention();

// M_{p-1} M_n + M_p M_{n+1}
//   = [(2^k)^{p+n-1} m_{2k} - ((2^k)^{p-1} + (2^k)^n) m_k + 2] / (2^k-1)^2,
// for p >= 1. The rhs is evaluated as an exact rational and must be integral.
IdentityReport honsberger(Order k, Index p, Index n);

// Parity-keyed relations between M_n^(k), J_n^(k) and j_n^(k), plus the
// product relation M_n^(2k) = J_n^(k) j_n^(k). J and j are evaluated as
// exact rationals (j_n^(k) is not always an integer).
std::vector<IdentityReport> jacobsthal_relation(Order k, Index n);

// (M_n)^2 = (M_{2n} - 2 M_n)/(2^k - 1), plus the parity cases for
// M_n + J_n and M_n * J_n.
std::vector<IdentityReport> square_sum_product_relations(Order k, Index n);

// M_{n+1}^(k)/M_n^(k) - 2^k, exactly (2^k - 1)/((2^k)^n - 1); n >= 1.
Rational limiting_ratio_gap(Order k, Index n);

}  // namespace homn
