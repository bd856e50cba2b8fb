#pragma once

// Exact power-series expansion of the ordinary generating functions
//   G(x,k)  = x / (1 - (2^k+1) x + 2^k x^2)     (higher-order Mersenne)
//   b_k(x)  = x / (1 - (2+m_k) x + 2 m_k x^2)   (binomial transform)
// and termwise verification of the exponential generating functions
//   E(x,k)  = (e^{2^k x} - e^x) / (2^k - 1)
//   E_k(x)  = (e^{m_k x} - e^{2x}) / (2^k - 1).
// No floating point: series coefficients are exact rationals.

#include <cstdint>
#include <vector>

#include "core_sequences.hpp"
#include "identities.hpp"
#include "rational.hpp"

namespace homn {

// p(x)/q(x) as dense ascending coefficient lists; q(0) != 0 so the Taylor
// expansion at 0 is well-defined.
struct RationalFunction {
  std::vector<Integer> numerator;
  std::vector<Integer> denominator;
};

using SeriesCoeffs = std::vector<Rational>;

// First `count` Taylor coefficients of f at 0, by the convolution
// recurrence c_n = (p_n - sum_{j>=1} q_j c_{n-j}) / q_0.
SeriesCoeffs expand_rational(const RationalFunction& f, std::size_t count);

// Generating function of {M_n^(k)}: numerator [0,1],
// denominator [1, -(2^k+1), 2^k].
RationalFunction hom_ogf(Order k);

// Generating function of {b_{k,n}}: numerator [0,1],
// denominator [1, -(2+m_k), 2 m_k].
RationalFunction bt_ogf(Order k);

// Termwise EGF check: M_n^(k)/n! = ((2^k)^n - 1)/((2^k-1) n!) for n < count.
IdentityReport egf_check(Order k, std::size_t count);

// Termwise EGF check: b_{k,n}/n! = (m_k^n - 2^n)/((2^k-1) n!) for n < count.
IdentityReport bt_egf_check(Order k, std::size_t count);

}  // namespace homn
