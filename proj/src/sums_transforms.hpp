#pragma once

// Partial sums, binomial sums, and the binomial transform
// b_{k,n} = sum_i C(n,i) M_i^(k) with its three characterizations
// (definitional sum, order-2 recurrence, closed form (m_k^n - 2^n)/(2^k-1)).
// Left sides sum recurrence-generated terms; right sides are closed forms.

#include <cstdint>
#include <vector>

#include "core_sequences.hpp"
#include "identities.hpp"

namespace homn {

struct BinomialTransformSeq {
  std::uint32_t k;
  std::vector<Natural> terms;
};

// Binomial coefficients C(n, 0..n) by Pascal-row iteration (exact adds,
// no factorial division).
std::vector<Natural> pascal_row(std::uint64_t n);

// sum_{i=1..n} M_i^(k) = (2^k M_n^(k) - n)/M_k, n >= 1.
IdentityReport partial_sum(Order k, Index n);

// sum_{i=1..n} M_{2i}^(k) = (2^{2k} M_n^(2k) - n)/M_k, n >= 1.
IdentityReport partial_sum_even(Order k, Index n);

// sum_{i=0..n} M_{2i+1}^(k) = (2^k M_{n+1}^(2k) - n - 1)/M_k.
IdentityReport partial_sum_odd(Order k, Index n);

// sum_{n=0..s-1} C(s-1,n) M_n^(k) = ((1+2^k)^{s-1} - 2^{s-1})/(2^k - 1),
// s >= 1. Equals bt_definition(k, s-1).
IdentityReport binomial_sum(Order k, std::uint64_t s);

// sum_{n=0..s-1} (-1)^n C(s-1,n) M_n^(k) = (-1)^{s-1} M_k^{s-2}, s >= 2
// (the rhs exponent is negative at s = 1, so that case is rejected).
IdentityReport alternating_binomial_sum(Order k, std::uint64_t s);

// b_{k,n} by the defining binomial-weighted sum.
Natural bt_definition(Order k, Index n);

// First `count` terms via b_{k,n+1} = (2+m_k) b_{k,n} - 2 m_k b_{k,n-1}.
BinomialTransformSeq bt_recurrence(Order k, std::size_t count);

// b_{k,n} = (m_k^n - 2^n)/(2^k - 1), exact division.
Natural bt_closed(Order k, Index n);

// Shift lemma b_{k,n+1} = sum_i C(n,i)(M_{i+1}^(k) + M_i^(k)) and its
// difference form b_{k,n+1} - b_{k,n} = sum_i C(n,i) M_{i+1}^(k), both
// checked against definitional values.
IdentityReport bt_shift_identity(Order k, Index n);

}  // namespace homn
