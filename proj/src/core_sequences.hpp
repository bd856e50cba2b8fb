#pragma once

// Mersenne, Mersenne-Lucas, higher-order Mersenne and higher-order
// Jacobsthal / Jacobsthal-Lucas numbers, each computable by independent
// routes so the routes can be checked against each other:
//
//   M_n        = 2^n - 1                     m_n = 2^n + 1
//   M_n^(k)    = M_{kn} / M_k  =  ((2^k)^n - 1)/(2^k - 1)
//              = (2^k + 1) M_{n-1}^(k) - 2^k M_{n-2}^(k),  M_0 = 0, M_1 = 1
//   J_n^(k)    = ((2^k)^n - (-1)^(kn)) / (2^k - (-1)^k)
//   j_n^(k)    = ((2^k)^n + (-1)^(kn)) / (2^k + (-1)^k)
//
// Everything is exact; values grow like 2^(kn).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "integer.hpp"

namespace homn {

using Index = std::uint64_t;

// The family parameter k >= 1 selecting M_n^(k).
struct Order {
  std::uint32_t k;

  explicit Order(std::uint32_t k_) : k(k_) {
    if (k == 0) throw std::domain_error("Order: k must be >= 1");
  }
};

// k*n as a checked 64-bit exponent (values of M_n^(k) need kn bits).
std::uint64_t checked_kn(Order k, Index n);

// The order 2k, overflow-checked; several identities pair M^(k) with M^(2k).
Order doubled(Order k);

Natural mersenne(Index n);        // 2^n - 1
Natural mersenne_lucas(Index n);  // 2^n + 1

// n-th higher-order Mersenne number, iterating the order-2 recurrence.
Natural hom_recurrence(Order k, Index n);

// Same value via the closed form ((2^k)^n - 1)/(2^k - 1).
Natural hom_closed(Order k, Index n);

// Same value as the exact quotient M_{kn} / M_k.
Natural hom_quotient(Order k, Index n);

// First `count` terms M_0^(k)..M_{count-1}^(k), single recurrence pass.
std::vector<Natural> hom_stream(Order k, std::size_t count);

// Higher-order Jacobsthal number; the division is always exact.
Natural hoj(Order k, Index n);

// Higher-order Jacobsthal-Lucas number. The defining quotient is integral
// only for k = 1 or odd n; other inputs throw internal_error.
Natural hojl(Order k, Index n);

// Geometric-sum cofactor X(k,n) = (2^k)^{n-1} + ... + 2^k + 1, n >= 1;
// satisfies mersenne(k) * cofactor(k,n) = mersenne(k*n).
Natural cofactor(Order k, Index n);

}  // namespace homn
