#include "core_sequences.hpp"

namespace homn {

std::uint64_t checked_kn(Order k, Index n) {
  std::uint64_t kn = 0;
  if (__builtin_mul_overflow(static_cast<std::uint64_t>(k.k), n, &kn)) {
    throw std::overflow_error("k*n exceeds 64 bits");
  }
  return kn;
}

Order doubled(Order k) {
  if (k.k > UINT32_MAX / 2) throw std::overflow_error("2k exceeds 32 bits");
  return Order(2 * k.k);
}

Natural mersenne(Index n) { return Natural(Integer::pow2(n) - 1); }

Natural mersenne_lucas(Index n) { return Natural(Integer::pow2(n) + 1); }

Natural hom_recurrence(Order k, Index n) {
  const Integer q = Integer::pow2(k.k);
  const Integer p = q + 1;
  Integer prev = 0;
  Integer cur = 1;
  if (n == 0) return Natural(prev);
  for (Index i = 1; i < n; ++i) {
    Integer next = p * cur - q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Natural(cur);
}

Natural hom_closed(Order k, Index n) {
  const Integer num = Integer::pow2(checked_kn(k, n)) - 1;
  const Integer den = Integer::pow2(k.k) - 1;
  return Natural(num.exact_div(den));
}

Natural hom_quotient(Order k, Index n) {
  return mersenne(checked_kn(k, n)).exact_div(mersenne(k.k));
}

std::vector<Natural> hom_stream(Order k, std::size_t count) {
  std::vector<Natural> out;
  out.reserve(count);
  const Integer q = Integer::pow2(k.k);
  const Integer p = q + 1;
  Integer prev = 0;
  Integer cur = 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(prev);
    Integer next = p * cur - q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

namespace {

// (-1)^e
int unit_sign(std::uint64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Natural hoj(Order k, Index n) {
  const int s = unit_sign(k.k);
  const int sn = unit_sign(checked_kn(k, n));
  const Integer num = Integer::pow2(checked_kn(k, n)) - sn;
  const Integer den = Integer::pow2(k.k) - s;
  return Natural(num.exact_div(den));
}

Natural hojl(Order k, Index n) {
  const int s = unit_sign(k.k);
  const int sn = unit_sign(checked_kn(k, n));
  const Integer num = Integer::pow2(checked_kn(k, n)) + sn;
  const Integer den = Integer::pow2(k.k) + s;
  return Natural(num.exact_div(den));
}

Natural cofactor(Order k, Index n) {
  if (n == 0) throw std::domain_error("cofactor: n must be >= 1");
  const Integer q = Integer::pow2(k.k);
  Integer acc = 0;
  Integer power = 1;
  for (Index j = 0; j < n; ++j) {
    acc += power;
    power *= q;
  }
  return Natural(std::move(acc));
}

}  // namespace homn
