#include "sums_transforms.hpp"

#include <utility>

namespace homn {

std::vector<Natural> pascal_row(std::uint64_t n) {
  std::vector<Natural> row{Natural(1)};
  row.reserve(n + 1);
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::vector<Natural> next;
    next.reserve(i + 1);
    next.push_back(Natural(1));
    for (std::uint64_t j = 1; j < i; ++j) {
      next.push_back(row[j - 1] + row[j]);
    }
    next.push_back(Natural(1));
    row = std::move(next);
  }
  return row;
}

IdentityReport partial_sum(Order k, Index n) {
  if (n == 0) throw std::domain_error("partial_sum: requires n >= 1");
  const auto seq = hom_stream(k, n + 1);
  Integer lhs = 0;
  for (Index i = 1; i <= n; ++i) lhs += seq[i].value();
  const Integer num = Integer::pow2(k.k) * hom_closed(k, n).value() - Integer(n);
  const Rational rhs(num, mersenne(k.k).value());
  return make_identity_report("partial_sum", {{"k", k.k}, {"n", n}},
                              Rational(lhs), rhs);
}

IdentityReport partial_sum_even(Order k, Index n) {
  if (n == 0) throw std::domain_error("partial_sum_even: requires n >= 1");
  const auto seq = hom_stream(k, 2 * n + 1);
  Integer lhs = 0;
  for (Index i = 1; i <= n; ++i) lhs += seq[2 * i].value();
  const Order k2 = doubled(k);
  const Integer num = Integer::pow2(checked_kn(k, 2)) * hom_closed(k2, n).value() -
                      Integer(n);
  const Rational rhs(num, mersenne(k.k).value());
  return make_identity_report("partial_sum_even", {{"k", k.k}, {"n", n}},
                              Rational(lhs), rhs);
}

IdentityReport partial_sum_odd(Order k, Index n) {
  const auto seq = hom_stream(k, 2 * n + 2);
  Integer lhs = 0;
  for (Index i = 0; i <= n; ++i) lhs += seq[2 * i + 1].value();
  const Order k2 = doubled(k);
  const Integer num =
      Integer::pow2(k.k) * hom_closed(k2, n + 1).value() - Integer(n) - 1;
  const Rational rhs(num, mersenne(k.k).value());
  return make_identity_report("partial_sum_odd", {{"k", k.k}, {"n", n}},
                              Rational(lhs), rhs);
}

IdentityReport binomial_sum(Order k, std::uint64_t s) {
  if (s == 0) throw std::domain_error("binomial_sum: requires s >= 1");
  const auto seq = hom_stream(k, s);
  const auto binom = pascal_row(s - 1);
  Integer lhs = 0;
  for (std::uint64_t n = 0; n < s; ++n) lhs += binom[n].value() * seq[n].value();
  const Integer num = Integer::pow(mersenne_lucas(k.k).value(), s - 1) -
                      Integer::pow2(s - 1);
  const Rational rhs(num, mersenne(k.k).value());
  return make_identity_report("binomial_sum", {{"k", k.k}, {"s", s}},
                              Rational(lhs), rhs);
}

IdentityReport alternating_binomial_sum(Order k, std::uint64_t s) {
  if (s < 2) {
    throw std::domain_error("alternating_binomial_sum: requires s >= 2");
  }
  const auto seq = hom_stream(k, s);
  const auto binom = pascal_row(s - 1);
  Integer lhs = 0;
  for (std::uint64_t n = 0; n < s; ++n) {
    const Integer term = binom[n].value() * seq[n].value();
    if (n % 2 == 0) {
      lhs += term;
    } else {
      lhs -= term;
    }
  }
  Integer rhs = Integer::pow(mersenne(k.k).value(), s - 2);
  if (s % 2 == 0) rhs = -rhs;
  return make_identity_report("alternating_binomial_sum",
                              {{"k", k.k}, {"s", s}}, Rational(lhs),
                              Rational(rhs));
}

Natural bt_definition(Order k, Index n) {
  const auto seq = hom_stream(k, n + 1);
  const auto binom = pascal_row(n);
  Integer acc = 0;
  for (Index i = 0; i <= n; ++i) acc += binom[i].value() * seq[i].value();
  return Natural(std::move(acc));
}

BinomialTransformSeq bt_recurrence(Order k, std::size_t count) {
  BinomialTransformSeq seq{k.k, {}};
  seq.terms.reserve(count);
  const Integer mk = mersenne_lucas(k.k).value();
  const Integer a = mk + 2;        // 2 + m_k
  const Integer b = Integer(2) * mk;  // 2 m_k
  Integer prev = 0;
  Integer cur = 1;
  for (std::size_t i = 0; i < count; ++i) {
    seq.terms.emplace_back(prev);
    Integer next = a * cur - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return seq;
}

Natural bt_closed(Order k, Index n) {
  const Integer num =
      Integer::pow(mersenne_lucas(k.k).value(), n) - Integer::pow2(n);
  return Natural(num.exact_div(mersenne(k.k).value()));
}

IdentityReport bt_shift_identity(Order k, Index n) {
  const auto seq = hom_stream(k, n + 2);
  const auto binom = pascal_row(n);
  Integer lemma_sum = 0;
  Integer diff_sum = 0;
  for (Index i = 0; i <= n; ++i) {
    lemma_sum += binom[i].value() * (seq[i + 1] + seq[i]).value();
    diff_sum += binom[i].value() * seq[i + 1].value();
  }
  const Integer b_next = bt_definition(k, n + 1).value();
  const Integer b_cur = bt_definition(k, n).value();
  // Two assertions share one report; on failure the offending pair is the
  // one reported.
  if (lemma_sum != b_next) {
    return make_identity_report("bt_shift", {{"k", k.k}, {"n", n}},
                                Rational(lemma_sum), Rational(b_next));
  }
  return make_identity_report("bt_shift", {{"k", k.k}, {"n", n}},
                              Rational(diff_sum),
                              Rational(b_next - b_cur));
}

}  // namespace homn
