#include "genfun.hpp"

#include <utility>

#include "sums_transforms.hpp"

namespace homn {

SeriesCoeffs expand_rational(const RationalFunction& f, std::size_t count) {
  if (f.denominator.empty() || f.denominator.front().is_zero()) {
    throw std::domain_error(
        "expand_rational: denominator constant term must be nonzero");
  }
  const Rational q0(f.denominator.front());
  SeriesCoeffs coeffs;
  coeffs.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational acc = (n < f.numerator.size()) ? Rational(f.numerator[n])
                                            : Rational();
    const std::size_t jmax = std::min(n, f.denominator.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      acc -= Rational(f.denominator[j]) * coeffs[n - j];
    }
    coeffs.push_back(acc / q0);
  }
  return coeffs;
}

RationalFunction hom_ogf(Order k) {
  const Integer q = Integer::pow2(k.k);
  return {{0, 1}, {Integer(1), -(q + 1), q}};
}

RationalFunction bt_ogf(Order k) {
  const Integer mk = mersenne_lucas(k.k).value();
  return {{0, 1}, {Integer(1), -(mk + 2), Integer(2) * mk}};
}

namespace {

IdentityReport termwise_report(std::string name, Order k, std::size_t count,
                               const std::vector<Natural>& terms,
                               const std::vector<Integer>& closed_numerators) {
  // lhs_n = terms[n]/n!, rhs_n = closed_numerators[n]/((2^k-1) n!).
  // All pairs must match; the reported pair is the first failing one, or
  // the last term when everything holds.
  const Integer mk = mersenne(k.k).value();
  Integer factorial = 1;
  Rational lhs, rhs;
  bool holds = true;
  std::size_t reported_n = count == 0 ? 0 : count - 1;
  for (std::size_t n = 0; n < count; ++n) {
    if (n > 0) factorial *= Integer(n);
    const Rational l(terms[n].value(), factorial);
    const Rational r(closed_numerators[n], mk * factorial);
    if (n == count - 1 || l != r) {
      lhs = l;
      rhs = r;
    }
    if (l != r) {
      holds = false;
      reported_n = n;
      break;
    }
  }
  IdentityReport rep;
  rep.identity_name = std::move(name);
  rep.parameters = {{"k", k.k}, {"count", count}, {"n", reported_n}};
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.holds = holds;
  return rep;
}

}  // namespace

IdentityReport egf_check(Order k, std::size_t count) {
  const auto terms = hom_stream(k, count);
  std::vector<Integer> closed;
  closed.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    closed.push_back(Integer::pow2(checked_kn(k, n)) - 1);
  }
  return termwise_report("hom_egf", k, count, terms, closed);
}

IdentityReport bt_egf_check(Order k, std::size_t count) {
  const auto seq = bt_recurrence(k, count);
  const Integer mk = mersenne_lucas(k.k).value();
  std::vector<Integer> closed;
  closed.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    closed.push_back(Integer::pow(mk, n) - Integer::pow2(n));
  }
  return termwise_report("bt_egf", k, count, seq.terms, closed);
}

}  // namespace homn
