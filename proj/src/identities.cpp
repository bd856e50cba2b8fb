#include "identities.hpp"

#include <sstream>
#include <utility>

namespace homn {

namespace {

Index checked_add(Index a, Index b) {
  Index r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("index sum exceeds 64 bits");
  }
  return r;
}

// (2^k)^e, closed-form side.
Integer qpow(Order k, Index e) { return Integer::pow2(checked_kn(k, e)); }

// Mersenne number by the order-1 recurrence; the left-side path for the
// plain-Mersenne identities (right sides use 2^n shifts).
Integer mersenne_by_recurrence(Index n) {
  return hom_recurrence(Order(1), n).value();
}

}  // namespace

std::string to_string(const IdentityReport& r) {
  std::ostringstream os;
  os << r.identity_name << "(";
  bool first = true;
  for (const auto& [key, val] : r.parameters) {
    if (!first) os << ", ";
    os << key << "=" << val;
    first = false;
  }
  os << "): lhs = " << r.lhs << ", rhs = " << r.rhs
     << (r.holds ? " [ok]" : " [FAIL]");
  return os.str();
}

IdentityReport make_identity_report(std::string name,
                                    std::map<std::string, Integer> parameters,
                                    Rational lhs, Rational rhs) {
  IdentityReport rep;
  rep.identity_name = std::move(name);
  rep.parameters = std::move(parameters);
  rep.holds = (lhs == rhs);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

IdentityReport check_index_shift(Order k, Index n, Index alpha) {
  if (alpha >= k.k) {
    throw std::domain_error("check_index_shift: alpha must be in [0, k-1]");
  }
  const Index base = checked_add(checked_kn(k, n), alpha);
  const Index shifted = checked_add(checked_kn(k, checked_add(n, 1)), alpha);
  const Integer lhs = mersenne_by_recurrence(shifted);
  const Integer rhs =
      Integer::pow2(k.k) * mersenne(base) + mersenne(k.k).value();
  return make_identity_report("index_shift",
                              {{"k", k.k}, {"n", n}, {"alpha", alpha}},
                              Rational(lhs), Rational(rhs));
}

IdentityReport check_index_addition(Index n, Index m) {
  const Integer lhs = mersenne_by_recurrence(checked_add(n, m));
  const Integer rhs = Integer::pow2(n) * mersenne(m) + mersenne(n).value();
  return make_identity_report("index_addition", {{"n", n}, {"m", m}},
                              Rational(lhs), Rational(rhs));
}

std::vector<IdentityReport> check_multiples(Order k) {
  const Integer q = Integer::pow2(k.k);
  const Integer mk = mersenne(k.k).value();
  const Integer lk = mersenne_lucas(k.k).value();
  const Integer l2k = mersenne_lucas(checked_kn(k, 2)).value();
  std::vector<IdentityReport> out;
  out.push_back(make_identity_report(
      "multiples_2k", {{"k", k.k}},
      Rational(mersenne_by_recurrence(checked_kn(k, 2))), Rational(mk * lk)));
  out.push_back(make_identity_report(
      "multiples_3k", {{"k", k.k}},
      Rational(mersenne_by_recurrence(checked_kn(k, 3))),
      Rational(mk * (q * lk + 1))));
  out.push_back(make_identity_report(
      "multiples_4k", {{"k", k.k}},
      Rational(mersenne_by_recurrence(checked_kn(k, 4))),
      Rational(mk * lk * l2k)));
  return out;
}

IdentityReport catalan(Order k, Index n, Index r) {
  if (n < r) throw std::domain_error("catalan: requires n >= r");
  const auto seq = hom_stream(k, checked_add(checked_add(n, r), 1));
  const Integer lhs =
      seq[n - r].value() * seq[n + r].value() - seq[n].value() * seq[n].value();
  const Integer mr = hom_closed(k, r).value();
  const Integer rhs = -(qpow(k, n - r) * mr * mr);
  return make_identity_report("catalan", {{"k", k.k}, {"n", n}, {"r", r}},
                              Rational(lhs), Rational(rhs));
}

IdentityReport cassini(Order k, Index n) {
  if (n == 0) throw std::domain_error("cassini: requires n >= 1");
  const auto seq = hom_stream(k, checked_add(n, 2));
  const Integer lhs =
      seq[n - 1].value() * seq[n + 1].value() - seq[n].value() * seq[n].value();
  const Integer rhs = -qpow(k, n - 1);
  return make_identity_report("cassini", {{"k", k.k}, {"n", n}}, Rational(lhs),
                              Rational(rhs));
}

IdentityReport docagne(Order k, Index m, Index n) {
  if (m <= n) throw std::domain_error("docagne: requires m > n");
  const auto seq = hom_stream(k, checked_add(m, 2));
  const Integer lhs =
      seq[n + 1].value() * seq[m].value() - seq[n].value() * seq[m + 1].value();
  const Integer rhs = qpow(k, n) * hom_closed(k, m - n).value();
  return make_identity_report("docagne", {{"k", k.k}, {"m", m}, {"n", n}},
                              Rational(lhs), Rational(rhs));
}

IdentityReport vajda(Order k, Index n, Index m, Index r) {
  const Index top = checked_add(checked_add(n, m), r);
  const auto seq = hom_stream(k, checked_add(top, 1));
  const Integer lhs =
      seq[n + m].value() * seq[n + r].value() - seq[n].value() * seq[top].value();
  const Rational factor(qpow(k, r) - 1, Integer::pow2(k.k) - 1);
  const Rational rhs =
      Rational(qpow(k, n)) * factor * Rational(hom_closed(k, m));
  return make_identity_report("vajda",
                              {{"k", k.k}, {"n", n}, {"m", m}, {"r", r}},
                              Rational(lhs), rhs);
}

std::string_view vajda_convention() {
  return "M(n+m)M(n+r) - M(n)M(n+m+r) = (2^k)^n * ((2^k)^r - 1)/(2^k - 1) * M(m)"
         " = (2^k)^n M(r) M(m)";
}

IdentityReport honsberger(Order k, Index p, Index n) {
  if (p == 0) throw std::domain_error("honsberger: requires p >= 1");
  const Index hi = std::max(p, checked_add(n, 1));
  const auto seq = hom_stream(k, checked_add(hi, 1));
  const Integer lhs =
      seq[p - 1].value() * seq[n].value() + seq[p].value() * seq[n + 1].value();
  const Integer mk_lucas = mersenne_lucas(k.k).value();
  const Integer m2k_lucas = mersenne_lucas(checked_kn(k, 2)).value();
  const Integer num = qpow(k, checked_add(p - 1, n)) * m2k_lucas -
                      (qpow(k, p - 1) + qpow(k, n)) * mk_lucas + 2;
  const Integer mk = mersenne(k.k).value();
  const Rational rhs(num, mk * mk);
  return make_identity_report("honsberger", {{"k", k.k}, {"p", p}, {"n", n}},
                              Rational(lhs), rhs);
}

namespace {

struct JacobsthalPair {
  Rational j_small;  // J_n^(k), always integral
  Rational j_lucas;  // j_n^(k), rational in general
};

JacobsthalPair jacobsthal_closed(Order k, Index n) {
  const int s = (k.k % 2 == 0) ? 1 : -1;
  const int sn = (checked_kn(k, n) % 2 == 0) ? 1 : -1;
  const Integer qn = qpow(k, n);
  const Integer q = Integer::pow2(k.k);
  return {Rational(qn - sn, q - s), Rational(qn + sn, q + s)};
}

}  // namespace

std::vector<IdentityReport> jacobsthal_relation(Order k, Index n) {
  const auto [jn, jln] = jacobsthal_closed(k, n);
  const Rational mn(hom_stream(k, checked_add(n, 1))[n]);
  const Integer q = Integer::pow2(k.k);

  Rational parity_rhs = jn;
  if (n % 2 == 0 && k.k % 2 == 1) {
    parity_rhs = Rational(q + 1, q - 1) * jn;
  } else if (n % 2 == 1 && k.k % 2 == 1) {
    parity_rhs = jln;
  }

  std::vector<IdentityReport> out;
  out.push_back(make_identity_report("jacobsthal_parity", {{"k", k.k}, {"n", n}},
                                     mn, parity_rhs));
  const Rational m2k(hom_stream(doubled(k), checked_add(n, 1))[n]);
  out.push_back(make_identity_report("jacobsthal_product",
                                     {{"k", k.k}, {"n", n}}, m2k, jn * jln));
  return out;
}

std::vector<IdentityReport> square_sum_product_relations(Order k, Index n) {
  const auto [jn, jln] = jacobsthal_closed(k, n);
  const Rational mn(hom_stream(k, checked_add(n, 1))[n]);
  const Integer q = Integer::pow2(k.k);
  const bool k_even = (k.k % 2 == 0);

  std::vector<IdentityReport> out;

  const Integer m2n_c = hom_closed(k, checked_add(n, n)).value();
  const Integer mn_c = hom_closed(k, n).value();
  out.push_back(make_identity_report(
      "hom_square", {{"k", k.k}, {"n", n}}, mn * mn,
      Rational(m2n_c - Integer(2) * mn_c, q - 1)));

  Rational sum_rhs;
  if (k_even) {
    sum_rhs = Rational(2) * jn;
  } else if (n % 2 == 0) {
    sum_rhs = Rational(Integer::pow2(k.k + 1), q - 1) * jn;
  } else {
    sum_rhs = Rational(Integer(2) * (qpow(k, checked_add(n, 1)) - 1),
                       Integer::pow2(checked_kn(k, 2)) - 1);
  }
  out.push_back(make_identity_report("hom_plus_hoj", {{"k", k.k}, {"n", n}},
                                     mn + jn, sum_rhs));

  Rational prod_rhs;
  if (k_even) {
    prod_rhs = jn * jn;
  } else if (n % 2 == 0) {
    prod_rhs = Rational(q + 1, q - 1) * jn * jn;
  } else {
    prod_rhs = Rational(hom_closed(doubled(k), n));
  }
  out.push_back(make_identity_report("hom_times_hoj", {{"k", k.k}, {"n", n}},
                                     mn * jn, prod_rhs));
  return out;
}

Rational limiting_ratio_gap(Order k, Index n) {
  if (n == 0) throw std::domain_error("limiting_ratio_gap: requires n >= 1");
  const auto seq = hom_stream(k, checked_add(n, 2));
  return Rational(seq[n + 1].value(), seq[n].value()) -
         Rational(Integer::pow2(k.k));
}

}  // namespace homn
