#pragma once

// Exact rationals over GMP's mpq layer. Always canonical: lowest terms,
// positive denominator, sign on the numerator.

#include <gmp.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "integer.hpp"

namespace homn {

class Rational {
 public:
  Rational() { mpq_init(q_); }

  Rational(const Integer& v) {  // NOLINT(google-explicit-constructor)
    mpq_init(q_);
    mpq_set_z(q_, v.mpz());
  }
  Rational(const Natural& v) : Rational(v.value()) {}  // NOLINT

  template <std::integral T>
  Rational(T v) : Rational(Integer(v)) {}  // NOLINT

  Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw internal_error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.mpz());
    mpz_set(mpq_denref(q_), den.mpz());
    mpq_canonicalize(q_);
  }

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Integer numerator() const { return Integer::from_mpz(mpq_numref(q_)); }
  Natural denominator() const {
    return Natural(Integer::from_mpz(mpq_denref(q_)));
  }

  // The exact Integer value; throws internal_error if not integral.
  Integer to_integer() const {
    if (!is_integer()) {
      throw internal_error("Rational: " + to_string() + " is not an integer");
    }
    return numerator();
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw internal_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <=> 0;
  }

  std::string to_string() const {
    Integer n = numerator();
    if (is_integer()) return n.to_string();
    return n.to_string() + "/" + denominator().to_string();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
    return os << v.to_string();
  }

 private:
  mpq_t q_;
};

}  // namespace homn
