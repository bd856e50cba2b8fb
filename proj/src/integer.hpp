#pragma once

// Exact arbitrary-precision integers over GMP's mpz layer.
//
// Integer is a signed value type. Natural wraps Integer and enforces a
// non-negativity invariant; subtracting Naturals yields an Integer.
// Divisions that the number theory proves exact go through exact_div,
// which throws internal_error if a remainder ever shows up.

#include <gmp.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <cstring>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace homn {

// A proven invariant failed (e.g. an exact division left a remainder).
// This signals a library bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Integer {
 public:
  Integer() { mpz_init(z_); }

  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      mpz_init_set_si(z_, static_cast<long>(v));
    } else {
      mpz_init_set_ui(z_, static_cast<unsigned long>(v));
    }
  }

  explicit Integer(std::string_view decimal) {
    const std::string s(decimal);
    if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
      mpz_clear(z_);
      throw std::invalid_argument("Integer: not a decimal number: " + s);
    }
  }

  Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
  Integer(Integer&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Integer() { mpz_clear(z_); }

  // 2^e
  static Integer pow2(std::uint64_t e) {
    Integer r;
    mpz_setbit(r.z_, e);
    return r;
  }

  static Integer pow(const Integer& base, std::uint64_t e) {
    Integer r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
  }

  static Integer from_mpz(mpz_srcptr src) {
    Integer r;
    mpz_set(r.z_, src);
    return r;
  }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_negative() const { return mpz_sgn(z_) < 0; }
  int sign() const { return mpz_sgn(z_); }

  Integer& operator+=(const Integer& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator-(const Integer& a) {
    Integer r;
    mpz_neg(r.z_, a.z_);
    return r;
  }

  // Quotient of an exactly-divisible pair; throws internal_error otherwise.
  Integer exact_div(const Integer& d) const {
    if (d.is_zero()) throw internal_error("exact_div: zero divisor");
    Integer q, r;
    mpz_tdiv_qr(q.z_, r.z_, z_, d.z_);
    if (!r.is_zero()) {
      throw internal_error("exact_div: " + to_string() + " is not divisible by " +
                           d.to_string());
    }
    return q;
  }

  friend bool operator==(const Integer& a, const Integer& b) {
    return mpz_cmp(a.z_, b.z_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = mpz_cmp(a.z_, b.z_);
    return c <=> 0;
  }

  std::string to_string() const {
    std::string s(mpz_sizeinbase(z_, 10) + 2, '\0');
    mpz_get_str(s.data(), 10, z_);
    s.resize(std::strlen(s.c_str()));
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) {
    return os << v.to_string();
  }

  mpz_srcptr mpz() const { return z_; }

 private:
  mpz_t z_;
};

class Natural {
 public:
  Natural() = default;

  template <std::integral T>
  Natural(T v) : v_(v) {  // NOLINT(google-explicit-constructor)
    check();
  }

  explicit Natural(Integer v) : v_(std::move(v)) { check(); }
  explicit Natural(std::string_view decimal) : v_(decimal) { check(); }

  const Integer& value() const { return v_; }
  operator const Integer&() const { return v_; }  // NOLINT: widening is safe

  bool is_zero() const { return v_.is_zero(); }

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  // Naturals are not closed under subtraction; the difference is an Integer.
  friend Integer operator-(const Natural& a, const Natural& b) {
    return a.v_ - b.v_;
  }

  Natural exact_div(const Natural& d) const {
    return Natural(v_.exact_div(d.v_));
  }

  static Natural pow2(std::uint64_t e) { return Natural(Integer::pow2(e)); }

  friend bool operator==(const Natural& a, const Natural& b) = default;
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return a.v_ <=> b.v_;
  }

  std::string to_string() const { return v_.to_string(); }
  friend std::ostream& operator<<(std::ostream& os, const Natural& v) {
    return os << v.to_string();
  }

 private:
  void check() const {
    if (v_.is_negative()) {
      throw internal_error("Natural: negative value " + v_.to_string());
    }
  }

  Integer v_;
};

}  // namespace homn
