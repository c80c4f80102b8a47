#pragma once

// Exact coefficient rings for the polynomial and matrix layers: the field
// with two elements, arbitrary-precision integers and rationals (GMP-backed).
// No floating point anywhere.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cupkernel {

/// Field with two elements.
struct F2 {
  uint8_t v = 0;

  constexpr F2() = default;
  constexpr explicit F2(unsigned long x) : v(static_cast<uint8_t>(x & 1u)) {}

  static F2 zero() { return F2{}; }
  static F2 one() { return F2{1}; }
  static F2 from_decimal(const std::string& s) {
    mpz_class z(s);
    return F2{mpz_odd_p(z.get_mpz_t()) ? 1ul : 0ul};
  }

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }
  bool is_negative() const { return false; }

  F2 operator+(F2 o) const { return F2{static_cast<unsigned long>(v ^ o.v)}; }
  F2 operator-(F2 o) const { return *this + o; }
  F2 operator*(F2 o) const { return F2{static_cast<unsigned long>(v & o.v)}; }
  F2 operator-() const { return *this; }

  F2 inverse() const {
    if (v == 0) throw std::domain_error("F2: inverse of zero");
    return *this;
  }
  F2 abs() const { return *this; }

  std::string str() const { return v ? "1" : "0"; }
  bool operator==(const F2&) const = default;
};

/// Arbitrary-precision integer.
class ZZ {
 public:
  ZZ() : v_(0) {}
  ZZ(long x) : v_(x) {}  // NOLINT(google-explicit-constructor)
  explicit ZZ(mpz_class x) : v_(std::move(x)) {}

  static ZZ zero() { return ZZ(0); }
  static ZZ one() { return ZZ(1); }
  static ZZ from_decimal(const std::string& s) { return ZZ(mpz_class(s)); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }

  ZZ operator+(const ZZ& o) const { return ZZ(mpz_class(v_ + o.v_)); }
  ZZ operator-(const ZZ& o) const { return ZZ(mpz_class(v_ - o.v_)); }
  ZZ operator*(const ZZ& o) const { return ZZ(mpz_class(v_ * o.v_)); }
  ZZ operator-() const { return ZZ(mpz_class(-v_)); }

  ZZ abs() const { return ZZ(mpz_class(::abs(v_))); }

  std::string str() const { return v_.get_str(); }
  const mpz_class& raw() const { return v_; }
  bool operator==(const ZZ& o) const { return v_ == o.v_; }

 private:
  mpz_class v_;
};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonical form).
class QQ {
 public:
  QQ() : v_(0) {}
  QQ(long x) : v_(x) {}  // NOLINT(google-explicit-constructor)
  QQ(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("QQ: zero denominator");
    v_.canonicalize();
  }
  explicit QQ(mpq_class x) : v_(std::move(x)) { v_.canonicalize(); }

  static QQ zero() { return QQ(0); }
  static QQ one() { return QQ(1); }
  static QQ from_decimal(const std::string& s) { return QQ(mpq_class(mpz_class(s))); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }

  QQ operator+(const QQ& o) const { return wrap(v_ + o.v_); }
  QQ operator-(const QQ& o) const { return wrap(v_ - o.v_); }
  QQ operator*(const QQ& o) const { return wrap(v_ * o.v_); }
  QQ operator-() const { return wrap(-v_); }

  QQ inverse() const {
    if (is_zero()) throw std::domain_error("QQ: inverse of zero");
    return wrap(1 / v_);
  }
  QQ abs() const { return wrap(::abs(v_)); }

  std::string str() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool operator==(const QQ& o) const { return v_ == o.v_; }

 private:
  static QQ wrap(mpq_class x) {
    QQ q;
    q.v_ = std::move(x);  // results of canonical operands are canonical
    return q;
  }
  mpq_class v_;
};

template <class C>
concept CoefficientRing = requires(const C a, const C b) {
  { C::zero() } -> std::same_as<C>;
  { C::one() } -> std::same_as<C>;
  { C::from_decimal(std::string{}) } -> std::same_as<C>;
  { a + b } -> std::same_as<C>;
  { a - b } -> std::same_as<C>;
  { a * b } -> std::same_as<C>;
  { -a } -> std::same_as<C>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.is_one() } -> std::same_as<bool>;
  { a.is_negative() } -> std::same_as<bool>;
  { a.abs() } -> std::same_as<C>;
  { a.str() } -> std::same_as<std::string>;
  { a == b } -> std::convertible_to<bool>;
};

template <class C>
concept CoefficientField = CoefficientRing<C> && requires(const C a) {
  { a.inverse() } -> std::same_as<C>;
};

}  // namespace cupkernel
