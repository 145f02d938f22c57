#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace gcell {

/// The base field: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rational() { return Field(Kind::rational, 0); }
  /// Throws Error(validation_error) unless p is prime.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "f<p>" (e.g. "f7").
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  /// "q" or "f<p>".
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

/// An exact element of a Field. Rationals are kept as reduced fractions,
/// prime-field elements as least nonnegative residues.
///
/// Binary operations require both operands to live in the same field and
/// throw Error(field_mismatch) otherwise.
class Scalar {
 public:
  /// Rational zero.
  Scalar() : field_(Field::rational()), value_(mpq_class(0)) {}

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long value);
  static Scalar from_rational(const Field& f, const mpq_class& value);
  /// Parses "num", "num/den" (optionally signed). Over F_p the fraction is
  /// reduced modulo p; a denominator divisible by p is rejected.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Throws Error(division_by_zero) on zero.
  Scalar inverse() const;

  /// "num/den" (den omitted when 1) or the decimal residue.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Underlying value; only valid for the matching field kind.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

 private:
  Scalar(const Field& f, std::variant<mpq_class, std::uint64_t> v)
      : field_(f), value_(std::move(v)) {}

  void require_same_field(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace gcell
