#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace hfitt {

/// A field element. Prime-field residues are stored inline; rationals use GMP.
/// The interpretation is owned by the FieldSpec that produced the value.
class Scalar {
 public:
  Scalar() = default;
  static Scalar residue(std::int64_t r) { return Scalar(r); }
  static Scalar rational(mpq_class q) { return Scalar(std::move(q)); }

  bool holds_residue() const noexcept { return std::holds_alternative<std::int64_t>(value_); }
  std::int64_t as_residue() const { return std::get<std::int64_t>(value_); }
  const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.holds_residue()) return a.as_residue() == b.as_residue();
    return a.as_rational() == b.as_rational();
  }

 private:
  explicit Scalar(std::int64_t r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  std::variant<std::int64_t, mpq_class> value_{std::int64_t{0}};
};

/// Coefficient field: Q or F_p with p prime and below 2^31.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec prime(std::int64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for Q.
  std::int64_t characteristic() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// Throws InputError when the denominator vanishes in the field.
  Scalar from_rational(const mpq_class& q) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws InputError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Residues render in [0, p); rationals as "n" or "n/d".
  std::string render(const Scalar& a) const;
  /// True when the rendered value carries a leading minus sign.
  bool is_negative(const Scalar& a) const;

  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldSpec(Kind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  std::int64_t reduce(std::int64_t v) const {
    v %= modulus_;
    return v < 0 ? v + modulus_ : v;
  }

  Kind kind_;
  std::int64_t modulus_;
};

}  // namespace hfitt
