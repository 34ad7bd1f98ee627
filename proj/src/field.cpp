#include "hfitt/field.hpp"

#include "hfitt/errors.hpp"

namespace hfitt {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

std::int64_t mpz_mod_small(const mpz_class& z, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(r.get_ui());
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31)) throw InputError("prime modulus must be below 2^31");
  if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::PrimeField, p);
}

Scalar FieldSpec::zero() const {
  return is_prime_field() ? Scalar::residue(0) : Scalar::rational(mpq_class(0));
}

Scalar FieldSpec::one() const {
  return is_prime_field() ? Scalar::residue(1) : Scalar::rational(mpq_class(1));
}

Scalar FieldSpec::from_int(std::int64_t v) const {
  if (is_prime_field()) return Scalar::residue(reduce(v));
  return Scalar::rational(mpq_class(mpz_class(static_cast<long>(v))));
}

Scalar FieldSpec::from_rational(const mpq_class& q) const {
  if (!is_prime_field()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar::rational(std::move(c));
  }
  std::int64_t den = mpz_mod_small(q.get_den(), modulus_);
  if (den == 0)
    throw InputError("coefficient " + q.get_str() + " is not representable in " + name());
  std::int64_t num = mpz_mod_small(q.get_num(), modulus_);
  return Scalar::residue(num * mod_pow(den, modulus_ - 2, modulus_) % modulus_);
}

bool FieldSpec::is_zero(const Scalar& a) const {
  if (a.holds_residue()) return a.as_residue() == 0;
  return sgn(a.as_rational()) == 0;
}

bool FieldSpec::is_one(const Scalar& a) const {
  if (a.holds_residue()) return a.as_residue() == 1;
  return a.as_rational() == 1;
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::int64_t s = a.as_residue() + b.as_residue();
    return Scalar::residue(s >= modulus_ ? s - modulus_ : s);
  }
  return Scalar::rational(a.as_rational() + b.as_rational());
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::int64_t s = a.as_residue() - b.as_residue();
    return Scalar::residue(s < 0 ? s + modulus_ : s);
  }
  return Scalar::rational(a.as_rational() - b.as_rational());
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return Scalar::residue(a.as_residue() * b.as_residue() % modulus_);
  return Scalar::rational(a.as_rational() * b.as_rational());
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (is_prime_field()) return Scalar::residue(a.as_residue() == 0 ? 0 : modulus_ - a.as_residue());
  return Scalar::rational(-a.as_rational());
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) throw InputError("division by zero");
  if (is_prime_field()) return Scalar::residue(mod_pow(a.as_residue(), modulus_ - 2, modulus_));
  return Scalar::rational(1 / a.as_rational());
}

std::string FieldSpec::render(const Scalar& a) const {
  if (a.holds_residue()) return std::to_string(a.as_residue());
  return a.as_rational().get_str();
}

bool FieldSpec::is_negative(const Scalar& a) const {
  return !a.holds_residue() && sgn(a.as_rational()) < 0;
}

std::string FieldSpec::name() const {
  if (is_prime_field()) return "GF(" + std::to_string(modulus_) + ")";
  return "QQ";
}

}  // namespace hfitt
