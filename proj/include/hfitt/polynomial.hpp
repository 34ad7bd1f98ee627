#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfitt/ring.hpp"

namespace hfitt {

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial; terms strictly descending in the ring order, no zero
/// coefficients. Two polynomials are equal iff their term lists are equal.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, combines and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldSpec& field() const noexcept { return ring_->field(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  std::uint32_t total_degree() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(const Scalar& c) const;
  /// c * m * this
  Polynomial shifted(const Scalar& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  /// Leading coefficient 1; zero stays zero.
  Polynomial monic() const;
  Polynomial derivative(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  friend Polynomial add_scaled(const Polynomial&, const Scalar&, const Polynomial&);
};

/// a + c*b
Polynomial add_scaled(const Polynomial& a, const Scalar& c, const Polynomial& b);

enum class ArithOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Parses the polynomial input language (terms joined by + and -, factors
/// joined by *, integer or n/d coefficients, x^e powers, parentheses).
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Deterministic rendering, terms in descending order, e.g. "z^2 - x*y".
std::string render_polynomial(const Polynomial& f);

std::string render_monomial(const Monomial& m, const RingSpec& ring);

/// Throws RingMismatch unless a and b share a ring.
void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace hfitt
