#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hfitt/field.hpp"

namespace hfitt {

/// GrevLex: total degree, then reverse lexicographic with the last variable
/// ranked highest. Lex: the first variable ranked highest.
enum class MonomialOrder { GrevLex, Lex };

/// Exponent vector with cached total degree and a support bitmask for fast
/// divisibility rejection.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(const std::vector<Exponent>& exps);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent degree() const noexcept { return degree_; }
  std::uint64_t support_mask() const noexcept { return mask_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, Exponent e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  void refresh();

  boost::container::small_vector<Exponent, 8> exps_;
  Exponent degree_ = 0;
  std::uint64_t mask_ = 0;
};

/// -1, 0 or 1 as a is smaller than, equal to or greater than b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Polynomial ring k[x_1..x_n] with a monomial order.
class RingSpec {
 public:
  RingSpec(std::vector<std::string> variables, FieldSpec field,
           MonomialOrder order = MonomialOrder::GrevLex);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  MonomialOrder order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.order_ == b.order_ && a.field_ == b.field_ && a.variables_ == b.variables_;
  }

 private:
  std::vector<std::string> variables_;
  FieldSpec field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> variables, FieldSpec field,
                  MonomialOrder order = MonomialOrder::GrevLex);

/// Pointer identity or structural equality.
bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace hfitt
