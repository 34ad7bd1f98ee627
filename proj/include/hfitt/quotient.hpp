#pragma once

#include <memory>
#include <vector>

#include "hfitt/groebner_core.hpp"
#include "hfitt/polynomial.hpp"

namespace hfitt {

/// Coordinate ring R/I. Elements are represented by their normal forms in R
/// against the cached reduced Groebner basis of I; I = 0 is the ambient ring.
class QuotientSpec {
 public:
  explicit QuotientSpec(RingPtr ring, std::vector<Polynomial> relations = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  /// Reduced monic Groebner basis of the relations.
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  bool is_ambient() const noexcept { return basis_.empty(); }

  Polynomial reduce(const Polynomial& f) const;
  Polynomial zero() const { return Polynomial(ring_); }
  Polynomial one() const { return Polynomial::constant(ring_, 1); }
  Polynomial parse(std::string_view text) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> basis_;
  gb::Builder reducer_;
};

using QuotientPtr = std::shared_ptr<const QuotientSpec>;

QuotientPtr make_quotient(RingPtr ring, std::vector<Polynomial> relations = {});
QuotientPtr ambient(RingPtr ring);

/// Same ring and same ideal of relations.
bool same_base(const QuotientPtr& a, const QuotientPtr& b);
void require_same_base(const QuotientPtr& a, const QuotientPtr& b);

/// Remainder of f on division by the reduced basis of q's relations.
Polynomial normal_form_mod(const Polynomial& f, const QuotientSpec& q);

}  // namespace hfitt
