#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hfitt/polynomial.hpp"

namespace hfitt {

/// Maximum number of S-pair reductions a single Groebner computation may
/// perform before ResourceError is thrown. Thread-local; defaults to 10^7.
std::size_t step_budget();
void set_step_budget(std::size_t steps);

/// RAII override of the step budget for the current thread.
class StepBudgetScope {
 public:
  explicit StepBudgetScope(std::size_t steps) : saved_(step_budget()) { set_step_budget(steps); }
  ~StepBudgetScope() { set_step_budget(saved_); }
  StepBudgetScope(const StepBudgetScope&) = delete;
  StepBudgetScope& operator=(const StepBudgetScope&) = delete;

 private:
  std::size_t saved_;
};

namespace gb {

/// Term of a free-module element: coefficient * monomial * e_component.
struct VTerm {
  std::uint32_t component;
  Monomial monomial;
  Scalar coefficient;
};

/// Free-module element as a term list, strictly descending in the
/// position-over-term order (lower component index dominates). Ideals are
/// the rank-one case.
using SVec = std::vector<VTerm>;

int compare_pot(std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b,
                MonomialOrder order);

SVec from_polynomial(const Polynomial& f, std::uint32_t component = 0);
SVec from_column(const std::vector<Polynomial>& column);
Polynomial to_polynomial(const SVec& v, const RingPtr& ring);
std::vector<Polynomial> to_column(const SVec& v, const RingPtr& ring, std::size_t rank);

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and the
/// normal selection strategy. Elements are inserted with insert() and pairs
/// are processed by complete(); reduced_basis() is canonical once complete.
class Builder {
 public:
  /// rank is the free-module rank; the coprime-leading-term criterion is
  /// only applied in the ideal case (rank 1).
  Builder(const RingSpec& ring, std::size_t rank);

  /// Reduces v by the current basis; returns false when it reduces to zero.
  bool insert(SVec v);
  void complete();
  /// Takes a basis that is already a Groebner basis (e.g. a previous
  /// reduced_basis()) without forming pairs; only valid on an empty builder.
  void adopt(std::vector<SVec> basis);

  /// insert() followed by complete().
  bool add(SVec v) {
    bool grew = insert(std::move(v));
    if (grew) complete();
    return grew;
  }

  /// Full normal form against the current basis (a Groebner basis only
  /// after complete()).
  SVec reduce(SVec v) const;
  bool reduces_to_zero(const SVec& v) const { return reduce(v).empty(); }

  /// Unique reduced monic basis, sorted by descending leading term.
  std::vector<SVec> reduced_basis() const;

  std::size_t steps() const noexcept { return steps_; }

 private:
  struct Element {
    SVec vec;
    bool active = true;
  };
  struct Pair {
    std::size_t i;
    std::size_t j;
    std::uint32_t component;
    Monomial lcm;
  };

  const VTerm& lead(std::size_t idx) const { return elements_[idx].vec.front(); }
  SVec spair(const Pair& p) const;
  const Element* find_divisor(std::uint32_t component, const Monomial& m,
                              std::size_t exclude) const;
  SVec reduce_excluding(SVec v, std::size_t exclude) const;
  void update(std::size_t h);
  SVec make_monic(SVec v) const;

  const RingSpec* ring_;
  bool ideal_case_;
  std::vector<Element> elements_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::size_t steps_ = 0;
};

/// Reduced monic Groebner basis of the given generators.
std::vector<SVec> groebner(const RingSpec& ring, std::size_t rank, std::vector<SVec> generators);

}  // namespace gb
}  // namespace hfitt
