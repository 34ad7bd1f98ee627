#include "hfitt/loci.hpp"

#include "hfitt/errors.hpp"

namespace hfitt {

namespace {

std::vector<Polynomial> nonzero(std::vector<Polynomial> eqs) {
  std::erase_if(eqs, [](const Polynomial& f) { return f.is_zero(); });
  return eqs;
}

}  // namespace

AffineScheme::AffineScheme(RingPtr ring, std::vector<Polynomial> equations)
    : ring_(std::move(ring)),
      equations_(nonzero(std::move(equations))),
      ideal_(ambient(ring_), equations_) {
  if (ideal_.is_unit()) throw InputError("the equations define the empty scheme");
  quotient_ = make_quotient(ring_, equations_);
  dimension_ = ideal_.krull_dimension();
}

PushforwardComplex::PushforwardComplex(FreeComplex complex) : complex_(std::move(complex)) {
  if (complex_.orientation() != Orientation::Cochain)
    throw InputError("pushforward complex must be a cochain complex");
  if (complex_.lowest() != 0) throw InputError("pushforward complex must start in degree 0");
}

FpModule kaehler_presentation(const AffineScheme& x) {
  const std::size_t n = x.ring()->variable_count();
  const auto& eqs = x.equations();
  PolyMatrix p(x.coordinate_ring(), n, eqs.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < eqs.size(); ++j) p.set(i, j, eqs[j].derivative(i));
  return FpModule(std::move(p));
}

Ideal singular_locus(const AffineScheme& x, std::optional<int> dim_override) {
  int d = dim_override ? *dim_override : x.dimension();
  return classical_fitting(kaehler_presentation(x), d);
}

Ideal higher_singular_locus(const AffineScheme& x, int i, int resolution_length, std::optional<int> dim_override) {
  if (i < 0) throw InputError("higher singular locus index must be nonnegative");
  if (resolution_length < i + 2)
    throw InputError("higher singular locus " + std::to_string(i) + " needs a resolution of length at least " +
                     std::to_string(i + 2));
  int d = dim_override ? *dim_override : x.dimension();
  Resolution res = free_resolution(kaehler_presentation(x), resolution_length);
  return pd_locus(res, i + 1, d);
}

Ideal determinantal_scheme(const PolyMatrix& m, int k) { return minors_ideal(m, k + 1); }

Ideal brill_noether_ideal(const PushforwardComplex& e, int k) { return underline_fitting_ideal(e.complex(), 0, k); }

std::optional<LiftableRank> liftable_sections_rank(const PushforwardComplex& e) {
  const int r0 = static_cast<int>(e.complex().rank(0));
  for (int k = -1; k <= r0; ++k)
    if (brill_noether_ideal(e, k).is_zero() && brill_noether_ideal(e, k + 1).is_unit()) return LiftableRank{k, k + 1};
  return std::nullopt;
}

}  // namespace hfitt
