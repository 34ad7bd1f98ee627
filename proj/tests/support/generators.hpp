#pragma once

#include <random>
#include <string>
#include <vector>

#include "hfitt/loci.hpp"

namespace hfitt::testing {

// Seeds are fixed per suite so failures replay exactly.
inline constexpr std::uint64_t kSuiteSeed = 20240611;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Scalar scalar(const FieldSpec& k) {
    if (k.is_prime_field()) return k.from_int(uniform(0, static_cast<int>(k.characteristic()) - 1));
    return k.from_int(uniform(-3, 3));
  }

  Monomial monomial(std::size_t nvars, unsigned max_degree) {
    Monomial m(nvars);
    unsigned deg = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
    for (unsigned d = 0; d < deg; ++d) {
      std::size_t v = static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1));
      m.set(v, m[v] + 1);
    }
    return m;
  }

  Polynomial polynomial(const RingPtr& ring, unsigned max_degree, int max_terms) {
    std::vector<Term> terms;
    int n = uniform(0, max_terms);
    for (int t = 0; t < n; ++t)
      terms.push_back({monomial(ring->variable_count(), max_degree), scalar(ring->field())});
    return Polynomial(ring, std::move(terms));
  }

  /// Entries are zero with probability `sparsity`.
  PolyMatrix matrix(const QuotientPtr& base, std::size_t rows, std::size_t cols, unsigned max_degree,
                    int max_terms = 2, double sparsity = 0.3) {
    std::vector<Polynomial> entries;
    for (std::size_t i = 0; i < rows * cols; ++i)
      entries.push_back(coin(sparsity) ? base->zero() : polynomial(base->ring(), max_degree, max_terms));
    return PolyMatrix(base, rows, cols, std::move(entries));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline RingPtr ring_of(std::vector<std::string> vars, FieldSpec k = FieldSpec::rationals(),
                       MonomialOrder order = MonomialOrder::GrevLex) {
  return make_ring(std::move(vars), std::move(k), order);
}

inline Ideal ideal_of(const QuotientPtr& base, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(base->parse(g));
  return Ideal(base, std::move(ps));
}

inline PolyMatrix matrix_of(const QuotientPtr& base, const std::vector<std::vector<std::string>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return parse_matrix(base, rows.size(), cols, rows);
}

inline std::vector<std::string> rendered(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render_polynomial(p));
  return out;
}

/// Every rational point with coordinates in [lo, hi].
inline std::vector<std::vector<Scalar>> grid(const FieldSpec& k, std::size_t nvars, int lo, int hi) {
  std::vector<std::vector<Scalar>> points{{}};
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& p : points)
      for (int c = lo; c <= hi; ++c) {
        auto q = p;
        q.push_back(k.from_int(c));
        next.push_back(std::move(q));
      }
    points = std::move(next);
  }
  return points;
}

/// Determinant by the Leibniz permutation sum over the ambient ring, reduced
/// at the end. Independent of the library's subset expansion.
inline Polynomial leibniz_determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Polynomial total(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term = Polynomial::constant(m.ring(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return m.base()->reduce(total);
}

/// Generators of a minor ideal by brute force: Leibniz on every submatrix.
inline Ideal brute_force_minors(const PolyMatrix& m, int k) {
  const QuotientPtr& base = m.base();
  if (k <= 0) return Ideal::unit(base);
  std::vector<Polynomial> gens;
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(k, n)), true);
    if (k > n) return out;
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) s.push_back(i);
      out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
  };
  for (const auto& rows : subsets(m.rows(), static_cast<std::size_t>(k)))
    for (const auto& cols : subsets(m.cols(), static_cast<std::size_t>(k)))
      gens.push_back(leibniz_determinant(m.submatrix(rows, cols)));
  return Ideal(base, std::move(gens));
}

/// Random finitely presented module: r generators, m relations.
inline FpModule random_module(Gen& g, const QuotientPtr& base, std::size_t r, std::size_t m) {
  return FpModule(g.matrix(base, r, m, 2, 2, 0.35));
}

}  // namespace hfitt::testing
