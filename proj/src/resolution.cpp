#include "hfitt/resolution.hpp"

#include "hfitt/errors.hpp"

namespace hfitt {

Resolution free_resolution(const FpModule& m, int length) {
  if (length < 1) throw InputError("resolution length must be at least 1");
  const QuotientPtr& base = m.base();
  std::vector<std::size_t> ranks{m.generator_count()};
  std::vector<PolyMatrix> diffs;
  bool truncated = false;
  if (m.presentation().cols() > 0) {
    diffs.push_back(m.presentation());
    ranks.push_back(m.presentation().cols());
    for (;;) {
      PolyMatrix next = syzygies(diffs.back());
      if (next.cols() == 0) break;
      if (static_cast<int>(diffs.size()) == length) {
        truncated = true;
        break;
      }
      ranks.push_back(next.cols());
      diffs.push_back(std::move(next));
    }
  }
  int len = static_cast<int>(diffs.size());
  FreeComplex complex(base, Orientation::Chain, 0, std::move(ranks), std::move(diffs));
  return Resolution{std::move(complex), m, len, truncated};
}

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

std::vector<std::size_t> iota(std::size_t n) { return all_but(n, n); }

}  // namespace

Resolution minimalize(const Resolution& res) {
  const QuotientPtr& base = res.complex.base();
  const FieldSpec& field = base->ring()->field();
  std::vector<std::size_t> ranks = res.complex.ranks();
  std::vector<PolyMatrix> diffs = res.complex.differentials();  // diffs[t] = d_{t+1}

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 0; t < diffs.size() && !changed; ++t) {
      const PolyMatrix& d = diffs[t];
      for (std::size_t a = 0; a < d.rows() && !changed; ++a)
        for (std::size_t b = 0; b < d.cols() && !changed; ++b) {
          const Polynomial& u = d(a, b);
          if (u.is_zero() || !u.is_constant()) continue;
          // d = [[u, alpha], [beta, delta]] after moving row a and column b first.
          Scalar u_inv = field.inv(u.leading_term().coefficient);
          std::vector<std::size_t> rows = all_but(d.rows(), a);
          std::vector<std::size_t> cols = all_but(d.cols(), b);
          PolyMatrix reduced = d.submatrix(rows, cols);
          for (std::size_t r = 0; r < rows.size(); ++r) {
            const Polynomial& beta = d(rows[r], b);
            if (beta.is_zero()) continue;
            for (std::size_t c = 0; c < cols.size(); ++c) {
              const Polynomial& alpha = d(a, cols[c]);
              if (alpha.is_zero()) continue;
              reduced.set(r, c, reduced(r, c) - (beta * alpha).scaled(u_inv));
            }
          }
          if (t + 1 < diffs.size()) {
            const PolyMatrix& up = diffs[t + 1];
            diffs[t + 1] = up.submatrix(all_but(up.rows(), b), iota(up.cols()));
          }
          if (t > 0) {
            const PolyMatrix& down = diffs[t - 1];
            diffs[t - 1] = down.submatrix(iota(down.rows()), all_but(down.cols(), a));
          }
          diffs[t] = std::move(reduced);
          --ranks[t];
          --ranks[t + 1];
          changed = true;
        }
    }
  }
  while (ranks.size() > 1 && ranks.back() == 0) {
    ranks.pop_back();
    diffs.pop_back();
  }
  int len = static_cast<int>(diffs.size());
  FreeComplex complex(base, Orientation::Chain, 0, std::move(ranks), std::move(diffs));
  return Resolution{std::move(complex), res.target, len, res.truncated};
}

Ideal classical_fitting(const FpModule& m, int k) {
  return minors_ideal(m.presentation(), static_cast<int>(m.generator_count()) - k);
}

int generic_rank(const FpModule& m) {
  const PolyMatrix& p = m.presentation();
  int top = static_cast<int>(std::min(p.rows(), p.cols()));
  for (int j = top; j > 0; --j) {
    for (const auto& minor : minors(p, j))
      if (!minor.is_zero()) return static_cast<int>(m.generator_count()) - j;
  }
  return static_cast<int>(m.generator_count());
}

Ideal pd_locus(const Resolution& res, int d, int rank) {
  if (d < 1) throw InputError("projective dimension locus needs d >= 1");
  if (res.truncated && d > res.length)
    throw InputError("resolution was truncated before degree " + std::to_string(d));
  int k = (d % 2 == 1) ? rank : -rank;
  return fitting_ideal(res.complex, d, k);
}

Ideal pd_locus(const FpModule& m, int d, std::optional<int> rank_override) {
  int rank = rank_override ? *rank_override : generic_rank(m);
  return pd_locus(free_resolution(m, std::max(d, 1)), d, rank);
}

}  // namespace hfitt
