#include "hfitt/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hfitt/errors.hpp"

namespace hfitt {

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  refresh();
}

Monomial::Monomial(const std::vector<Exponent>& exps) : exps_(exps.begin(), exps.end()) {
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) mask_ |= std::uint64_t{1} << (i % 64);
  }
}

void Monomial::set(std::size_t i, Exponent e) {
  exps_[i] = e;
  refresh();
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  if ((mask_ & ~other.mask_) != 0) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  if (exps_.size() <= 64) return (mask_ & other.mask_) == 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.refresh();
  return r;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const std::size_t n = a.size();
  if (order == MonomialOrder::GrevLex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    // Ties: the smaller exponent in the first differing variable wins, so the
    // last-listed variable ranks highest (z^2 > x*y over x, y, z).
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingSpec::RingSpec(std::vector<std::string> variables, FieldSpec field, MonomialOrder order)
    : variables_(std::move(variables)), field_(field), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_name(v)) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> RingSpec::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

RingPtr make_ring(std::vector<std::string> variables, FieldSpec field, MonomialOrder order) {
  return std::make_shared<const RingSpec>(std::move(variables), field, order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace hfitt
