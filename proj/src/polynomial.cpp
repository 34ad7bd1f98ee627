#include "hfitt/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "hfitt/errors.hpp"

namespace hfitt {

namespace {

struct DescendingTerms {
  MonomialOrder order;
  bool operator()(const Term& a, const Term& b) const {
    return compare(a.monomial, b.monomial, order) > 0;
  }
};

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const FieldSpec& k = ring_->field();
  std::sort(terms.begin(), terms.end(), DescendingTerms{ring_->order()});
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient = k.add(terms_.back().coefficient, t.coefficient);
      if (k.is_zero(terms_.back().coefficient)) terms_.pop_back();
    } else if (!k.is_zero(t.coefficient)) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(ring->variable_count()), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->variable_count());
  m.set(index, 1);
  Polynomial p(ring);
  p.terms_.push_back({std::move(m), ring->field().one()});
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("polynomials over different rings");
}

Polynomial add_scaled(const Polynomial& a, const Scalar& c, const Polynomial& b) {
  require_same_ring(a, b);
  const FieldSpec& k = a.field();
  const MonomialOrder order = a.ring()->order();
  Polynomial r(a.ring());
  if (k.is_zero(c)) {
    r.terms_ = a.terms_;
    return r;
  }
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int cmp = compare(a.terms_[i].monomial, b.terms_[j].monomial, order);
    if (cmp > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({b.terms_[j].monomial, k.mul(c, b.terms_[j].coefficient)});
      ++j;
    } else {
      Scalar s = k.add(a.terms_[i].coefficient, k.mul(c, b.terms_[j].coefficient));
      if (!k.is_zero(s)) r.terms_.push_back({a.terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j)
    r.terms_.push_back({b.terms_[j].monomial, k.mul(c, b.terms_[j].coefficient)});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  return add_scaled(*this, field().one(), other);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return add_scaled(*this, field().neg(field().one()), other);
}

Polynomial Polynomial::operator-() const { return scaled(field().neg(field().one())); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(*this, other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  const FieldSpec& k = field();
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      products.push_back({a.monomial * b.monomial, k.mul(a.coefficient, b.coefficient)});
  return Polynomial(ring_, std::move(products));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const FieldSpec& k = field();
  Polynomial r(ring_);
  if (k.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, k.mul(c, t.coefficient)});
  return r;
}

Polynomial Polynomial::shifted(const Scalar& c, const Monomial& m) const {
  const FieldSpec& k = field();
  Polynomial r(ring_);
  if (k.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, k.mul(c, t.coefficient)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || field().is_one(terms_.front().coefficient)) return *this;
  return scaled(field().inv(terms_.front().coefficient));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  const FieldSpec& k = field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({std::move(m), k.mul(k.from_int(e), t.coefficient)});
  }
  return Polynomial(ring_, std::move(out));
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->variable_count())
    throw InputError("evaluation point has wrong length");
  const FieldSpec& k = field();
  Scalar total = k.zero();
  for (const auto& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (Monomial::Exponent e = 0; e < t.monomial[i]; ++e) v = k.mul(v, point[i]);
    total = k.add(total, v);
  }
  return total;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
    if (!(a.terms_[i].coefficient == b.terms_[i].coefficient)) return false;
  }
  return true;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  throw InvariantError("unknown arithmetic operation");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expression();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial sum = term();
    if (negate) sum = -sum;
    for (;;) {
      if (accept('+')) sum += term();
      else if (accept('-')) sum -= term();
      else break;
    }
    return sum;
  }

  Polynomial term() {
    Polynomial product = factor();
    while (accept('*')) product *= factor();
    return product;
  }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned exponent() {
    std::size_t start = (skip_space(), pos_);
    mpz_class e = integer();
    if (e > 1000000) throw ParseError("exponent too large", start);
    return static_cast<unsigned>(e.get_ui());
  }

  Polynomial factor() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    Polynomial base(ring_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      mpq_class q(integer());
      if (accept('/')) {
        std::size_t den_pos = (skip_space(), pos_);
        mpz_class den = integer();
        if (den == 0) throw ParseError("zero denominator", den_pos);
        q = mpq_class(q.get_num(), den);
        q.canonicalize();
      }
      try {
        return Polynomial::constant(ring_, ring_->field().from_rational(q));
      } catch (const InputError& e) {
        throw ParseError(e.what(), start);
      }
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      base = Polynomial::variable(ring_, *idx);
    } else if (c == '(') {
      ++pos_;
      base = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    if (accept('^')) base = base.pow(exponent());
    return base;
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_monomial(const Monomial& m, const RingSpec& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const FieldSpec& k = f.field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = k.is_negative(t.coefficient);
    Scalar magnitude = negative ? k.neg(t.coefficient) : t.coefficient;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += k.render(magnitude);
    } else {
      if (!k.is_one(magnitude)) out += k.render(magnitude) + '*';
      out += render_monomial(t.monomial, *f.ring());
    }
  }
  return out;
}

}  // namespace hfitt
