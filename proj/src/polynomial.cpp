#include "gotzmann/polynomial.hpp"

#include "gotzmann/error.hpp"

#include <algorithm>
#include <cctype>

namespace gotzmann {

Ring::Ring(std::vector<std::string> names, TermOrder order)
    : names_(std::move(names)), order_(std::move(order)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
    for (char c : n) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw ParseError("bad variable name '" + n + "'");
    if (std::find(names_.begin(), names_.begin() + static_cast<long>(i), n) != names_.begin() + static_cast<long>(i))
      throw ParseError("duplicate variable name '" + n + "'");
  }
  if (order_.kind() == OrderKind::Weighted)
    require(order_.weight().size() == names_.size(), "weight length does not match the ring");
}

RingPtr Ring::make(std::vector<std::string> names, TermOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(order));
}

std::size_t Ring::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ParseError("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr Ring::with_order(TermOrder order) const { return make(names_, std::move(order)); }

MultiPoly MultiPoly::constant(RingPtr ring, const BigRational& c) {
  return monomial(ring, Monomial(ring->nvars()), c);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  auto m = Monomial::variable(ring->nvars(), index);
  return monomial(std::move(ring), std::move(m), 1);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Monomial m, const BigRational& c) {
  require(m.nvars() == ring->nvars(), "monomial from a different ring");
  if (sgn(c) == 0) return MultiPoly(std::move(ring));
  return MultiPoly(std::move(ring), std::vector<Term>{Term{std::move(m), c}});
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  for (const auto& t : terms) require(t.mono.nvars() == ring->nvars(), "monomial from a different ring");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef += t.coef;
    else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  return MultiPoly(std::move(ring), std::move(out));
}

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (ring_ == other.ring_) return;
  require(ring_ && other.ring_ && ring_->same_variables(*other.ring_) && ring_->order() == other.ring_->order(),
          "polynomials from different rings");
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

BigRational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

MultiPoly MultiPoly::operator-() const {
  auto out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  check_ring(other);
  return minus_scaled(other, Monomial(ring_->nvars()), -1);
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  check_ring(other);
  return minus_scaled(other, Monomial(ring_->nvars()), 1);
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  check_ring(other);
  if (is_zero() || other.is_zero()) return MultiPoly(ring_);
  if (other.size() == 1) return times_term(other.terms_[0].mono, other.terms_[0].coef);
  if (size() == 1) return other.times_term(terms_[0].mono, terms_[0].coef);
  std::vector<Term> products;
  products.reserve(size() * other.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) products.push_back(Term{a.mono * b.mono, a.coef * b.coef});
  return from_terms(ring_, std::move(products));
}

MultiPoly MultiPoly::operator*(const BigRational& c) const {
  if (sgn(c) == 0) return MultiPoly(ring_);
  auto out = *this;
  for (auto& t : out.terms_) t.coef *= c;
  return out;
}

MultiPoly MultiPoly::times_term(const Monomial& m, const BigRational& c) const {
  if (sgn(c) == 0) return MultiPoly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coef * c});
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::minus_scaled(const MultiPoly& g, const Monomial& m, const BigRational& c) const {
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  std::size_t gm_index = static_cast<std::size_t>(-1);
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    if (gm_index != j) {
      gm = g.terms_[j].mono * m;
      gm_index = j;
    }
    if (i == terms_.size()) {
      out.push_back(Term{std::move(gm), -c * g.terms_[j++].coef});
      continue;
    }
    auto cmp = order(terms_[i].mono, gm);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), -c * g.terms_[j++].coef});
    } else {
      BigRational v = terms_[i].coef - c * g.terms_[j].coef;
      if (sgn(v) != 0) out.push_back(Term{terms_[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading_coefficient());
}

BigRational MultiPoly::evaluate(std::span<const BigRational> point) const {
  require(point.size() == ring_->nvars(), "evaluation point has the wrong length");
  BigRational total = 0;
  for (const auto& t : terms_) {
    BigRational v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono[i] != 0) v *= pow(point[i], static_cast<unsigned long>(t.mono[i]));
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::in_ring(RingPtr other) const {
  require(other->same_variables(*ring_), "ring change needs identical variables");
  return from_terms(std::move(other), terms_);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    bool negative = sgn(t.coef) < 0;
    BigRational mag = abs(t.coef);
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    bool unit = mag == 1;
    if (t.mono.is_one()) {
      out += gotzmann::to_string(mag);
    } else {
      if (!unit) out += gotzmann::to_string(mag) + '*';
      out += gotzmann::to_string(t.mono, ring_->names());
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && a.ring_->same_variables(*b.ring_))) return false;
  if (a.ring_ == b.ring_ || a.ring_->order() == b.ring_->order()) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }
  return a == b.in_ring(a.ring_);
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (sign < 0) t.coef = -t.coef;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return MultiPoly::from_terms(ring_, std::move(terms));
  }

private:
  Term parse_term() {
    Term t{Monomial(ring_->nvars()), 1};
    std::vector<int> exps(ring_->nvars(), 0);
    while (true) {
      skip_ws();
      if (at_end()) fail("dangling operator");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        BigInt num(read_digits()), den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("bad denominator");
          den = BigInt(read_digits());
          if (den == 0) fail("zero denominator");
        }
        t.coef *= make_rational(num, den);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::size_t var = 0;
        try {
          var = ring_->index_of(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
          fail(e.what());
        }
        int power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("bad exponent");
          power = std::stoi(read_digits());
        }
        exps[var] += power;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    t.mono = Monomial(std::move(exps));
    return t;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

} // namespace

MultiPoly MultiPoly::parse(std::string_view text, RingPtr ring) { return PolyParser(text, ring).parse(); }

} // namespace gotzmann
