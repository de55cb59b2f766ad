#include "gotzmann/monomial.hpp"

#include "gotzmann/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace gotzmann {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    require(e >= 0, "negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  require(index < nvars, "variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

int Monomial::max_var() const {
  for (std::size_t i = exps_.size(); i-- > 0;)
    if (exps_[i] > 0) return static_cast<int>(i);
  return -1;
}

int Monomial::min_var() const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) return static_cast<int>(i);
  return static_cast<int>(exps_.size());
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
    if (exps_[i] > 0) mask |= std::uint64_t{1} << i;
  return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  out *= other;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] -= other.exps_[i];
    if (out.exps_[i] < 0) throw PreconditionError("monomial quotient is not exact");
  }
  out.degree_ -= other.degree_;
  return out;
}

Monomial Monomial::moved(std::size_t from, std::size_t to) const {
  require(exps_.at(from) > 0, "moving a variable that does not divide the monomial");
  Monomial out(*this);
  --out.exps_[from];
  ++out.exps_.at(to);
  return out;
}

Monomial Monomial::times_variable(std::size_t i) const {
  Monomial out(*this);
  ++out.exps_.at(i);
  ++out.degree_;
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int e : exps_) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i)
    names.push_back(nvars <= 4 ? std::string(small[i]) : "x" + std::to_string(i));
  return names;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

Monomial parse_monomial(std::string_view text, const std::vector<std::string>& names) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty monomial");
  Monomial m(names.size());
  if (s == "1") return m;
  std::vector<int> exps(names.size(), 0);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    std::string factor = s.substr(pos, end - pos);
    std::string name = factor;
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      std::string digits = factor.substr(caret + 1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw ParseError("bad exponent in '" + std::string(text) + "'");
      power = std::stoi(digits);
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown variable '" + name + "' in '" + std::string(text) + "'");
    exps[static_cast<std::size_t>(it - names.begin())] += power;
    pos = end + 1;
  }
  return Monomial(std::move(exps));
}

WeightVector::WeightVector(std::vector<BigRational> weights) : weights_(std::move(weights)) {
  BigInt den = lcm_of_denominators(weights_.data(), weights_.data() + weights_.size());
  for (const auto& w : weights_) {
    BigInt v = w.get_num() * (den / w.get_den());
    require(v.fits_slong_p(), "weight too large");
    scaled_.push_back(v.get_si());
  }
}

WeightVector::WeightVector(std::initializer_list<long> weights)
    : WeightVector([&] {
        std::vector<BigRational> v;
        for (long w : weights) v.emplace_back(w);
        return v;
      }()) {}

BigRational WeightVector::weight_of(const Monomial& m) const {
  require(m.nvars() == weights_.size(), "weight length does not match the ring");
  BigRational total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (m[i] != 0) total += weights_[i] * m[i];
  return total;
}

std::int64_t WeightVector::scaled_weight_of(const Monomial& m) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < scaled_.size(); ++i) total += scaled_[i] * m[i];
  return total;
}

bool WeightVector::is_non_increasing() const {
  for (std::size_t i = 1; i < weights_.size(); ++i)
    if (weights_[i] > weights_[i - 1]) return false;
  return true;
}

WeightVector WeightVector::integer_scaled() const {
  BigInt g = 0;
  for (auto s : scaled_) mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(s < 0 ? -s : s));
  if (g == 0) g = 1;
  std::vector<BigRational> out;
  for (auto s : scaled_) out.emplace_back(BigInt(static_cast<long>(s)) / g);
  return WeightVector(std::move(out));
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += gotzmann::to_string(weights_[i]);
  }
  return out;
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<BigRational> w;
  std::size_t pos = 0;
  std::string s(text);
  if (s.empty()) throw ParseError("empty weight vector");
  while (pos <= s.size()) {
    auto end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    w.push_back(parse_rational(s.substr(pos, end - pos)));
    pos = end + 1;
  }
  return WeightVector(std::move(w));
}

TermOrder TermOrder::weighted(WeightVector w, OrderKind tiebreak) {
  require(tiebreak != OrderKind::Weighted, "tiebreak of a weighted order must be lex or degrevlex");
  TermOrder o(OrderKind::Weighted);
  o.weight_ = std::move(w);
  o.tiebreak_ = tiebreak;
  return o;
}

namespace {

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::strong_ordering plain_compare(OrderKind kind, const Monomial& a, const Monomial& b) {
  if (kind == OrderKind::Lex) return lex_compare(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  return revlex_tail(a, b);
}

const char* kind_name(OrderKind k) {
  switch (k) {
  case OrderKind::Lex: return "lex";
  case OrderKind::DegRevLex: return "degrevlex";
  case OrderKind::Weighted: return "weight";
  }
  return "?";
}

OrderKind parse_plain_kind(std::string_view s) {
  if (s == "lex") return OrderKind::Lex;
  if (s == "degrevlex" || s == "grevlex") return OrderKind::DegRevLex;
  throw ParseError("unknown term order '" + std::string(s) + "'");
}

} // namespace

std::strong_ordering TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (kind_ != OrderKind::Weighted) return plain_compare(kind_, a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  auto wa = weight_.scaled_weight_of(a), wb = weight_.scaled_weight_of(b);
  if (wa != wb) return wa <=> wb;
  return plain_compare(tiebreak_, a, b);
}

std::string TermOrder::to_string() const {
  if (kind_ != OrderKind::Weighted) return kind_name(kind_);
  return "weight:" + weight_.to_string() + ":" + kind_name(tiebreak_);
}

TermOrder TermOrder::parse(std::string_view text) {
  if (text.substr(0, 7) != "weight:") return TermOrder(parse_plain_kind(text));
  auto rest = text.substr(7);
  auto colon = rest.find(':');
  OrderKind tiebreak = OrderKind::DegRevLex;
  if (colon != std::string_view::npos) {
    tiebreak = parse_plain_kind(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  return weighted(WeightVector::parse(rest), tiebreak);
}

bool operator==(const TermOrder& a, const TermOrder& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != OrderKind::Weighted) return true;
  return a.tiebreak_ == b.tiebreak_ && a.weight_ == b.weight_;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& order) {
  require(a.nvars() == b.nvars(), "monomials from different rings");
  if (order.kind() == OrderKind::Weighted)
    require(order.weight().size() == a.nvars(), "weight length does not match the ring");
  return order(a, b);
}

namespace {

void enumerate(std::size_t var, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var + 1 == exps.size()) {
    exps[var] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate(var + 1, remaining - e, exps, out);
  }
  exps[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d, const TermOrder& order) {
  require(d >= 0, "negative degree");
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> exps(nvars, 0);
  enumerate(0, d, exps, out);
  // Enumeration is already lex-descending.
  if (order.kind() != OrderKind::Lex)
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order(a, b) > 0; });
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool borel_leq(const Monomial& a, const Monomial& b) {
  require(a.nvars() == b.nvars(), "monomials from different rings");
  require(a.degree() == b.degree(), "Borel order compares monomials of equal degree only");
  int pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb) return false;
  }
  return true;
}

std::vector<Monomial> borel_covers(const Monomial& a) {
  std::vector<Monomial> out;
  for (std::size_t i = 1; i < a.nvars(); ++i)
    if (a[i] > 0) out.push_back(a.moved(i, i - 1));
  return out;
}

std::vector<Monomial> borel_lower_covers(const Monomial& a) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i + 1 < a.nvars(); ++i)
    if (a[i] > 0) out.push_back(a.moved(i, i + 1));
  return out;
}

} // namespace gotzmann
