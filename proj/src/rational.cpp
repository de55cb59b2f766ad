#include "gotzmann/rational.hpp"

#include "gotzmann/error.hpp"

#include <cctype>

namespace gotzmann {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  require(den != 0, "rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

BigRational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw ParseError("bad rational '" + std::string(text) + "'");
  } else {
    if (!parse_integer(trim(s.substr(0, slash)), num) ||
        !parse_integer(trim(s.substr(slash + 1)), den) || den == 0)
      throw ParseError("bad rational '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

BigRational pow(const BigRational& q, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
  return BigRational(num, den);
}

BigInt lcm_of_denominators(const BigRational* first, const BigRational* last) {
  BigInt l = 1;
  for (; first != last; ++first) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), first->get_den().get_mpz_t());
  return l;
}

} // namespace gotzmann
