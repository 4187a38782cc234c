#include "fracbound/rational.hpp"

#include <cctype>

#include "fracbound/errors.hpp"

namespace fracbound {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw parse_error("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw parse_error("malformed rational literal '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw parse_error("zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!is_integer_literal(head)) throw parse_error("malformed rational literal '" + text + "'");
    for (char c : tail)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw parse_error("malformed rational literal '" + text + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    mpz_class whole(head);
    mpz_class frac = tail.empty() ? mpz_class(0) : mpz_class(tail);
    bool neg = whole < 0 || s[0] == '-';
    mpz_class numer = abs(whole) * scale + frac;
    if (neg) numer = -numer;
    Rational r(numer, scale);
    r.canonicalize();
    return r;
  }

  if (!is_integer_literal(s)) throw parse_error("malformed rational literal '" + text + "'");
  return Rational(mpz_class(s));
}

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();  // output is always in lowest terms
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(result);
}

Rational rational_sum(const std::vector<Rational>& values) {
  Rational total(0);
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace fracbound
