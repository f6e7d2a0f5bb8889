#include "stabforge/rational.hpp"

#include <cctype>

namespace stabforge {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational rational_from_string(std::string_view text) {
  std::size_t pos = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (pos < n && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) out.push_back(text[pos++]);
    if (pos == start) throw ParseError(pos, "expected digits in rational literal");
  };
  std::string num, den;
  read_digits(num);
  if (pos < n && text[pos] == '/') {
    ++pos;
    read_digits(den);
  } else {
    den = "1";
  }
  if (pos != n) throw ParseError(pos, "trailing characters in rational literal");
  Rational q = make_rational(Integer(num), Integer(den));
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace stabforge
