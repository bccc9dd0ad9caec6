#include "tep/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tep {

Rat pow2(long k) {
  BigInt p = BigInt(1) << static_cast<unsigned>(k >= 0 ? k : -k);
  return k >= 0 ? Rat(p) : Rat(1, p);
}

long floor_log2(const Rat& x) {
  if (x <= 0) throw std::invalid_argument("floor_log2: argument must be > 0");
  const BigInt num = numerator(x), den = denominator(x);
  // msb gives the bit length minus one; the guess is off by at most one.
  long guess = static_cast<long>(msb(num)) - static_cast<long>(msb(den));
  while (pow2(guess) > x) --guess;
  while (pow2(guess + 1) <= x) ++guess;
  return guess;
}

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bare sign");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("bad digit in integer: " + s);
  // strip leading zeros; cpp_int would read them as an octal prefix
  std::size_t first = s.find_first_not_of('0', i);
  if (first == std::string::npos) return BigInt(0);
  return BigInt((s[0] == '-' ? "-" : "") + s.substr(first));
}

Rat parse_decimal(const std::string& s) {
  // [sign] digits [. digits] [e exp]
  std::string mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::strtol(s.c_str() + e + 1, nullptr, 10);
    mant = s.substr(0, e);
  }
  std::string digits = mant;
  if (auto dot = mant.find('.'); dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  Rat r(parse_integer(digits));
  BigInt scale = 1;
  for (long i = 0; i < (exp10 >= 0 ? exp10 : -exp10); ++i) scale *= 10;
  return exp10 >= 0 ? r * Rat(scale) : r / Rat(scale);
}

}  // namespace

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num = parse_integer(s.substr(0, slash));
    BigInt den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
  }
  if (s.find('.') != std::string::npos || s.find_first_of("eE") != std::string::npos)
    return parse_decimal(s);
  return Rat(parse_integer(s));
}

std::string to_fraction_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string to_decimal_string(const Rat& x, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  if (x == 0) return "0";
  const bool neg = x < 0;
  Rat a = neg ? Rat(-x) : x;

  // exponent e with 10^e <= a < 10^(e+1)
  long e = 0;
  Rat p(1);
  if (a >= 1) {
    while (p * 10 <= a) { p *= 10; ++e; }
  } else {
    while (p > a) { p /= 10; --e; }
  }
  // round a / 10^(e - sig + 1) to nearest integer
  Rat scaled = a;
  long shift = e - sig_digits + 1;
  BigInt ten10 = 1;
  for (long i = 0; i < (shift >= 0 ? shift : -shift); ++i) ten10 *= 10;
  if (shift >= 0) scaled /= Rat(ten10); else scaled *= Rat(ten10);
  BigInt digits = static_cast<BigInt>((numerator(scaled) * 2 + denominator(scaled)) /
                                      (denominator(scaled) * 2));
  std::string d = digits.str();
  if (static_cast<int>(d.size()) > sig_digits) ++e;  // rounding carried over

  // strip trailing zeros of the significand
  while (d.size() > 1 && d.back() == '0') d.pop_back();

  std::ostringstream out;
  if (neg) out << '-';
  if (e >= 0 && e < sig_digits + 3) {
    if (static_cast<long>(d.size()) <= e) d.append(e + 1 - d.size(), '0');
    out << d.substr(0, e + 1);
    if (d.size() > static_cast<std::size_t>(e + 1)) out << '.' << d.substr(e + 1);
  } else if (e < 0 && e > -5) {
    out << "0." << std::string(-e - 1, '0') << d;
  } else {
    out << d.substr(0, 1);
    if (d.size() > 1) out << '.' << d.substr(1);
    out << 'e' << e;
  }
  return out.str();
}

double to_double(const Rat& x) { return static_cast<double>(x); }

}  // namespace tep
