#include "treeprod/numeric.hpp"

#include <charconv>
#include <cctype>
#include <cstdlib>

namespace treeprod {

Rational make_rational(long long num, long long den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Strips factors of `p` from `n`, returns how many were removed.
int strip_factor(mpz_class& n, unsigned long p) {
  int count = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++count;
  }
  return count;
}

}  // namespace

std::string scalar_str(const Rational& a) {
  mpz_class num = a.get_num();
  mpz_class den = a.get_den();
  if (den == 1) return num.get_str();

  mpz_class rest = den;
  int twos = strip_factor(rest, 2);
  int fives = strip_factor(rest, 5);
  if (rest != 1) return num.get_str() + "/" + den.get_str();

  // den = 2^a 5^b: scale to an integer over 10^k and place the point.
  int k = std::max(twos, fives);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(k));
  mpz_class scaled = num * pow10 / den;
  bool neg = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (static_cast<int>(digits.size()) <= k)
    digits.insert(0, static_cast<size_t>(k) - digits.size() + 1, '0');
  digits.insert(digits.size() - static_cast<size_t>(k), 1, '.');
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return neg ? "-" + digits : digits;
}

std::string scalar_str(double a) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), a);
  return std::string(buf, end);
}

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool neg = false;
  if (text.front() == '-' || text.front() == '+') {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return std::nullopt;
    mpz_class den{std::string(d)};
    if (den == 0) return std::nullopt;
    Rational r{mpz_class{std::string(n)}, den};
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  auto dot = text.find('.');
  std::string_view ipart = text.substr(0, dot);
  std::string_view fpart =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (ipart.empty() && fpart.empty()) return std::nullopt;
  if (!ipart.empty() && !all_digits(ipart)) return std::nullopt;
  if (!fpart.empty() && !all_digits(fpart)) return std::nullopt;

  std::string digits;
  digits.append(ipart);
  digits.append(fpart);
  mpz_class num{digits.empty() ? "0" : digits};
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, fpart.size());
  Rational r{num, den};
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::optional<double> parse_double(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = parse_double(text.substr(0, slash));
    auto den = parse_double(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return *num / *den;
  }
  std::string buf(text);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty()) return std::nullopt;
  return v;
}

}  // namespace treeprod
