#include "lck/numeric.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace lck {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not a number: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

// Decimal with optional fraction and exponent, e.g. -12.5e-3.
Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = s.substr(e + 1);
    if (!es.empty() && es.front() == '+') es.remove_prefix(1);
    auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), exponent);
    if (ec != std::errc() || p != es.data() + es.size() || es.empty())
      throw ParseError("bad exponent in '" + std::string(whole) + "'");
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("not a number: '" + std::string(whole) + "'");
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw ParseError("not a number: '" + std::string(whole) + "'");
    digits = std::string(s);
  }
  if (digits.empty()) digits = "0";
  mpz_class num(digits, 10);
  long shift = exponent - frac_len;
  if (shift > 100000 || shift < -100000) throw ParseError("exponent out of range in '" + std::string(whole) + "'");
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(num * p10) : Rational(num, p10);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(s, text);
}

double parse_double(std::string_view text) {
  std::string_view s = trim(text);
  if (s.find('/') != std::string_view::npos) return parse_rational(s).get_d();
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw ParseError("not a number: '" + std::string(text) + "'");
  return v;
}

std::string format_rational(const Rational& x) { return x.get_str(); }

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, p);
}

int bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a.front().size());
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(piv)]);
    const auto& pr = a[static_cast<std::size_t>(r)];
    const mpz_class& p = pr[static_cast<std::size_t>(c)];
    for (int i = r + 1; i < rows; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      mpz_class f = row[static_cast<std::size_t>(c)];
      for (int j = c + 1; j < cols; ++j) {
        mpz_class v = p * row[static_cast<std::size_t>(j)] - f * pr[static_cast<std::size_t>(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        row[static_cast<std::size_t>(j)] = std::move(v);
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

}  // namespace lck
