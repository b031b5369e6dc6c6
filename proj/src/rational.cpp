#include "malle/rational.hpp"

#include <cctype>

#include "malle/errors.hpp"

namespace malle {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class p(n, 10), q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_string(r);
}

Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace malle
