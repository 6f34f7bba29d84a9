#include "crossnum/rational.hpp"

#include <cctype>
#include <ostream>

namespace crossnum {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  return Integer(text, 10);
}

}  // namespace

Rational::Rational(std::int64_t v) : value_(static_cast<long>(v)) {}

Rational::Rational(const Integer& v) : value_(v) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    return Rational(num, Integer(std::string(den_text), 10));
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (!all_digits(frac_part)) throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    const bool negative = !int_part.empty() && int_part.front() == '-';
    std::string_view int_digits = int_part;
    if (!int_digits.empty() && (int_digits.front() == '-' || int_digits.front() == '+')) int_digits.remove_prefix(1);
    if (!int_digits.empty() && !all_digits(int_digits)) throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    Integer scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    const Integer whole = int_digits.empty() ? Integer(0) : Integer(std::string(int_digits), 10);
    Integer num = whole * scale + Integer(std::string(frac_part), 10);
    if (negative) num = -num;
    return Rational(num, scale);
  }

  return Rational(parse_integer(text));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  Integer scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half away from zero
  const Integer scaled_num = abs(value_.get_num()) * scale * 2 + value_.get_den();
  Integer q = scaled_num / (value_.get_den() * 2);
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sign() < 0 && q != 0) s.insert(0, "-");
  return s;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace crossnum
