#include "cag/rational.hpp"

#include <string>

#include "cag/error.hpp"

namespace cag {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational ratio(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational mod_one(const Rational& value) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  Rational out = value - Rational(fl);
  out.canonicalize();
  return out;
}

long floor_to_long(const Rational& value) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return fl.get_si();
}

std::string to_fraction_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  const mpz_class p{std::string(num.front() == '+' ? num.substr(1) : num)};
  const mpz_class q{std::string(den)};
  if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

}  // namespace cag
