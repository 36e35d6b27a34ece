#include "comblab/rational.hpp"

#include <cctype>

#include "comblab/errors.hpp"

namespace comblab {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw UsageError("make_rational: zero denominator");
  }
  Rational r{BigInt{std::to_string(num)}, BigInt{std::to_string(den)}};
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) {
  // mpq_get_d truncates; dividing two correctly rounded mpf values keeps all
  // 53 bits even when numerator and denominator overflow a double.
  mpf_class num(r.get_num(), 128);
  mpf_class den(r.get_den(), 128);
  mpf_class q(0, 128);
  q = num / den;
  return q.get_d();
}

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer(num_text) || !is_integer(den_text) || den_text[0] == '-') {
    throw UsageError("parse_rational: malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(s[0] == '+' ? s.substr(1) : s);
  };
  BigInt num{strip_plus(num_text)};
  BigInt den{strip_plus(den_text)};
  if (den == 0) {
    throw UsageError("parse_rational: zero denominator");
  }
  Rational r{num, den};
  r.canonicalize();
  return r;
}

Rational pow2_inverse(unsigned k) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Rational{BigInt{1}, den};
}

}  // namespace comblab
