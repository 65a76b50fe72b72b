#include "fekete/telephone.hpp"

#include <cctype>
#include <charconv>

#include "fekete/errors.hpp"

namespace fekete {

namespace {

void check_varkappa(const Rational& varkappa) {
  if (varkappa < 0) {
    throw Error(ErrorCode::ParameterOutOfRange, "varkappa must be non-negative");
  }
}

boost::multiprecision::cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorCode::BadParameter, "not a number: '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::BadParameter, "not a number: '" + std::string(whole) + "'");
    }
  }
  // cpp_int reads a leading zero as an octal prefix.
  const auto first = std::min(digits.find_first_not_of('0'), digits.size() - 1);
  return boost::multiprecision::cpp_int(std::string(digits.substr(first)));
}

}  // namespace

Rational gtn(const Rational& varkappa, long n) {
  if (n < 0) throw Error(ErrorCode::NegativeIndex, "gtn index must be >= 0");
  check_varkappa(varkappa);
  Rational prev = 1;  // T(m-2)
  Rational cur = 1;   // T(m-1)
  for (long m = 2; m <= n; ++m) {
    Rational next = cur + varkappa * (m - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

GtnSequence gtn_sequence(const Rational& varkappa, std::size_t max_n) {
  check_varkappa(varkappa);
  GtnSequence seq{varkappa, {}};
  seq.values.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (n < 2) {
      seq.values.emplace_back(1);
    } else {
      seq.values.push_back(seq.values[n - 1] + varkappa * static_cast<long>(n - 1) * seq.values[n - 2]);
    }
  }
  return seq;
}

TruncatedSeries x_series(double varkappa, std::size_t order) {
  TruncatedSeries exponent(order, {0.0, 1.0, varkappa / 2.0});
  return exp_series(exponent);
}

double gtn_via_egf(double varkappa, std::size_t n) {
  double factorial = 1.0;
  for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
  return factorial * x_series(varkappa, n)[n].real();
}

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_integer(text.substr(0, slash), whole);
    const auto den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::BadParameter, "zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      const std::string_view exp_text = text.substr(e + 1);
      const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) {
        throw Error(ErrorCode::BadParameter, "not a number: '" + std::string(whole) + "'");
      }
      text = text.substr(0, e);
    }
    std::string digits;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
      exponent -= static_cast<long>(text.size() - dot - 1);
      if (digits.empty()) throw Error(ErrorCode::BadParameter, "not a number: '" + std::string(whole) + "'");
    } else {
      digits = std::string(text);
    }
    value = Rational(parse_integer(digits, whole));
    const Rational ten = 10;
    for (long k = 0; k < exponent; ++k) value *= ten;
    for (long k = 0; k > exponent; --k) value /= ten;
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return value.str();
}

}  // namespace fekete
