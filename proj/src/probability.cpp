#include "stg/probability.hpp"

#include <charconv>
#include <numeric>

#include "stg/errors.hpp"

namespace stg {

Probability::Probability(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw PreconditionError("probability " + std::to_string(num) + "/" + std::to_string(den) +
                            " outside [0,1]");
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  // from_chars would accept a leading '-', so "-0.1" must be caught here.
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("malformed probability '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed probability '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Probability Probability::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty probability");
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = parse_digits(text.substr(0, slash), text);
    den = parse_digits(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (frac_part.size() > 17) {
      throw ParseError("too many decimal digits in '" + std::string(text) + "'");
    }
    const std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
    const std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    if (whole > 1) {
      throw ParseError("probability '" + std::string(text) + "' outside [0,1]");
    }
    num = whole * den + frac;
  } else {
    num = parse_digits(text, text);
  }
  if (num > den) throw ParseError("probability '" + std::string(text) + "' outside [0,1]");
  return {num, den};
}

mpq_class Probability::to_rational() const {
  mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
  q.canonicalize();
  return q;
}

std::string Probability::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Probability& a, const Probability& b) {
  // Cross-multiplication fits in 128 bits.
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace stg
