#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stg {

/// An exact probability num/den in [0, 1], kept in lowest terms.
///
/// Documents carry probabilities either as fractions ("1/3") or finite
/// decimals ("0.25"); both are stored exactly so that the rational code
/// paths never see a rounded value.
class Probability {
 public:
  constexpr Probability() = default;

  /// Throws PreconditionError unless 0 <= num/den <= 1 and den > 0.
  Probability(std::int64_t num, std::int64_t den);

  static Probability zero() { return {0, 1}; }
  static Probability one() { return {1, 1}; }

  /// Accepts "p/q", "0.375", "1", "0". Throws ParseError otherwise.
  static Probability parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  mpq_class to_rational() const;

  Probability complement() const { return {den_ - num_, den_}; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == den_; }

  /// Canonical text: "0", "1" or "num/den".
  std::string to_string() const;

  friend bool operator==(const Probability&, const Probability&) = default;
  friend std::strong_ordering operator<=>(const Probability& a, const Probability& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Scalar conversion used by the templated exact/float algorithms.
template <class Scalar>
Scalar to_scalar(const Probability& p);

template <>
inline double to_scalar<double>(const Probability& p) {
  return p.to_double();
}

template <>
inline mpq_class to_scalar<mpq_class>(const Probability& p) {
  return p.to_rational();
}

inline double to_double(double x) { return x; }
inline double to_double(const mpq_class& x) { return x.get_d(); }

}  // namespace stg
