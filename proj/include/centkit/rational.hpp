#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace centkit {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an int64 are stored inline;
/// anything larger is promoted to a GMP rational and demoted again as soon as
/// it fits. The representation is therefore canonical: two equal values always
/// have the same storage kind, which keeps equality a field-wise compare.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value) noexcept;  // NOLINT(google-explicit-constructor)
  Rational(int value) noexcept : Rational(static_cast<std::int64_t>(value)) {}
  /// Throws std::domain_error if `den` is zero.
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const noexcept;
  [[nodiscard]] int sign() const noexcept;
  /// True while the value is held in the int64 fast path.
  [[nodiscard]] bool is_small() const noexcept { return !big_; }

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

 private:
  void assign(const mpq_class& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// x -= c * y, the elimination kernel.
void submul(Rational& x, const Rational& c, const Rational& y);

}  // namespace centkit
