#include "centkit/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace centkit {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

// INT64_MIN is never stored inline so that negation can't overflow.
bool mul_ovf(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return __builtin_mul_overflow(a, b, &out) || out == kMin;
}

bool add_ovf(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return __builtin_add_overflow(a, b, &out) || out == kMin;
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

bool add_small(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
               std::int64_t& rn, std::int64_t& rd) {
  if (b == 1 && d == 1) {
    rd = 1;
    return !add_ovf(a, c, rn);
  }
  const std::int64_t g = std::gcd(b, d);
  const std::int64_t bg = b / g;
  std::int64_t t1, t2, t;
  if (mul_ovf(a, d / g, t1) || mul_ovf(c, bg, t2) || add_ovf(t1, t2, t)) return false;
  if (t == 0) {
    rn = 0;
    rd = 1;
    return true;
  }
  // gcd(t, b*d/g) == gcd(t, g) for reduced inputs.
  const std::int64_t g2 = std::gcd(abs64(t), g);
  if (mul_ovf(bg, d / g2, rd)) return false;
  rn = t / g2;
  return true;
}

bool mul_small(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
               std::int64_t& rn, std::int64_t& rd) {
  if (a == 0 || c == 0) {
    rn = 0;
    rd = 1;
    return true;
  }
  const std::int64_t g1 = std::gcd(abs64(a), d);
  const std::int64_t g2 = std::gcd(abs64(c), b);
  return !mul_ovf(a / g1, c / g2, rn) && !mul_ovf(b / g2, d / g1, rd);
}

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != kMin; }

}  // namespace

Rational::Rational(std::int64_t value) noexcept {
  if (value == kMin) {
    big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(value)));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (num == kMin || den == kMin) {
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    assign(q);
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(abs64(num), den);
  num_ = num / g;
  den_ = den / g;
}

Rational::Rational(const mpq_class& value) { assign(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_) {
      *big_ = *other.big_;
    } else {
      big_ = std::make_unique<mpq_class>(*other.big_);
    }
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign(const mpq_class& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (fits(n) && fits(d)) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    if (big_) {
      *big_ = value;
    } else {
      big_ = std::make_unique<mpq_class>(value);
    }
    num_ = 0;
    den_ = 1;
  }
}

bool Rational::is_integer() const noexcept {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t n, d;
    if (add_small(num_, den_, rhs.num_, rhs.den_, n, d)) {
      num_ = n;
      den_ = d;
      return *this;
    }
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t n, d;
    if (add_small(num_, den_, -rhs.num_, rhs.den_, n, d)) {
      num_ = n;
      den_ = d;
      return *this;
    }
  }
  assign(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t n, d;
    if (mul_small(num_, den_, rhs.num_, rhs.den_, n, d)) {
      num_ = n;
      den_ = d;
      return *this;
    }
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !rhs.big_) {
    const std::int64_t c = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    const std::int64_t d = abs64(rhs.num_);
    std::int64_t n, dd;
    if (mul_small(num_, den_, c, d, n, dd)) {
      num_ = n;
      den_ = dd;
      return *this;
    }
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

Rational operator-(const Rational& value) {
  if (!value.big_) {
    Rational r;
    r.num_ = -value.num_;
    r.den_ = value.den_;
    return r;
  }
  return Rational(mpq_class(-*value.big_));
}

bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
  if (lhs.big_ || rhs.big_) {
    // Canonical storage: a big value never equals a small one.
    return lhs.big_ && rhs.big_ && *lhs.big_ == *rhs.big_;
  }
  return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.big_ || rhs.big_) {
    const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  __extension__ using wide = __int128;
  const wide a = static_cast<wide>(lhs.num_) * rhs.den_;
  const wide b = static_cast<wide>(rhs.num_) * lhs.den_;
  return a <=> b;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

void submul(Rational& x, const Rational& c, const Rational& y) {
  if (c.is_zero() || y.is_zero()) return;
  if (c.is_one()) {
    x -= y;
    return;
  }
  x -= c * y;
}

}  // namespace centkit
