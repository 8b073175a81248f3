#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "prstar/errors.hpp"

namespace prstar {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always reduced, denominator > 0.
///
/// Every probability in the library is one of these; there is no floating
/// point anywhere on a decision path.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Ratio(long long n, long long d) : num_(n), den_(d) { normalize(); }
  explicit Ratio(BigInt n) : num_(std::move(n)), den_(1) {}
  explicit Ratio(long long n) : num_(n), den_(1) {}

  static Ratio zero() { return Ratio(); }
  static Ratio one() { return Ratio(1); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_probability() const { return num_ >= 0 && num_ <= den_; }

  friend Ratio operator+(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Ratio operator-(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Ratio operator*(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.num_ == 0) throw Error("Ratio: division by zero");
    return Ratio(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return b <= a; }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) {
    return os << r.str();
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error("Ratio: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

inline BigInt bigint_pow(BigInt base, unsigned long long exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

namespace detail {

// Integer-only directed-rounding magnitude: value in [mant*2^exp2, (mant+1)*2^exp2).
// Used to bracket huge powers without materializing them.
struct Scaled {
  BigInt mant;  // > 0
  long long exp2 = 0;
};

inline void truncate_down(Scaled& s, unsigned prec) {
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(s.mant)) + 1;
  if (bits > prec) {
    unsigned drop = bits - prec;
    s.mant >>= drop;
    s.exp2 += drop;
  }
}

inline void truncate_up(Scaled& s, unsigned prec) {
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(s.mant)) + 1;
  if (bits > prec) {
    unsigned drop = bits - prec;
    BigInt rem_mask = (BigInt(1) << drop) - 1;
    bool inexact = (s.mant & rem_mask) != 0;
    s.mant >>= drop;
    if (inexact) s.mant += 1;
    s.exp2 += drop;
  }
}

inline Scaled mul_down(const Scaled& a, const Scaled& b, unsigned prec) {
  Scaled r{a.mant * b.mant, a.exp2 + b.exp2};
  truncate_down(r, prec);
  return r;
}

inline Scaled mul_up(const Scaled& a, const Scaled& b, unsigned prec) {
  Scaled r{a.mant * b.mant, a.exp2 + b.exp2};
  truncate_up(r, prec);
  return r;
}

// Lower bound for (num/den)^exp, num/den >= 1.
inline Scaled pow_down(const BigInt& num, const BigInt& den, unsigned long long exp,
                       unsigned prec) {
  // base lower bound: floor(num * 2^prec / den) / 2^prec
  Scaled base{(num << prec) / den, -static_cast<long long>(prec)};
  Scaled r{BigInt(1), 0};
  while (exp) {
    if (exp & 1) r = mul_down(r, base, prec);
    base = mul_down(base, base, prec);
    exp >>= 1;
  }
  return r;
}

// Upper bound for (num/den)^exp, num/den >= 1.
inline Scaled pow_up(const BigInt& num, const BigInt& den, unsigned long long exp,
                     unsigned prec) {
  BigInt m = (num << prec) / den;
  if (((num << prec) % den) != 0) m += 1;
  Scaled base{m, -static_cast<long long>(prec)};
  Scaled r{BigInt(1), 0};
  while (exp) {
    if (exp & 1) r = mul_up(r, base, prec);
    base = mul_up(base, base, prec);
    exp >>= 1;
  }
  return r;
}

// -1, 0 (undecided), +1 for a.value vs b.value where a is an upper/lower pair.
inline int compare_scaled(const Scaled& lo, const Scaled& hi_other) {
  // lo > hi_other  =>  definitely greater
  long long shift = lo.exp2 - hi_other.exp2;
  BigInt l = lo.mant, r = hi_other.mant;
  if (shift > 0)
    l <<= static_cast<unsigned>(shift);
  else
    r <<= static_cast<unsigned>(-shift);
  if (l > r) return 1;
  return 0;
}

// Exact decision of p^a > (2b/a)^(6b) with cost control: a bit-length
// shortcut, then a direct bignum comparison when small enough, otherwise
// interval powering with escalating precision.  direct_bit_budget is exposed
// so tests can force the interval route and cross-check it against the
// direct one.
inline bool threshold_compare(const BigInt& p, const BigInt& a, const BigInt& b,
                              unsigned long long direct_bit_budget = 1u << 20) {
  // lhs = p^a, rhs = (2b/a)^(6b); both sides > 0, rhs >= 2^(6b) since a <= b.
  unsigned long long pa_bits =
      static_cast<unsigned long long>(boost::multiprecision::msb(p)) + 1;
  // p^a <= 2^(a*pa_bits) <= 2^(6b) <= rhs  =>  false.
  if (a * pa_bits <= 6 * b) return false;

  // From here on 6b < a*pa_bits, so exponents fit in 64 bits whenever a does.
  if (a * pa_bits > (BigInt(1) << 62)) throw Error("threshold: exponent too large");
  unsigned long long ea = a.convert_to<unsigned long long>();
  unsigned long long e6 = BigInt(6 * b).convert_to<unsigned long long>();

  unsigned long long rhs_bits =
      e6 * (static_cast<unsigned long long>(boost::multiprecision::msb(BigInt(2 * b))) + 1);
  if (ea * pa_bits + rhs_bits <= direct_bit_budget) {
    BigInt lhs = bigint_pow(p, ea) * bigint_pow(a, e6);
    BigInt rhs = bigint_pow(2 * b, e6);
    return lhs > rhs;
  }

  for (unsigned prec = 128;; prec *= 2) {
    Scaled lhs_lo = pow_down(p, BigInt(1), ea, prec);
    Scaled lhs_hi = pow_up(p, BigInt(1), ea, prec);
    Scaled rhs_lo = pow_down(2 * b, a, e6, prec);
    Scaled rhs_hi = pow_up(2 * b, a, e6, prec);
    if (compare_scaled(lhs_lo, rhs_hi) == 1) return true;
    if (compare_scaled(rhs_lo, lhs_hi) == 1) return false;
    if (prec > (1u << 16)) {
      // Exact fallback; interval separation failed, which for odd p cannot be
      // an equality, so this only runs on adversarial near-ties.
      BigInt lhs = bigint_pow(p, ea) * bigint_pow(a, e6);
      BigInt rhs = bigint_pow(2 * b, e6);
      return lhs > rhs;
    }
  }
}

}  // namespace detail

/// Exact test of p > (2/eps)^(6/eps) for a rational eps = a/b in (0,1].
/// Both sides are raised to the power a, which clears the rational exponent:
/// p^a > (2b/a)^(6b).  Decided entirely in integer arithmetic.
inline bool prime_exceeds_threshold(const BigInt& p, const Ratio& eps,
                                    unsigned long long direct_bit_budget = 1u << 20) {
  if (eps.num() <= 0 || eps > Ratio(1))
    throw PreconditionNotMet("threshold: eps must lie in (0,1]");
  return detail::threshold_compare(p, eps.num(), eps.den(), direct_bit_budget);
}

}  // namespace prstar
