#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <string>

#include "mgt/errors.hpp"

namespace mgt {

// Exact root of unity zeta_N^e, stored in lowest terms: gcd(e, N) = 1, or
// (N, e) = (1, 0) for the value 1.  All scalar values produced by forms,
// pairings and cocycles on finite groups are torsion, so this type is the
// whole coefficient system; there is no floating point in the core.
class RootOfUnity {
 public:
  RootOfUnity() : order_(1), exp_(0) {}

  RootOfUnity(long long order, long long exp) {
    if (order <= 0) fail(ErrorKind::ParseError, "root of unity order must be positive");
    check_order_cap(order);
    long long e = exp % order;
    if (e < 0) e += order;
    long long g = std::gcd(e, order);
    if (e == 0) {
      order_ = 1;
      exp_ = 0;
    } else {
      order_ = order / g;
      exp_ = e / g;
    }
  }

  static RootOfUnity one() { return RootOfUnity(); }
  static RootOfUnity minus_one() { return RootOfUnity(2, 1); }

  long long order() const { return order_; }
  long long exponent() const { return exp_; }
  bool is_one() const { return order_ == 1; }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    long long g = std::gcd(a.order_, b.order_);
    long long l;
    if (__builtin_mul_overflow(a.order_ / g, b.order_, &l))
      fail(ErrorKind::CapExceeded, "root-of-unity order overflow");
    check_order_cap(l);
    long long e = a.exp_ * (l / a.order_) + b.exp_ * (l / b.order_);
    return RootOfUnity(l, e % l);
  }

  RootOfUnity& operator*=(const RootOfUnity& b) { return *this = *this * b; }

  RootOfUnity inverse() const { return RootOfUnity(order_, order_ - exp_); }

  friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) {
    return a * b.inverse();
  }

  RootOfUnity pow(long long k) const {
    long long e = static_cast<long long>((static_cast<__int128>(exp_) * k) % order_);
    return RootOfUnity(order_, e);
  }

  // Exponent of this value seen inside the larger cyclic group mu_N'.
  long long embed(long long big_order) const {
    if (big_order <= 0 || big_order % order_ != 0)
      fail(ErrorKind::NotDivisible,
           "order " + std::to_string(order_) + " does not divide " + std::to_string(big_order));
    return exp_ * (big_order / order_);
  }

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.order_ == b.order_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }
  friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.exp_ < b.exp_;
  }

  // Float image, used by test oracles only.
  std::complex<double> approx() const {
    const double tau = 6.283185307179586476925286766559;
    double t = tau * static_cast<double>(exp_) / static_cast<double>(order_);
    return {std::cos(t), std::sin(t)};
  }

  std::string str() const {
    if (order_ == 1) return "1";
    if (order_ == 2) return "-1";
    return "zeta" + std::to_string(order_) + "^" + std::to_string(exp_);
  }

  // Orders above this are treated as mis-specified input, not grown silently.
  static long long order_cap() { return cap_; }
  static void set_order_cap(long long cap) { cap_ = cap; }

 private:
  static void check_order_cap(long long n) {
    if (n > cap_)
      fail(ErrorKind::CapExceeded, "root-of-unity order " + std::to_string(n) +
                                       " exceeds cap " + std::to_string(cap_));
  }

  inline static long long cap_ = 1LL << 20;

  long long order_;
  long long exp_;
};

}  // namespace mgt
