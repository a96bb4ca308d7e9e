#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coordlab {

using Rat = mpq_class;
using Int = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// num/den in lowest terms; throws ParseError on a zero denominator.
Rat make_rat(long num, long den);

// Accepts "num/den" or a bare (possibly signed) integer string.
Rat parse_rat(const std::string& s);

// Canonical form: "num" when the denominator is 1, else "num/den".
std::string rat_str(const Rat& r);

Rat rat_pow(const Rat& r, unsigned long e);
Int int_factorial(unsigned long n);

double rat_to_double(const Rat& r);

// A rational strictly above x*(1+rel_slack) for x > 0; exact for x <= 0.
// Turns an approximate real constant into an exact certificate that stays
// an upper bound of the true value.
Rat rat_upper_bound(double x, double rel_slack = 1e-9);

// Exact k-th power of a job cost, or the infeasible sentinel. The sentinel
// orders above every finite value and absorbs under addition.
class PowCost {
 public:
  PowCost() = default;  // finite zero

  static PowCost finite(Rat v);
  static PowCost infeasible();

  bool is_infeasible() const { return infeasible_; }
  bool is_finite() const { return !infeasible_; }

  // requires is_finite()
  const Rat& value() const;

  PowCost& operator+=(const PowCost& o);
  friend PowCost operator+(PowCost a, const PowCost& b) {
    a += b;
    return a;
  }

  friend bool operator==(const PowCost& a, const PowCost& b) {
    if (a.infeasible_ || b.infeasible_) return a.infeasible_ == b.infeasible_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const PowCost& a, const PowCost& b) { return !(a == b); }
  friend bool operator<(const PowCost& a, const PowCost& b) {
    if (a.infeasible_) return false;
    if (b.infeasible_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const PowCost& a, const PowCost& b) { return b < a; }
  friend bool operator<=(const PowCost& a, const PowCost& b) { return !(b < a); }
  friend bool operator>=(const PowCost& a, const PowCost& b) { return !(a < b); }

  // "inf" or the canonical rational string
  std::string str() const;

  // value^(1/k) as a double; +inf for the sentinel
  double approx_root(int k) const;

 private:
  Rat value_{0};
  bool infeasible_ = false;
};

}  // namespace coordlab
