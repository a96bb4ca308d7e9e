#include "coordlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace coordlab {

Rat make_rat(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  const auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw ParseError("malformed rational '" + s + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw ParseError("malformed rational '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw ParseError("malformed rational '" + s + "'");
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d == 0) throw ParseError("rational with zero denominator: '" + s + "'");
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& r, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
  // r canonical implies r^e canonical
  return out;
}

Int int_factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

double rat_to_double(const Rat& r) { return r.get_d(); }

Rat rat_upper_bound(double x, double rel_slack) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_upper_bound: non-finite input");
  if (x <= 0) return Rat(x);  // exact double-to-rational conversion
  Rat exact(x);               // exact
  Rat slack(1.0 + rel_slack);
  return exact * slack;
}

PowCost PowCost::finite(Rat v) {
  PowCost c;
  c.value_ = std::move(v);
  c.infeasible_ = false;
  return c;
}

PowCost PowCost::infeasible() {
  PowCost c;
  c.infeasible_ = true;
  return c;
}

const Rat& PowCost::value() const {
  if (infeasible_) throw std::logic_error("PowCost::value on infeasible sentinel");
  return value_;
}

PowCost& PowCost::operator+=(const PowCost& o) {
  if (o.infeasible_) infeasible_ = true;
  if (!infeasible_) value_ += o.value_;
  return *this;
}

std::string PowCost::str() const { return infeasible_ ? "inf" : rat_str(value_); }

double PowCost::approx_root(int k) const {
  if (infeasible_) return std::numeric_limits<double>::infinity();
  double v = value_.get_d();
  if (k == 1) return v;
  return std::pow(v, 1.0 / static_cast<double>(k));
}

}  // namespace coordlab
