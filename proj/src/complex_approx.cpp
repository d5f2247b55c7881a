#include "eisenlab/complex_approx.hpp"

#include <boost/math/constants/constants.hpp>

#include <atomic>
#include <cstdlib>
#include <sstream>

namespace eisenlab {

namespace {
std::atomic<int> digits_override{0};
}  // namespace

void set_default_digits(int digits) { digits_override = digits; }

int default_digits() {
  if (int d = digits_override.load()) return d;
  if (const char* env = std::getenv("EISENLAB_DIGITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 15 && v <= 10000) return static_cast<int>(v);
  }
  return 60;
}

PrecisionGuard::PrecisionGuard(int digits) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real real_from(const Rational& x) {
  Real num(x.get_num().get_mpz_t());
  Real den(x.get_den().get_mpz_t());
  return num / den;
}

Real pi_real() { return boost::math::constants::pi<Real>(); }

ComplexApprox::ComplexApprox()
    : re(0), im(0), digits(static_cast<int>(Real::default_precision())) {}

ComplexApprox::ComplexApprox(Real re_, Real im_)
    : re(std::move(re_)), im(std::move(im_)), digits(static_cast<int>(Real::default_precision())) {}

ComplexApprox ComplexApprox::from_rational(const Rational& x) { return {real_from(x), Real(0)}; }

ComplexApprox ComplexApprox::unit(const Real& theta) { return {cos(theta), sin(theta)}; }

ComplexApprox& ComplexApprox::operator+=(const ComplexApprox& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexApprox& ComplexApprox::operator-=(const ComplexApprox& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexApprox& ComplexApprox::operator*=(const ComplexApprox& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexApprox& ComplexApprox::operator/=(const ComplexApprox& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexApprox& ComplexApprox::operator*=(const Real& s) {
  re *= s;
  im *= s;
  return *this;
}

ComplexApprox ComplexApprox::operator-() const { return {-re, -im}; }

Real ComplexApprox::abs() const { return sqrt(re * re + im * im); }

std::string ComplexApprox::to_string(int shown_digits) const {
  std::ostringstream os;
  os.precision(shown_digits);
  os << re << (im < 0 ? " - " : " + ") << boost::multiprecision::abs(im) << "i";
  return os.str();
}

ComplexApprox exp(const ComplexApprox& z) {
  Real mag = boost::multiprecision::exp(z.re);
  return {mag * cos(z.im), mag * sin(z.im)};
}

ComplexApprox i_power(int k) {
  switch (mod_floor(k, 4)) {
    case 0: return {Real(1), Real(0)};
    case 1: return {Real(0), Real(1)};
    case 2: return {Real(-1), Real(0)};
    default: return {Real(0), Real(-1)};
  }
}

}  // namespace eisenlab
