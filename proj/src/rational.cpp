#include "eisenlab/rational.hpp"

#include <mutex>
#include <numeric>
#include <vector>

#include "eisenlab/errors.hpp"

namespace eisenlab {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) throw ParseError("empty integer");
  std::size_t start = s.front() == '-' ? 1 : 0;
  if (start == s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer '" + std::string(s) + "'");
  }
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational bernoulli(int n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
  while (static_cast<int>(table.size()) <= n) {
    int m = static_cast<int>(table.size());
    Rational sum = 0;
    Integer binom = 1;
    for (int j = 0; j < m; ++j) {
      sum += binom * table[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    table.push_back(-sum / (m + 1));
  }
  return table[n];
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long inverse_mod(long a, long n) {
  if (n == 1) return 0;
  long t = 0, new_t = 1, r = n, new_r = mod_floor(a, n);
  while (new_r != 0) {
    long quot = r / new_r;
    long tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("inverse_mod: not invertible");
  return mod_floor(t, n);
}

}  // namespace eisenlab
