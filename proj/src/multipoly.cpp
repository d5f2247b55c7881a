#include "eisenlab/multipoly.hpp"

#include <algorithm>

#include "eisenlab/errors.hpp"

namespace eisenlab {

char var_name(Var v) {
  static constexpr char names[] = {'p', 'q', 'A', 'B'};
  return names[static_cast<int>(v)];
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

MultiPoly MultiPoly::variable(Var v) {
  Exponent e{};
  e[static_cast<int>(v)] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly m;
  if (c != 0) m.terms_.emplace(e, c);
  return m;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

int MultiPoly::degree(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  if (leading_coefficient() < 0) out = -out;
  return out;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return {};
  Rational inv = 1 / content();
  MultiPoly out = *this;
  out *= inv;
  return out;
}

Exponent MultiPoly::monomial_gcd() const {
  if (terms_.empty()) return {};
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

std::map<int, MultiPoly> MultiPoly::coefficients_in(Var v) const {
  const int idx = static_cast<int>(v);
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    rest[idx] = 0;
    out[e[idx]].terms_.emplace(rest, c);
  }
  return out;
}

std::optional<Var> MultiPoly::main_variable() const {
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (degree(static_cast<Var>(i)) > 0) return static_cast<Var>(i);
  }
  return std::nullopt;
}

Rational MultiPoly::evaluate(const Point& at) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kNumVars; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= at[i];
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (g.is_constant()) return f * (1 / g.leading_coefficient());
  const Exponent& lg = g.leading_exponent();
  const Rational lc_inv = 1 / g.leading_coefficient();
  MultiPoly quotient, rest = f;
  while (!rest.is_zero()) {
    const Exponent lr = rest.leading_exponent();
    Exponent shift;
    for (int i = 0; i < kNumVars; ++i) {
      shift[i] = lr[i] - lg[i];
      if (shift[i] < 0) return std::nullopt;
    }
    MultiPoly t = MultiPoly::monomial(shift, rest.leading_coefficient() * lc_inv);
    quotient += t;
    rest -= t * g;
  }
  return quotient;
}

namespace {

MultiPoly var_power(Var v, int e) {
  Exponent x{};
  x[static_cast<int>(v)] = e;
  return MultiPoly::monomial(x);
}

MultiPoly exact(const MultiPoly& f, const MultiPoly& g) {
  auto q = divide_exact(f, g);
  if (!q) throw Error("internal: expected exact polynomial division");
  return *std::move(q);
}

MultiPoly content_in(const MultiPoly& f, Var v) {
  MultiPoly c;
  for (const auto& [deg, coeff] : f.coefficients_in(v)) {
    c = gcd(c, coeff);
    if (c.is_constant()) return MultiPoly(1);
  }
  return c;
}

// Sparse pseudo-remainder of a by b with respect to v.
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, Var v) {
  const int db = b.degree(v);
  const MultiPoly lcb = b.coefficients_in(v).rbegin()->second;
  while (!a.is_zero() && a.degree(v) >= db) {
    const int da = a.degree(v);
    const MultiPoly lca = a.coefficients_in(v).rbegin()->second;
    a = lcb * a - lca * var_power(v, da - db) * b;
  }
  return a;
}

}  // namespace

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return g.primitive();
  if (g.is_zero()) return f.primitive();
  if (f.is_constant() || g.is_constant()) return MultiPoly(1);

  auto vf = f.main_variable();
  auto vg = g.main_variable();
  const Var v = static_cast<Var>(std::max(static_cast<int>(*vf), static_cast<int>(*vg)));
  if (f.degree(v) == 0) return gcd(f, content_in(g, v));
  if (g.degree(v) == 0) return gcd(content_in(f, v), g);

  const MultiPoly cf = content_in(f, v);
  const MultiPoly cg = content_in(g, v);
  const MultiPoly c = gcd(cf, cg);
  MultiPoly a = exact(f, cf);
  MultiPoly b = exact(g, cg);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);

  MultiPoly last;
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) {
      last = b;
      break;
    }
    if (r.degree(v) == 0) {
      last = MultiPoly(1);
      break;
    }
    a = std::move(b);
    b = exact(r, content_in(r, v)).primitive();
  }
  if (!last.is_constant()) last = exact(last, content_in(last, v));
  return (c * last).primitive();
}

}  // namespace eisenlab
