#include "eisenlab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "eisenlab/errors.hpp"

namespace eisenlab {

namespace {

/// Per-conductor data: Phi_N and the reductions of zeta^j, 0 <= j < N.
struct CycloField {
  int n;
  int phi;
  std::vector<std::vector<long>> power_table;
};

std::vector<long> poly_exact_div(std::vector<long> num, const std::vector<long>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

std::shared_mutex& cache_mutex() {
  static std::shared_mutex m;
  return m;
}

std::vector<long> compute_phi_poly(int n);

std::map<int, std::unique_ptr<std::vector<long>>>& phi_cache() {
  static std::map<int, std::unique_ptr<std::vector<long>>> cache;
  return cache;
}

std::map<int, std::unique_ptr<CycloField>>& field_cache() {
  static std::map<int, std::unique_ptr<CycloField>> cache;
  return cache;
}

const std::vector<long>& phi_poly_locked(int n) {
  auto& cache = phi_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto poly = std::make_unique<std::vector<long>>(compute_phi_poly(n));
  return *cache.emplace(n, std::move(poly)).first->second;
}

std::vector<long> compute_phi_poly(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_exact_div(p, phi_poly_locked(d));
  }
  return p;
}

const CycloField& field(int n) {
  if (n < 1) throw Error("cyclotomic conductor must be positive");
  {
    std::shared_lock lock(cache_mutex());
    auto it = field_cache().find(n);
    if (it != field_cache().end()) return *it->second;
  }
  std::unique_lock lock(cache_mutex());
  auto it = field_cache().find(n);
  if (it != field_cache().end()) return *it->second;
  const auto& phi_poly = phi_poly_locked(n);
  auto f = std::make_unique<CycloField>();
  f->n = n;
  f->phi = static_cast<int>(phi_poly.size()) - 1;
  f->power_table.assign(n, std::vector<long>(f->phi, 0));
  std::vector<long> cur(f->phi, 0);
  cur[0] = 1;
  for (int j = 0; j < n; ++j) {
    f->power_table[j] = cur;
    // multiply by x and reduce x^phi = -sum phi_poly[i] x^i
    long top = cur[f->phi - 1];
    for (int i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1] - top * phi_poly[i];
    cur[0] = -top * phi_poly[0];
  }
  return *field_cache().emplace(n, std::move(f)).first->second;
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = q * b + r
void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

RatPoly poly_sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

int euler_phi(int n) { return field(n).phi; }

const std::vector<long>& cyclotomic_polynomial(int n) {
  field(n);
  std::shared_lock lock(cache_mutex());
  return *phi_cache().at(n);
}

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(int conductor)
    : conductor_(conductor), coeffs_(field(conductor).phi, Rational(0)) {}

Cyclotomic::Cyclotomic(int conductor, const Rational& value) : Cyclotomic(conductor) {
  coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs, int)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_canonical(int conductor, std::vector<Rational> coeffs) {
  if (static_cast<int>(coeffs.size()) != field(conductor).phi) {
    throw Error("from_canonical: wrong coefficient count");
  }
  return Cyclotomic(conductor, std::move(coeffs), 0);
}

Cyclotomic Cyclotomic::zeta(int conductor, long e) {
  const auto& f = field(conductor);
  const auto& row = f.power_table[mod_floor(e, conductor)];
  std::vector<Rational> c(f.phi);
  for (int i = 0; i < f.phi; ++i) c[i] = row[i];
  return Cyclotomic(conductor, std::move(c), 0);
}

Cyclotomic Cyclotomic::reduce(int conductor, std::span<const Rational> raw) {
  const auto& f = field(conductor);
  std::vector<Rational> folded(conductor, Rational(0));
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] != 0) folded[j % conductor] += raw[j];
  }
  std::vector<Rational> out(f.phi, Rational(0));
  for (int j = 0; j < conductor; ++j) {
    if (folded[j] == 0) continue;
    if (j < f.phi) {
      out[j] += folded[j];
      continue;
    }
    const auto& row = f.power_table[j];
    for (int i = 0; i < f.phi; ++i) {
      if (row[i] != 0) out[i] += folded[j] * row[i];
    }
  }
  return Cyclotomic(conductor, std::move(out), 0);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Cyclotomic(conductor_, Rational(1) / coeffs_[0]);
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  RatPoly m(phi_int.begin(), phi_int.end());
  RatPoly a = coeffs_;
  trim(a);
  // s * a == r (mod m) is maintained for both rows.
  RatPoly r0 = m, r1 = a, s0, s1{Rational(1)};
  while (!r1.empty()) {
    RatPoly q, r;
    poly_divmod(r0, r1, q, r);
    RatPoly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_N is irreducible, so the gcd is a nonzero constant.
  Rational g = r0.at(0);
  for (auto& c : s0) c /= g;
  return reduce(conductor_, s0);
}

Cyclotomic Cyclotomic::lift(int target) const {
  if (target == conductor_) return *this;
  if (target % conductor_ != 0) throw NotDivisible(conductor_, target);
  const int step = target / conductor_;
  std::vector<Rational> raw(static_cast<std::size_t>(step) * coeffs_.size(), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) raw[j * step] = coeffs_[j];
  return reduce(target, raw);
}

std::optional<Cyclotomic> Cyclotomic::restrict_to(int n) const {
  if (n == conductor_) return *this;
  if (conductor_ % n != 0) throw NotDivisible(n, conductor_);
  const int rows = static_cast<int>(coeffs_.size());
  const int cols = euler_phi(n);
  // Columns are images of zeta_n^j; augmented with this element.
  std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (int j = 0; j < cols; ++j) {
    Cyclotomic img = Cyclotomic::zeta(n, j).lift(conductor_);
    for (int i = 0; i < rows; ++i) mat[i][j] = img.coeffs_[i];
  }
  for (int i = 0; i < rows; ++i) mat[i][cols] = coeffs_[i];
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (mat[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(mat[piv], mat[rank]);
    Rational inv = 1 / mat[rank][c];
    for (auto& v : mat[rank]) v *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || mat[r][c] == 0) continue;
      Rational f = mat[r][c];
      for (int cc = c; cc <= cols; ++cc) mat[r][cc] -= f * mat[rank][cc];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (mat[r][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> sol(cols, Rational(0));
  for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = mat[r][cols];
  return Cyclotomic(n, std::move(sol), 0);
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (gcd_long(mod_floor(a, conductor_), conductor_) != 1) {
    throw Error("galois: exponent not coprime to conductor");
  }
  std::vector<Rational> raw(static_cast<std::size_t>(conductor_), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    raw[mod_floor(a * static_cast<long>(j), conductor_)] += coeffs_[j];
  }
  return reduce(conductor_, raw);
}

ComplexApprox Cyclotomic::embed(int digits) const {
  PrecisionGuard guard(digits);
  ComplexApprox out = embed();
  out.digits = digits;
  return out;
}

ComplexApprox Cyclotomic::embed() const {
  ComplexApprox sum;
  const Real two_pi_over_n = 2 * pi_real() / conductor_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (j == 0) {
      sum.re += real_from(coeffs_[j]);
      continue;
    }
    ComplexApprox term = ComplexApprox::unit(two_pi_over_n * static_cast<long>(j));
    term *= real_from(coeffs_[j]);
    sum += term;
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j > 0) out += " + ";
    out += eisenlab::to_string(coeffs_[j]);
    if (j == 1) out += "*z";
    if (j > 1) out += "*z^" + std::to_string(j);
  }
  out += " | " + std::to_string(conductor_);
  return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto bar = text.rfind('|');
  if (bar == std::string_view::npos) throw ParseError("missing '| N' in cyclotomic string");
  std::string cond_text(text.substr(bar + 1));
  int conductor = 0;
  try {
    conductor = std::stoi(cond_text);
  } catch (const std::exception&) {
    throw ParseError("bad conductor '" + cond_text + "'");
  }
  if (conductor < 1) throw ParseError("conductor must be positive");
  std::string_view body = text.substr(0, bar);
  std::vector<Rational> raw;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto next = body.find(" + ", pos);
    std::string_view term = body.substr(pos, next == std::string_view::npos ? next : next - pos);
    int power = 0;
    auto star = term.find("*z");
    std::string_view coeff = term.substr(0, star);
    if (star != std::string_view::npos) {
      std::string_view rest = term.substr(star + 2);
      power = 1;
      if (!rest.empty() && rest.front() == '^') {
        try {
          power = std::stoi(std::string(rest.substr(1)));
        } catch (const std::exception&) {
          throw ParseError("bad exponent in '" + std::string(term) + "'");
        }
      } else if (!rest.empty() && rest.find_first_not_of(' ') != std::string_view::npos) {
        throw ParseError("bad term '" + std::string(term) + "'");
      }
    }
    if (power < 0) throw ParseError("negative exponent");
    if (static_cast<int>(raw.size()) <= power) raw.resize(power + 1, Rational(0));
    raw[power] += parse_rational(coeff);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return reduce(conductor, raw);
}

namespace {

void align(Cyclotomic& a, Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return;
  int l = static_cast<int>(lcm_long(a.conductor(), b.conductor()));
  a = a.lift(l);
  b = b.lift(l);
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor_ != conductor_) {
    Cyclotomic b = o;
    align(*this, b);
    return *this += b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.conductor_ != conductor_) {
    Cyclotomic b = o;
    align(*this, b);
    return *this -= b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) {
    Cyclotomic x = a, y = b;
    align(x, y);
    return x * y;
  }
  if (a.is_rational()) return Cyclotomic(b) *= a.coeffs_[0];
  if (b.is_rational()) return Cyclotomic(a) *= b.coeffs_[0];
  CycloAccumulator acc(a.conductor_);
  acc.add_product(a, b);
  return acc.take();
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  *this = *this * o.inverse();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  Cyclotomic x = a, y = b;
  align(x, y);
  return x.coeffs_ == y.coeffs_;
}

CycloAccumulator::CycloAccumulator(int conductor)
    : conductor_(conductor), phi_(euler_phi(conductor)), raw_(2 * phi_ - 1, Rational(0)) {}

void CycloAccumulator::add_product(const Cyclotomic& a, const Cyclotomic& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (int i = 0; i < phi_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < phi_; ++j) {
      if (cb[j] == 0) continue;
      raw_[i + j] += ca[i] * cb[j];
    }
  }
  dirty_ = true;
}

Cyclotomic CycloAccumulator::take() {
  if (!dirty_) return Cyclotomic(conductor_);
  Cyclotomic out = Cyclotomic::reduce(conductor_, raw_);
  for (auto& c : raw_) c = 0;
  dirty_ = false;
  return out;
}

Cyclotomic cyclo_reduce(int conductor, std::span<const Rational> raw) {
  return Cyclotomic::reduce(conductor, raw);
}

Cyclotomic cyclo_invert(const Cyclotomic& x) { return x.inverse(); }

ComplexApprox cyclo_embed(const Cyclotomic& x, int precision_digits) {
  return x.embed(precision_digits);
}

}  // namespace eisenlab
