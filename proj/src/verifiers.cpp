#include "eisenlab/verifiers.hpp"

#include <charconv>
#include <chrono>

#include "eisenlab/errors.hpp"
#include "eisenlab/hull.hpp"

namespace eisenlab {

TorsionPoint TorsionPoint::normalized() const {
  if (denominator < 1) throw ParseError("torsion denominator must be positive");
  return {denominator, static_cast<int>(mod_floor(c1, denominator)), static_cast<int>(mod_floor(c2, denominator))};
}

bool TorsionPoint::is_zero() const {
  const TorsionPoint t = normalized();
  return t.c1 == 0 && t.c2 == 0;
}

TorsionPoint TorsionPoint::operator-() const { return TorsionPoint{denominator, -c1, -c2}.normalized(); }

TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b) {
  const int m = static_cast<int>(lcm_long(a.denominator, b.denominator));
  const int sa = m / a.denominator, sb = m / b.denominator;
  return TorsionPoint{m, a.c1 * sa + b.c1 * sb, a.c2 * sa + b.c2 * sb}.normalized();
}

TorsionPoint operator*(long s, const TorsionPoint& a) {
  return TorsionPoint{a.denominator, static_cast<int>(mod_floor(s * a.c1, a.denominator)),
                      static_cast<int>(mod_floor(s * a.c2, a.denominator))};
}

bool operator==(const TorsionPoint& a, const TorsionPoint& b) { return (a + (-b)).is_zero(); }

EisIndex TorsionPoint::index(int weight, int n) const {
  if (n % denominator != 0) throw NotDivisible(denominator, n);
  const int s = n / denominator;
  return EisIndex{weight, n, c1 * s, c2 * s}.normalized();
}

TorsionPoint TorsionPoint::parse(std::string_view text) {
  const auto comma = text.find(',');
  const auto at = text.find('@');
  if (comma == std::string_view::npos || at == std::string_view::npos || at < comma) {
    throw ParseError("torsion point '" + std::string(text) + "' is not of the form c1,c2@M");
  }
  auto read = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError("bad integer '" + std::string(part) + "' in torsion point");
    }
    return v;
  };
  TorsionPoint t{read(text.substr(at + 1)), read(text.substr(0, comma)), read(text.substr(comma + 1, at - comma - 1))};
  return t.normalized();
}

std::string TorsionPoint::to_string() const {
  return std::to_string(c1) + "," + std::to_string(c2) + "@" + std::to_string(denominator);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "VERIFIED";
    case Status::Refuted: return "REFUTED";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Status parse_status(std::string_view s) {
  if (s == "VERIFIED") return Status::Verified;
  if (s == "REFUTED") return Status::Refuted;
  if (s == "INCONCLUSIVE") return Status::Inconclusive;
  throw ParseError("unknown status " + std::string(s));
}

int exit_code(Status s) {
  switch (s) {
    case Status::Verified: return 0;
    case Status::Refuted: return 2;
    case Status::Inconclusive: return 3;
  }
  return 1;
}

QuasiForm build_L(const LParams& params, int n, int truncation) {
  const int k = params.weight;
  if (k < 2) throw UnsupportedWeight("L needs weight >= 2, got " + std::to_string(k));
  QuasiForm total = QuasiForm::zero(k, n, truncation);
  for (int l = 1; l < k; ++l) {
    const int m = k - l;
    Rational coef(1);
    for (int i = 1; i < l; ++i) coef *= params.p;
    for (int i = 1; i < m; ++i) coef *= params.q;
    if (coef == 0) continue;
    coef /= Rational(factorial(l - 1) * factorial(m - 1));
    QuasiForm term = quasi_mul(eis_series(params.lam.index(l, n), truncation),
                               eis_series(params.mu.index(m, n), truncation));
    total += term * Cyclotomic(n, coef);
  }
  return total.trimmed();
}

namespace {

QuasiForm weight_one_product(const TorsionPoint& a, const TorsionPoint& b, int n, int truncation) {
  return quasi_mul(eis_series(a.index(1, n), truncation), eis_series(b.index(1, n), truncation));
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string rational_string(const Rational& x) { return to_string(x); }

/// Runs the certifier and fills status, defect and residual.
void certify_into(VerificationReport& report, const QuasiForm& f) {
  try {
    Certification c = certify_orthogonal(f);
    report.coefficients = std::move(c.solution.coefficients);
    report.certificate = std::move(c.certificate);
    report.residual_exponents = c.solution.residual_exponents();
    report.status = c.verified() ? Status::Verified : Status::Inconclusive;
    if (!c.verified()) report.note = "remainder is not in the Eisenstein span";
  } catch (const TopComponentNotEisenstein& e) {
    report.status = Status::Inconclusive;
    report.residual_exponents = e.residual_exponents();
    report.note = e.what();
  }
}

void degenerate_policy(VerificationReport& report, const std::vector<TorsionPoint>& points) {
  for (const auto& t : points) {
    if (t.is_zero()) {
      report.status = Status::Inconclusive;
      report.note = "a torsion point vanishes; no expected identity is stated for this case";
      return;
    }
  }
}

}  // namespace

QuasiForm two_term_sum(const TorsionPoint& lam, const TorsionPoint& mu, int n, int truncation) {
  return weight_one_product(lam, mu, n, truncation) + weight_one_product(mu, -lam, n, truncation);
}

QuasiForm three_term_sum(const TorsionPoint& lam, const TorsionPoint& mu, int n, int truncation) {
  const TorsionPoint nu = -(lam + mu);
  return weight_one_product(lam, mu, n, truncation) + weight_one_product(mu, nu, n, truncation) +
         weight_one_product(nu, lam, n, truncation);
}

QuasiForm prop21_sum(const LParams& params, int n, int truncation) {
  const TorsionPoint nu = -(params.lam + params.mu);
  const Rational r = -params.p - params.q;
  const int k = params.weight;
  return build_L({params.lam, params.mu, params.p, params.q, k}, n, truncation) +
         build_L({params.mu, nu, params.q, r, k}, n, truncation) +
         build_L({nu, params.lam, r, params.p, k}, n, truncation);
}

std::pair<QuasiForm, QuasiForm> hecke_sides(int n_sub, int shear, const LParams& params, int truncation) {
  const HullChain chain = hull_chain(n_sub, shear);
  const int m = static_cast<int>(lcm_long(params.lam.denominator, params.mu.denominator));
  const int n = n_sub * m;
  const int k = params.weight;
  QuasiForm lhs = QuasiForm::zero(k, n, truncation);
  for (int t1 = 0; t1 < n_sub; ++t1) {
    for (int t2 = 0; t2 < n_sub; ++t2) {
      const TorsionPoint tau{n_sub, t1, t2};
      lhs += build_L({params.lam + tau, params.mu + (-(static_cast<long>(chain.shear) * tau)), params.p, params.q, k},
                     n, truncation);
    }
  }
  lhs *= Cyclotomic(n, make_rational(1, n_sub));
  QuasiForm rhs = QuasiForm::zero(k, n, truncation);
  const auto& v = chain.vectors;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const long a = v[i].x, b = v[i].y, c = v[i + 1].x, d = v[i + 1].y;
    rhs += build_L({a * params.lam + b * params.mu, c * params.lam + d * params.mu,
                    params.p * a + params.q * b, params.p * c + params.q * d, k},
                   n, truncation);
  }
  return {lhs.trimmed(), rhs.trimmed()};
}

QuasiForm hecke_difference(int n_sub, int shear, const LParams& params, int truncation) {
  auto [lhs, rhs] = hecke_sides(n_sub, shear, params, truncation);
  return (lhs - rhs).trimmed();
}

VerificationReport verify_two_term(const TorsionPoint& lam, const TorsionPoint& mu, int n,
                                   std::optional<int> truncation) {
  const auto start = Clock::now();
  const int b = truncation.value_or(sturm_bound(2, n));
  VerificationReport report;
  report.claim_id = "two-term";
  report.parameters = {{"lam", lam.normalized().to_string()}, {"mu", mu.normalized().to_string()}, {"level", n}};
  QuasiForm sum = two_term_sum(lam, mu, n, b);
  report.residual_exponents = SpanSolution{{}, sum}.residual_exponents();
  report.status = sum.is_zero() ? Status::Verified : Status::Refuted;
  report.truncation = b;
  report.level = n;
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_three_term_w2(const TorsionPoint& lam, const TorsionPoint& mu, int n,
                                        std::optional<int> truncation) {
  const auto start = Clock::now();
  const int b = truncation.value_or(sturm_bound(2, n));
  VerificationReport report;
  report.claim_id = "three-term";
  report.parameters = {{"lam", lam.normalized().to_string()}, {"mu", mu.normalized().to_string()}, {"level", n}};
  certify_into(report, three_term_sum(lam, mu, n, b));
  degenerate_policy(report, {lam, mu, -(lam + mu)});
  report.truncation = b;
  report.level = n;
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_prop21(const LParams& params, int n, std::optional<int> truncation) {
  const auto start = Clock::now();
  const int b = truncation.value_or(sturm_bound(params.weight, n));
  VerificationReport report;
  report.claim_id = "prop21";
  report.parameters = {{"lam", params.lam.normalized().to_string()},
                       {"mu", params.mu.normalized().to_string()},
                       {"p", rational_string(params.p)},
                       {"q", rational_string(params.q)},
                       {"weight", params.weight},
                       {"level", n}};
  certify_into(report, prop21_sum(params, n, b));
  degenerate_policy(report, {params.lam, params.mu, -(params.lam + params.mu)});
  report.truncation = b;
  report.level = n;
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_hecke_trace(int n_sub, int shear, const LParams& params, std::optional<int> truncation) {
  const auto start = Clock::now();
  const int m = static_cast<int>(lcm_long(params.lam.denominator, params.mu.denominator));
  const int n = n_sub * m;
  const int b = truncation.value_or(sturm_bound(params.weight, n));
  VerificationReport report;
  report.claim_id = "hecke";
  report.parameters = {{"sub_level", n_sub},
                       {"shear", static_cast<int>(hull_chain(n_sub, shear).shear)},
                       {"lam", params.lam.normalized().to_string()},
                       {"mu", params.mu.normalized().to_string()},
                       {"p", rational_string(params.p)},
                       {"q", rational_string(params.q)},
                       {"weight", params.weight},
                       {"level", n}};
  certify_into(report, hecke_difference(n_sub, shear, params, b));
  report.truncation = b;
  report.level = n;
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace eisenlab
