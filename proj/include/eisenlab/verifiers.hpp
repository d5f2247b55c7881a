#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eisenlab/certifier.hpp"

namespace eisenlab {

/// lambda = (c1/M, c2/M) in Q^2/Z^2.
struct TorsionPoint {
  int denominator = 1;
  int c1 = 0;
  int c2 = 0;

  TorsionPoint normalized() const;
  bool is_zero() const;
  TorsionPoint operator-() const;
  friend TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b);
  friend TorsionPoint operator*(long s, const TorsionPoint& a);
  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b);
  /// Numerators over n; throws NotDivisible unless the denominator divides n.
  EisIndex index(int weight, int n) const;

  /// "c1,c2@M"
  static TorsionPoint parse(std::string_view text);
  std::string to_string() const;
};

struct LParams {
  TorsionPoint lam;
  TorsionPoint mu;
  Rational p;
  Rational q;
  int weight = 2;
};

enum class Status { Verified, Refuted, Inconclusive };

std::string to_string(Status s);
Status parse_status(std::string_view s);
/// 0 verified, 2 refuted, 3 inconclusive.
int exit_code(Status s);

struct VerificationReport {
  std::string claim_id;
  nlohmann::ordered_json parameters;
  Status status = Status::Inconclusive;
  std::vector<SpanCoefficient> coefficients;
  std::vector<CertificateEntry> certificate;
  std::vector<int> residual_exponents;
  int truncation = 0;
  int level = 0;
  double elapsed_ms = 0;
  /// Why a status was forced by policy; empty otherwise. Not serialized.
  std::string note;
};

/// sum_{l+m=k} p^(l-1) q^(m-1) / ((l-1)! (m-1)!) E_{l,lam} E_{m,mu} at level n.
QuasiForm build_L(const LParams& params, int n, int truncation);

QuasiForm two_term_sum(const TorsionPoint& lam, const TorsionPoint& mu, int n, int truncation);
QuasiForm three_term_sum(const TorsionPoint& lam, const TorsionPoint& mu, int n, int truncation);
QuasiForm prop21_sum(const LParams& params, int n, int truncation);
/// (LHS, RHS) of the trace identity at level n_sub * M, M = lcm of the torsion denominators.
std::pair<QuasiForm, QuasiForm> hecke_sides(int n_sub, int shear, const LParams& params, int truncation);
QuasiForm hecke_difference(int n_sub, int shear, const LParams& params, int truncation);

/// Truncation defaults to sturm_bound(weight, level).
VerificationReport verify_two_term(const TorsionPoint& lam, const TorsionPoint& mu, int n,
                                   std::optional<int> truncation = std::nullopt);
VerificationReport verify_three_term_w2(const TorsionPoint& lam, const TorsionPoint& mu, int n,
                                        std::optional<int> truncation = std::nullopt);
VerificationReport verify_prop21(const LParams& params, int n, std::optional<int> truncation = std::nullopt);
VerificationReport verify_hecke_trace(int n_sub, int shear, const LParams& params,
                                      std::optional<int> truncation = std::nullopt);

}  // namespace eisenlab
