#include "eisenlab/certifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <tuple>

#include "eisenlab/errors.hpp"

namespace eisenlab {

EisBasis eis_basis(int k, int n, int truncation) {
  EisBasis out{k, n, truncation, {}};
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = 0; c2 < n; ++c2) {
      EisIndex idx{k, n, c1, c2};
      QuasiForm f = eis_series(idx, truncation);
      if (!f.is_zero()) out.elements.emplace_back(idx, std::move(f));
    }
  }
  return out;
}

std::vector<int> SpanSolution::residual_exponents() const {
  std::set<int> exps;
  for (const auto& c : residual.components()) {
    for (int e : c.nonzero_exponents()) exps.insert(e);
  }
  return {exps.begin(), exps.end()};
}

SpanSolver::SpanSolver(EisBasis basis) : basis_(std::move(basis)) {
  const int width = basis_.truncation + 1;
  int depth = 0;
  for (const auto& [idx, f] : basis_.elements) depth = std::max(depth, f.trimmed().depth());
  columns_ = (depth + 1) * width;
  const std::size_t count = basis_.elements.size();
  const Cyclotomic zero(basis_.level);

  std::vector<Row> work;
  for (std::size_t i = 0; i < count; ++i) {
    const QuasiForm& f = basis_.elements[i].second;
    Row r{std::vector<Cyclotomic>(columns_, zero), std::vector<Cyclotomic>(count, zero)};
    for (int j = 0; j <= f.depth() && j <= depth; ++j) {
      for (int e : f.component(j).nonzero_exponents()) r.entries[j * width + e] = f.component(j)[e];
    }
    r.combo[i] = Cyclotomic(basis_.level, Rational(1));
    work.push_back(std::move(r));
  }

  std::size_t rank = 0;
  for (int col = 0; col < columns_ && rank < work.size(); ++col) {
    std::size_t found = rank;
    while (found < work.size() && work[found].entries[col].is_zero()) ++found;
    if (found == work.size()) continue;
    std::swap(work[rank], work[found]);
    Row& piv = work[rank];
    const Cyclotomic inv = piv.entries[col].inverse();
    std::vector<int> nz;
    for (int c = col; c < columns_; ++c) {
      if (piv.entries[c].is_zero()) continue;
      piv.entries[c] = piv.entries[c] * inv;
      nz.push_back(c);
    }
    std::vector<std::size_t> nz_combo;
    for (std::size_t c = 0; c < count; ++c) {
      if (piv.combo[c].is_zero()) continue;
      piv.combo[c] = piv.combo[c] * inv;
      nz_combo.push_back(c);
    }
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i == rank || work[i].entries[col].is_zero()) continue;
      const Cyclotomic f = work[i].entries[col];
      for (int c : nz) work[i].entries[c] -= f * piv.entries[c];
      for (std::size_t c : nz_combo) work[i].combo[c] -= f * piv.combo[c];
    }
    pivots_.push_back(col);
    ++rank;
  }
  work.resize(rank);
  rows_ = std::move(work);
}

SpanSolution SpanSolver::solve(const QuasiForm& target_in) const {
  const QuasiForm target = target_in.trimmed();
  if (target.level() != basis_.level || target.truncation() != basis_.truncation) {
    throw Error("span_solve: target and basis disagree on level or truncation");
  }
  if (target.weight() != basis_.weight) throw Error("span_solve: weight mismatch");
  const int width = basis_.truncation + 1;
  const int basis_depth = columns_ / width - 1;
  const Cyclotomic zero(basis_.level);

  std::vector<Cyclotomic> vec(columns_, zero);
  for (int j = 0; j <= std::min(target.depth(), basis_depth); ++j) {
    for (int e : target.component(j).nonzero_exponents()) vec[j * width + e] = target.component(j)[e];
  }
  std::vector<Cyclotomic> coeffs(basis_.elements.size(), zero);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Cyclotomic f = vec[pivots_[r]];
    if (f.is_zero()) continue;
    const Row& row = rows_[r];
    for (int c = pivots_[r]; c < columns_; ++c) {
      if (!row.entries[c].is_zero()) vec[c] -= f * row.entries[c];
    }
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      if (!row.combo[c].is_zero()) coeffs[c] += f * row.combo[c];
    }
  }

  std::vector<QSeries> comps;
  const int depth = std::max(target.depth(), basis_depth);
  for (int j = 0; j <= depth; ++j) {
    if (j <= basis_depth) {
      QSeries s(basis_.level, basis_.truncation);
      for (int e = 0; e < width; ++e) {
        if (!vec[j * width + e].is_zero()) s.set(e, vec[j * width + e]);
      }
      comps.push_back(std::move(s));
    } else {
      comps.push_back(target.component(j));
    }
  }
  SpanSolution out{{}, QuasiForm(target.weight(), std::move(comps)).trimmed()};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) out.coefficients.push_back({basis_.elements[i].first, coeffs[i]});
  }
  return out;
}

SpanSolution span_solve(const QuasiForm& target, const EisBasis& basis) { return SpanSolver(basis).solve(target); }

namespace {

std::shared_mutex solver_mutex;
std::map<std::tuple<int, int, int>, std::shared_ptr<const SpanSolver>> solvers;

}  // namespace

std::shared_ptr<const SpanSolver> eis_solver(int k, int n, int truncation) {
  const auto key = std::make_tuple(k, n, truncation);
  {
    std::shared_lock lock(solver_mutex);
    auto it = solvers.find(key);
    if (it != solvers.end()) return it->second;
  }
  auto solver = std::make_shared<const SpanSolver>(eis_basis(k, n, truncation));
  std::unique_lock lock(solver_mutex);
  return solvers.emplace(key, solver).first->second;
}

PeelResult peel(const QuasiForm& input) {
  QuasiForm f = input.trimmed();
  std::vector<CertificateEntry> cert;
  const int k = f.weight();
  const int n = f.level();
  const int b = f.truncation();
  if (f.depth() == 0) return {f.component(0), cert};
  if (k <= 2) throw UnsupportedWeight("Y-components at weight " + std::to_string(k));

  if (f.depth() == 2) {
    if (k != 4) throw UnsupportedWeight("depth 2 at weight " + std::to_string(k));
    const QSeries& top = f.component(2);
    std::vector<int> off;
    for (int e : top.nonzero_exponents()) {
      if (e != 0) off.push_back(e);
    }
    if (!off.empty()) throw TopComponentNotEisenstein(2, off);
    // delta_2(h + Y) has Y^2-component -1
    const auto& [idx, completed] = eis_solver(2, n, b)->basis().elements.front();
    CertificateEntry entry{idx, delta(completed), -top[0]};
    f -= entry.generator * entry.scale;
    f = f.trimmed();
    cert.push_back(std::move(entry));
  }

  if (f.depth() == 1) {
    SpanSolution sol = eis_solver(k - 2, n, b)->solve(QuasiForm::holomorphic(k - 2, f.component(1)));
    if (!sol.in_span()) throw TopComponentNotEisenstein(1, sol.residual_exponents());
    // delta_{k-2}(G) has Y-component -(k-2) G
    const Rational inv_w = make_rational(-1, k - 2);
    for (const auto& c : sol.coefficients) {
      CertificateEntry entry{c.index, delta(eis_series(c.index, b)), c.value * inv_w};
      f -= entry.generator * entry.scale;
      cert.push_back(std::move(entry));
    }
    f = f.trimmed();
  }
  if (f.depth() != 0) throw Error("peel left a Y-component behind");
  return {f.component(0), std::move(cert)};
}

Certification certify_orthogonal(const QuasiForm& f) {
  auto solver = eis_solver(f.weight(), f.level(), f.truncation());
  if (f.weight() <= 2) return {solver->solve(f), {}};
  PeelResult p = peel(f);
  return {solver->solve(QuasiForm::holomorphic(f.weight(), std::move(p.remainder))), std::move(p.certificate)};
}

}  // namespace eisenlab
