#include "eisenlab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "eisenlab/errors.hpp"

namespace eisenlab {

using nlohmann::ordered_json;

ordered_json report_to_json(const VerificationReport& report, bool with_timing) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : report.coefficients) {
    coeffs.push_back({{"weight", c.index.weight}, {"c1", c.index.c1}, {"c2", c.index.c2}, {"value", c.value.to_string()}});
  }
  ordered_json cert = ordered_json::array();
  for (const auto& e : report.certificate) {
    cert.push_back({{"generator", "delta"},
                    {"weight", e.source.weight},
                    {"c1", e.source.c1},
                    {"c2", e.source.c2},
                    {"scale", e.scale.to_string()}});
  }
  ordered_json j;
  j["claim_id"] = report.claim_id;
  j["parameters"] = report.parameters.is_null() ? ordered_json::object() : report.parameters;
  j["status"] = to_string(report.status);
  j["defect"] = {{"coefficients", coeffs},
                 {"certificate", cert},
                 {"residual_nonzero_exponents", report.residual_exponents}};
  j["truncation"] = report.truncation;
  j["level"] = report.level;
  j["elapsed_ms"] = with_timing ? ordered_json(report.elapsed_ms) : ordered_json(nullptr);
  return j;
}

VerificationReport report_from_json(const ordered_json& j) {
  try {
    VerificationReport r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.parameters = j.at("parameters");
    r.status = parse_status(j.at("status").get<std::string>());
    r.truncation = j.at("truncation").get<int>();
    r.level = j.at("level").get<int>();
    if (!j.at("elapsed_ms").is_null()) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    const auto& defect = j.at("defect");
    for (const auto& c : defect.at("coefficients")) {
      EisIndex idx{c.at("weight").get<int>(), r.level, c.at("c1").get<int>(), c.at("c2").get<int>()};
      r.coefficients.push_back({idx, Cyclotomic::parse(c.at("value").get<std::string>())});
    }
    for (const auto& e : defect.at("certificate")) {
      EisIndex idx{e.at("weight").get<int>(), r.level, e.at("c1").get<int>(), e.at("c2").get<int>()};
      r.certificate.push_back({idx, delta(eis_series(idx, r.truncation)), Cyclotomic::parse(e.at("scale").get<std::string>())});
    }
    r.residual_exponents = defect.at("residual_nonzero_exponents").get<std::vector<int>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

void emit_report(const VerificationReport& report, const std::string& path, bool with_timing) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << report_to_json(report, with_timing).dump(2) << '\n';
  if (!out) throw Error("write to " + path + " failed");
}

std::string report_summary(const VerificationReport& report) {
  std::ostringstream os;
  os << report.claim_id << ": " << to_string(report.status) << '\n';
  os << "  level " << report.level << ", truncation " << report.truncation << '\n';
  os << "  parameters " << report.parameters.dump() << '\n';
  os << "  defect coefficients " << report.coefficients.size() << ", certificate terms "
     << report.certificate.size() << '\n';
  if (!report.residual_exponents.empty()) {
    os << "  residual at exponents";
    for (int e : report.residual_exponents) os << ' ' << e;
    os << '\n';
  }
  if (!report.note.empty()) os << "  note: " << report.note << '\n';
  return os.str();
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string hull_svg(const HullChain& chain) {
  if (!is_valid_chain(chain)) throw Error("hull_svg: chain is not valid");
  const long n = chain.level;
  const double margin = 50, plot = 400, unit = plot / static_cast<double>(n);
  const double size = plot + 2 * margin;
  auto px = [&](long x) { return fmt(margin + unit * static_cast<double>(x)); };
  auto py = [&](long y) { return fmt(margin + unit * static_cast<double>(n - y)); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(size) << "\" height=\""
     << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
  os << "  <title>Lower hull of x = " << chain.shear << " y mod " << n << "</title>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(size) << "\" height=\"" << fmt(size) << "\" fill=\"white\"/>\n";
  // axes
  os << "  <g stroke=\"black\" stroke-width=\"1.5\">\n";
  os << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << fmt(margin + plot + 20) << "\" y2=\"" << py(0)
     << "\"/>\n";
  os << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << fmt(margin - 20)
     << "\"/>\n";
  os << "  </g>\n";
  os << "  <g font-family=\"sans-serif\" font-size=\"14\">\n";
  os << "    <text x=\"" << fmt(margin + plot + 25) << "\" y=\"" << fmt(margin + plot + 5) << "\">x</text>\n";
  os << "    <text x=\"" << fmt(margin - 5) << "\" y=\"" << fmt(margin - 25) << "\">y</text>\n";
  os << "    <text x=\"" << px(0) << "\" y=\"" << fmt(margin + plot + 20) << "\" text-anchor=\"middle\">0</text>\n";
  os << "    <text x=\"" << px(n) << "\" y=\"" << fmt(margin + plot + 20) << "\" text-anchor=\"middle\">" << n
     << "</text>\n";
  os << "    <text x=\"" << fmt(margin - 10) << "\" y=\"" << py(n) << "\" text-anchor=\"end\">" << n << "</text>\n";
  os << "  </g>\n";
  // sublattice points
  os << "  <g fill=\"#555555\">\n";
  for (long y = 0; y <= n; ++y) {
    for (long x = 0; x <= n; ++x) {
      if (mod_floor(x - chain.shear * y, n) != 0) continue;
      os << "    <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\"/>\n";
    }
  }
  os << "  </g>\n";
  os << "  <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < chain.vectors.size(); ++i) {
    if (i) os << ' ';
    os << px(chain.vectors[i].x) << ',' << py(chain.vectors[i].y);
  }
  os << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

void emit_hull_svg(const HullChain& chain, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << hull_svg(chain);
  if (!out) throw Error("write to " + path + " failed");
}

}  // namespace eisenlab
