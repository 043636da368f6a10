// Command-line surface for the quartic-model phase diagram and topological
// expansion library.
#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>

#include "quartic/gfunction.hpp"
#include "quartic/io.hpp"
#include "quartic/maps.hpp"
#include "quartic/model.hpp"
#include "quartic/phase.hpp"
#include "quartic/quaddiff.hpp"
#include "quartic/topo.hpp"

namespace {

using Complex = quartic::model::Complex;
using nlohmann::json;

constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << content;
}

std::string ext_of(const std::string& path) {
  auto dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot + 1);
}

quartic::model::PhaseRegime parse_regime(const std::string& s) {
  using quartic::model::PhaseRegime;
  if (s == "1" || s == "one" || s == "one-cut") return PhaseRegime::one_cut();
  if (s == "2" || s == "two" || s == "two-cut") return PhaseRegime::two_cut();
  if (s == "3" || s == "three" || s == "three-cut") return PhaseRegime::three_cut();
  throw CLI::ValidationError("regime", "expected one of 1|2|3|one-cut|two-cut|three-cut");
}

quartic::model::BoundaryId parse_curve(const std::string& s) {
  using quartic::model::BoundaryId;
  if (s == "g1" || s == "gamma1") return BoundaryId::Gamma1;
  if (s == "g2" || s == "gamma2") return BoundaryId::Gamma2;
  if (s == "g3" || s == "gamma3") return BoundaryId::Gamma3;
  if (s == "g4" || s == "gamma4") return BoundaryId::Gamma4;
  if (s == "g5" || s == "gamma5") return BoundaryId::Gamma5;
  if (s == "g6" || s == "gamma6") return BoundaryId::Gamma6;
  if (s == "vi" || s == "VI") return BoundaryId::FakeVI;
  if (s == "viii" || s == "VIII") return BoundaryId::FakeVIII;
  if (s == "xi" || s == "XI") return BoundaryId::FakeXI;
  throw CLI::ValidationError("curve", "expected g1..g6, VI, VIII or XI");
}

int cmd_classify(double re, double im, bool verify) {
  const Complex sigma(re, im);
  try {
    auto regime = quartic::phase::classify(sigma, verify);
    const double dist = quartic::phase::Classifier::instance().nearest_boundary(sigma);
    std::cout << quartic::model::to_string(regime) << "\n";
    std::cout << "nearest boundary distance: " << dist << "\n";
    return 0;
  } catch (const quartic::phase::VerificationMismatch& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return kExitVerification;
  }
}

int cmd_trace(double re, double im, const std::string& regimeStr,
              const std::string& out, double rmax) {
  const Complex sigma(re, im);
  auto regime = parse_regime(regimeStr);
  quartic::quaddiff::TraceOptions opts;
  if (rmax > 0) opts.rmax = rmax;
  auto graph = quartic::quaddiff::critical_graph(
      quartic::quaddiff::build_qd(sigma, regime), opts);
  const std::string ext = ext_of(out);
  if (ext == "svg") {
    write_output(out, quartic::io::graph_svg(graph));
  } else if (ext == "csv") {
    std::string all;
    for (size_t i = 0; i < graph.trajectories.size(); ++i) {
      all += "# trajectory " + std::to_string(i) + "\n";
      all += quartic::io::trajectory_csv(graph.trajectories[i]);
    }
    write_output(out, all);
  } else {
    write_output(out, quartic::io::graph_json(graph));
  }
  return 0;
}

int cmd_phase_boundary(const std::string& curve, const std::string& out) {
  auto bc = quartic::phase::trace_boundary(parse_curve(curve));
  const std::string ext = ext_of(out);
  if (ext == "csv") {
    write_output(out, quartic::io::polyline_csv(bc.points));
    return 0;
  }
  json j;
  j["schemaVersion"] = quartic::io::kSchemaVersion;
  j["curve"] = quartic::model::to_string(bc.id);
  j["isBoundary"] = bc.isBoundary;
  if (!std::isnan(bc.asymptoticAngle)) j["asymptoticAngle"] = bc.asymptoticAngle;
  auto& pts = j["points"] = json::array();
  for (const auto& z : bc.points) pts.push_back({z.real(), z.imag()});
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_phase_diagram(const std::string& out, bool showFake, int gridN) {
  const auto& cls = quartic::phase::Classifier::instance();
  const std::string ext = ext_of(out);
  if (ext == "svg") {
    std::vector<quartic::io::CurveForSvg> curves;
    for (const auto& c : cls.curves()) {
      if (!c.isBoundary && !showFake) continue;
      curves.push_back({quartic::model::to_string(c.id), c.points, !c.isBoundary});
    }
    write_output(out, quartic::io::curves_svg(curves, 8.0));
    return 0;
  }
  json j;
  j["schemaVersion"] = quartic::io::kSchemaVersion;
  auto& curves = j["curves"] = json::array();
  for (const auto& c : cls.curves()) {
    if (!c.isBoundary && !showFake) continue;
    json cj;
    cj["id"] = quartic::model::to_string(c.id);
    cj["isBoundary"] = c.isBoundary;
    auto& pts = cj["points"] = json::array();
    for (const auto& z : c.points) pts.push_back({z.real(), z.imag()});
    curves.push_back(std::move(cj));
  }
  auto& regions = j["regions"] = json::array();
  for (int iy = 0; iy < gridN; ++iy)
    for (int ix = 0; ix < gridN; ++ix) {
      const Complex s(-8.0 + 16.0 * ix / (gridN - 1), -8.0 + 16.0 * iy / (gridN - 1));
      regions.push_back({{"re", s.real()},
                         {"im", s.imag()},
                         {"regime", quartic::model::to_string(cls.classify(s))}});
    }
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_genus_counts(int vertices, bool oracle, int threads, const std::string& out) {
  json j;
  j["schemaVersion"] = quartic::io::kSchemaVersion;
  j["vertices"] = vertices;
  auto& closed = j["closedForm"] = json::array();
  for (int g = 0; g <= 3; ++g)
    closed.push_back(quartic::maps::closed_form_count(vertices, g).get_str());
  if (oracle) {
    auto mc = quartic::maps::enumerate_census(vertices, false, threads);
    auto& census = j["census"] = json::array();
    for (auto c : mc.counts) census.push_back(c);
    j["totalPairings"] = mc.totalPairings;
    j["totalConnected"] = mc.totalConnected;
  }
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_series(int genus, int order, const std::string& out) {
  auto fs = quartic::topo::free_energy_series(genus, order);
  json j;
  j["schemaVersion"] = quartic::io::kSchemaVersion;
  auto& table = j["freeEnergy"] = json::array();
  for (int g = 0; g <= genus; ++g) {
    json gj;
    gj["genus"] = g;
    auto& coeffs = gj["coefficients"] = json::array();
    for (int k = 0; k <= order; ++k)
      coeffs.push_back(quartic::algebra::to_string(fs.coeff[g][k]));
    table.push_back(std::move(gj));
  }
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_constants(int maxGenus, int painleveK, const std::string& out) {
  json j;
  j["schemaVersion"] = quartic::io::kSchemaVersion;
  auto c = quartic::maps::c2g_constants(maxGenus);
  auto& cj = j["C2g"] = json::array();
  for (const auto& v : c) cj.push_back(quartic::algebra::to_string(v));
  auto& kj = j["Kg"] = json::array();
  for (int g = 0; g <= maxGenus; ++g) {
    auto kg = quartic::maps::kg_constant(g);
    std::string s = quartic::algebra::to_string(kg.value);
    if (kg.overSqrtPi) s += "/sqrt(pi)";
    kj.push_back(s);
  }
  auto a = quartic::maps::painleve_a(painleveK);
  auto& aj = j["painleveA"] = json::array();
  for (const auto& v : a) aj.push_back(quartic::algebra::to_string(v));
  j["uCritical"] = "-1/12";
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(bool all) {
  (void)all;
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };
  {
    auto table = quartic::topo::string_recursion_u(4);
    auto tabs = quartic::topo::expansion_tables(table);
    check("string residual vanishes through N^-8",
          quartic::topo::string_residual_u(table, tabs).ok);
    bool oddZero = true;
    for (const auto& codd : tabs.Codd) oddZero = oddZero && codd.is_zero();
    check("odd product coefficients vanish", oddZero);
    bool ode = true;
    for (int g = 0; g <= 3; ++g)
      ode = ode && quartic::topo::verify_ode_identity(g, 10).exact;
    check("free-energy ODE identity (g <= 3)", ode);
    auto cs = quartic::maps::c2g_constants(4);
    bool sing = true;
    for (int g = 1; g <= 4; ++g)
      sing = sing && (quartic::topo::singular_structure(table, g).c2g == cs[g]);
    check("singular structure matches the constants", sing);
  }
  {
    bool counts = true;
    for (int jv = 1; jv <= 3; ++jv) {
      auto mc = quartic::maps::enumerate_census(jv);
      for (int g = 0; g <= 3 && counts; ++g) {
        quartic::algebra::BigInt fromCensus(0);
        if (g < static_cast<int>(mc.counts.size()))
          fromCensus =
              quartic::algebra::BigInt(static_cast<unsigned long>(mc.counts[g]));
        counts = fromCensus == quartic::maps::closed_form_count(jv, g);
      }
    }
    check("census equals closed forms (j <= 3)", counts);
  }
  {
    auto e1 = quartic::endpoints::one_cut(Complex(1, 0));
    auto e2 = quartic::endpoints::two_cut(Complex(-3, 0));
    check("endpoint identities",
          quartic::endpoints::one_cut_residual(Complex(1, 0), e1) < 1e-12 &&
              quartic::endpoints::two_cut_residual(Complex(-3, 0), e2) < 1e-12);
    auto e3 = quartic::endpoints::three_cut(Complex(-1, 2));
    check("three-cut gap conditions",
          e3.converged &&
              quartic::endpoints::three_cut_residuals(Complex(-1, 2), e3).max_abs() <
                  1e-8);
    check("classification anchors",
          quartic::phase::classify(Complex(1, 0)).kind ==
                  quartic::model::RegimeKind::OneCut &&
              quartic::phase::classify(Complex(-3, 0)).kind ==
                  quartic::model::RegimeKind::TwoCut &&
              quartic::phase::classify(Complex(-1, 2)).kind ==
                  quartic::model::RegimeKind::ThreeCut);
  }
  std::cout << (failures == 0 ? "verify: all checks passed\n"
                              : "verify: FAILURES present\n");
  return failures == 0 ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase diagram and topological expansion of the complex quartic "
               "matrix model"};
  app.require_subcommand(1);

  double sre = 0, sim = 0;
  bool verify = false;
  auto* classify = app.add_subcommand("classify", "Classify a coupling sigma");
  classify->add_option("re", sre, "Re sigma")->required();
  classify->add_option("im", sim, "Im sigma")->required();
  classify->add_flag("--verify", verify,
                     "re-derive the regime from the critical graph");

  double tre = 0, tim = 0, rmax = 0;
  std::string regimeStr = "1", traceOut;
  auto* trace = app.add_subcommand("trace", "Trace a critical graph");
  trace
      ->add_option(
          "--sigma",
          [&](CLI::results_t r) {
            if (r.size() != 2) return false;
            tre = std::stod(r[0]);
            tim = std::stod(r[1]);
            return true;
          },
          "Re and Im of sigma")
      ->expected(2)
      ->required();
  trace->add_option("--regime", regimeStr, "1|2|3");
  trace->add_option("--rmax", rmax, "trace escape radius");
  trace->add_option("--out", traceOut, "output file (.csv/.json/.svg)");

  std::string curve = "g1", pbOut;
  auto* pb = app.add_subcommand("phase-boundary", "Export a boundary curve");
  pb->add_option("--curve", curve, "g1..g6, VI, VIII, XI")->required();
  pb->add_option("--out", pbOut, "output file (.csv/.json)");

  std::string pdOut;
  bool showFake = false;
  int gridN = 33;
  auto* pd = app.add_subcommand("phase-diagram", "Export curves and a region grid");
  pd->add_option("--out", pdOut, "output file (.json/.svg)");
  pd->add_flag("--show-fake", showFake, "include the non-boundary components");
  pd->add_option("--grid", gridN, "region sampling resolution");

  int vertices = 1;
  bool oracle = false;
  int threads = 0;
  std::string gcOut;
  auto* gc = app.add_subcommand("genus-counts", "Map counts by genus");
  gc->add_option("--vertices", vertices, "vertex count j")->required();
  gc->add_flag("--oracle", oracle, "run the exhaustive pairing census");
  gc->add_option("--threads", threads, "census worker count (0 = all cores)");
  gc->add_option("--out", gcOut, "output file");

  int genus = 3, order = 12;
  std::string seriesOut;
  auto* se = app.add_subcommand("series", "Free-energy coefficient tables");
  se->add_option("--genus", genus, "max genus G");
  se->add_option("--order", order, "max u order J");
  se->add_option("--out", seriesOut, "output file");

  int maxGenus = 4, painleveK = 6;
  std::string constOut;
  auto* co = app.add_subcommand("constants", "Exact constants C_2g, K_g, a_k");
  co->add_option("--max-genus", maxGenus, "max genus");
  co->add_option("--painleve-terms", painleveK, "number of a_k terms");
  co->add_option("--out", constOut, "output file");

  bool verifyAll = false;
  auto* ve = app.add_subcommand("verify", "Run the invariant suite");
  ve->add_flag("--all", verifyAll, "run every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(sre, sim, verify);
    if (trace->parsed()) return cmd_trace(tre, tim, regimeStr, traceOut, rmax);
    if (pb->parsed()) return cmd_phase_boundary(curve, pbOut);
    if (pd->parsed()) return cmd_phase_diagram(pdOut, showFake, gridN);
    if (gc->parsed()) return cmd_genus_counts(vertices, oracle, threads, gcOut);
    if (se->parsed()) return cmd_series(genus, order, seriesOut);
    if (co->parsed()) return cmd_constants(maxGenus, painleveK, constOut);
    if (ve->parsed()) return cmd_verify(verifyAll);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
