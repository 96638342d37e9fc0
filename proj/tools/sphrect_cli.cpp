#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphrect/families.hpp"
#include "sphrect/json_io.hpp"
#include "sphrect/modulus.hpp"
#include "sphrect/netgraph.hpp"
#include "sphrect/sc_limit.hpp"

using nlohmann::json;
using namespace sphrect;

namespace {

AngleQuadruple parse_angles(const std::string& s) {
  std::array<int, 4> a{};
  std::stringstream ss(s);
  std::string tok;
  int n = 0;
  while (std::getline(ss, tok, ',')) {
    if (n >= 4) throw CLI::ValidationError("angles", "expected A0,A1,A2,A3");
    a[static_cast<std::size_t>(n++)] = std::stoi(tok);
  }
  if (n != 4) throw CLI::ValidationError("angles", "expected A0,A1,A2,A3");
  return AngleQuadruple(a[0], a[1], a[2], a[3]);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    f << j.dump(2) << "\n";
  }
}

json config_echo(const std::string& cmd, const AngleQuadruple& q) {
  return json{{"command", cmd}, {"angles", to_json(q)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sphrect: nets and moduli of spherical rectangles (quadrilaterals "
      "with angles that are odd multiples of a quarter turn)"};
  app.require_subcommand(1);

  std::string angles_s, out_path, format = "json";
  int index = 0, branch = 0, grid = 2000;
  double a_param = 2.0, lambda = 0.0;
  std::string scan_s;
  std::string method = "both";
  bool parallel = false;

  auto add_angles = [&](CLI::App* cmd, bool positional = false) {
    if (positional)
      cmd->add_option("angles", angles_s, "integer parts A0,A1,A2,A3")
          ->required();
    else
      cmd->add_option("--angles", angles_s, "integer parts A0,A1,A2,A3")
          ->required();
  };

  CLI::App* c_classify =
      app.add_subcommand("classify", "existence, counts and nets");
  add_angles(c_classify, true);
  c_classify->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_net = app.add_subcommand("net", "realize one net as a graph");
  add_angles(c_net, true);
  c_net->add_option("--index", index, "net index (lexicographic)")
      ->capture_default_str();
  c_net->add_option("--format", format, "json|dot")->capture_default_str();
  c_net->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_darboux =
      app.add_subcommand("darboux", "Darboux polynomial at one (a,lambda)");
  add_angles(c_darboux);
  c_darboux->add_option("--a", a_param, "position of the third corner, > 1")
      ->required();
  c_darboux->add_option("--lambda", lambda, "accessory parameter")->required();
  c_darboux->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_solve = app.add_subcommand(
      "solve", "unitarizability roots of the accessory parameter");
  add_angles(c_solve);
  c_solve->add_option("--a", a_param, "position of the third corner, > 1")
      ->required();
  c_solve->add_option("--scan", scan_s, "lo,hi scan range (default heuristic)");
  c_solve->add_option("--grid", grid, "scan grid size")->capture_default_str();
  c_solve->add_flag("--parallel", parallel, "parallel grid evaluation");
  c_solve->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_trace =
      app.add_subcommand("trace", "trace one family branch (CSV)");
  add_angles(c_trace);
  c_trace->add_option("--branch", branch, "branch index")->capture_default_str();
  c_trace->add_flag("--parallel", parallel, "parallel evaluation");
  c_trace->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_limits =
      app.add_subcommand("limits", "limit moduli K_crit per net");
  add_angles(c_limits);
  c_limits->add_option("--method", method, "both|extrapolate|sc")
      ->capture_default_str();
  c_limits->add_flag("--parallel", parallel, "parallel evaluation");
  c_limits->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed()) {
      AngleQuadruple q = parse_angles(angles_s);
      json j;
      j["config"] = config_echo("classify", q);
      j["two_delta"] = q.two_delta();
      j["delta"] = q.delta();
      j["count"] = to_json(count(q));
      AngleQuadruple qq = q;
      bool relabeled = false;
      if (q.two_delta() <= -2) {
        qq = relabel_marking(q);
        relabeled = true;
      }
      j["relabeled_for_enumeration"] = relabeled;
      if (relabeled) j["relabeled_angles"] = to_json(qq);
      json nets = json::array();
      if (qq.two_delta() >= 2)
        for (const auto& p : enumerate_nets(qq)) nets.push_back(to_json(p));
      j["nets"] = nets;
      emit(j, out_path);
      return 0;
    }

    if (c_net->parsed()) {
      AngleQuadruple q = parse_angles(angles_s);
      AngleQuadruple qq = q.two_delta() <= -2 ? relabel_marking(q) : q;
      auto nets = enumerate_nets(qq);
      if (index < 0 || index >= static_cast<int>(nets.size())) {
        json err{{"error", "net index out of range"},
                 {"count", nets.size()},
                 {"config", config_echo("net", q)}};
        emit(err, out_path);
        return 1;
      }
      NetGraph g = realize(nets[static_cast<std::size_t>(index)]);
      if (format == "dot") {
        if (out_path.empty()) std::cout << to_dot(g);
        else std::ofstream(out_path) << to_dot(g);
      } else {
        json j = to_json(g);
        j["config"] = config_echo("net", q);
        j["config"]["index"] = index;
        emit(j, out_path);
      }
      return 0;
    }

    if (c_darboux->parsed()) {
      AngleQuadruple q = parse_angles(angles_s);
      json j;
      j["config"] = config_echo("darboux", q);
      j["config"]["a"] = a_param;
      j["config"]["lambda"] = lambda;
      DarbouxPolynomial dp = darboux_product(q, a_param, lambda);
      HeunParams par{q, a_param, lambda};
      residues_and_normalize(dp, par);
      j["status"] = to_string(dp.status);
      j["note"] = dp.note;
      j["degree"] = dp.deg;
      j["nullity"] = dp.nullity;
      if (dp.status == DarbouxStatus::Ok) {
        json roots = json::array(), residues = json::array();
        for (const auto& r : dp.roots) roots.push_back({r.real(), r.imag()});
        for (const auto& r : dp.residues)
          residues.push_back({r.real(), r.imag()});
        j["roots"] = roots;
        j["residues"] = residues;
        j["scale_c"] = dp.scale_c;
        json coeffs = json::array();
        for (double c : monomial_coefficients(dp)) coeffs.push_back(c);
        j["coefficients"] = coeffs;
      }
      emit(j, out_path);
      return dp.status == DarbouxStatus::Ok ? 0 : 1;
    }

    if (c_solve->parsed()) {
      AngleQuadruple q = parse_angles(angles_s);
      if (q.two_delta() <= -2) q = relabel_marking(q);
      ScanConfig sc;
      sc.grid = grid;
      if (!scan_s.empty()) {
        auto comma = scan_s.find(',');
        if (comma == std::string::npos)
          throw CLI::ValidationError("--scan", "expected lo,hi");
        sc.lo = std::stod(scan_s.substr(0, comma));
        sc.hi = std::stod(scan_s.substr(comma + 1));
      }
      sc.mode = parallel ? ExecMode::Parallel : ExecMode::Serial;
      ScanLog log;
      auto roots = solve_lambda(q, a_param, sc, &log);
      json j;
      j["config"] = config_echo("solve", q);
      j["config"]["a"] = a_param;
      auto range = sc.lo == sc.hi ? default_scan_range(q, a_param)
                                  : std::make_pair(sc.lo, sc.hi);
      j["config"]["scan"] = {range.first, range.second};
      j["config"]["grid"] = grid;
      json rts = json::array();
      for (const auto& r : roots) rts.push_back(to_json(r));
      j["roots"] = rts;
      j["skipped_lambdas"] = log.skipped.size();
      j["messages"] = log.messages;
      emit(j, out_path);
      return 0;
    }

    if (c_trace->parsed()) {
      AngleQuadruple q = parse_angles(angles_s);
      if (q.two_delta() <= -2) q = relabel_marking(q);
      TraceConfig tc;
      tc.mode = parallel ? ExecMode::Parallel : ExecMode::Serial;
      FamilyCurve c = trace_branch(q, branch, tc);
      std::ostringstream os;
      os << "# sphrect trace angles=" << q.str() << " branch=" << branch
         << "\n";
      os << "a,lambda,K,theta,residual\n";
      char line[256];
      for (const auto& p : c.points) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      p.a, p.lambda, p.K, p.theta ? *p.theta : -1.0,
                      p.residual);
        os << line;
      }
      if (out_path.empty()) std::cout << os.str();
      else std::ofstream(out_path) << os.str();
      return c.lost ? 3 : 0;
    }

    if (c_limits->parsed()) {
      AngleQuadruple q0 = parse_angles(angles_s);
      AngleQuadruple q = q0.two_delta() <= -2 ? relabel_marking(q0) : q0;
      json j;
      j["config"] = config_echo("limits", q0);
      j["config"]["method"] = method;
      bool ok = true;
      if (method == "both" || method == "extrapolate") {
        TraceConfig tc;
        tc.mode = parallel ? ExecMode::Parallel : ExecMode::Serial;
        auto lims = limit_moduli_extrapolated(q, tc);
        json arr = json::array();
        for (const auto& l : lims) arr.push_back(to_json(l));
        j["extrapolation"] = arr;
        ok = ok &&
             static_cast<long>(lims.size()) == count(q).first_type_count;
      }
      if (method == "both" || method == "sc") {
        try {
          auto sols = limit_modulus_sc_solutions(q);
          json arr = json::array();
          for (const auto& s : sols) arr.push_back(to_json(s));
          j["degenerate_sc"] = arr;
          ok = ok &&
               static_cast<long>(sols.size()) == count(q).first_type_count;
        } catch (const std::exception& e) {
          j["degenerate_sc_error"] = e.what();
          if (method == "sc") ok = false;
        }
      }
      emit(j, out_path);
      return ok ? 0 : 3;
    }
  } catch (const std::exception& e) {
    json err{{"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}
