// Command-line front end.  Three commands:
//
//   qgw compute --n 5 --degrees 5 --qmax 3 --what i0
//   qgw verify  --n 5 --degrees 5 --qmax 10 --suites popa,pf
//   qgw table   --n 5 --degrees 5 --qmax 5
//
// Output is JSON (default) or CSV, written to stdout or --output.  All
// rationals are exact strings "p" or "p/q" in lowest terms; --decimal K
// appends a clearly-marked K-digit approximation.  Exit codes: 0 success,
// 1 verification/certification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgw/asymptotics.hpp"
#include "qgw/birkhoff.hpp"
#include "qgw/elliptic.hpp"
#include "qgw/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Request {
  std::string command;
  qgw::CIModel model;
  int qmax = 0;
  std::string what;
  std::vector<std::string> suites;
  std::string format = "json";
  std::string output;
  int decimal = -1;  // digits; negative = off
};

json series_json(const qgw::QSeries& s) {
  json arr = json::array();
  for (int d = 0; d <= s.trunc(); ++d) arr.push_back(qgw::rat_str(s[d]));
  return arr;
}

json series_decimal_json(const qgw::QSeries& s, int digits) {
  json arr = json::array();
  for (int d = 0; d <= s.trunc(); ++d) arr.push_back(qgw::rat_decimal(s[d], digits));
  return arr;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

json model_json(const qgw::CIModel& m) {
  json deg = json::array();
  for (int l : m.degrees) deg.push_back(l);
  return json{{"n", m.n}, {"degrees", deg}};
}

void emit(const Request& req, const std::string& text) {
  if (req.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(req.output, std::ios::binary);
  if (!f) throw qgw::error("cannot open output file '" + req.output + "'");
  f << text;
}

// ---- compute ----

std::vector<qgw::QSeries> compute_series(const Request& req, std::vector<std::string>& labels) {
  const qgw::CIModel& m = req.model;
  const int qmax = req.qmax;
  const std::string& what = req.what;

  if (what == "i0") return labels = {"I0"}, std::vector{qgw::small_i(m, qmax).i0};
  if (what == "mirror-map")
    return labels = {"Q"}, std::vector{qgw::mirror_map(qgw::small_i(m, qmax)).big_q};
  if (what == "correction") {
    return labels = {"correction"},
           std::vector{qgw::wall_correction(m, qgw::small_i(m, qmax), qgw::chern_data(m))};
  }
  if (what == "mu" || what == "r0") {
    qgw::AsymptoticData ad =
        qgw::extract_asymptotics(qgw::default_fixed(m, qmax, qmax + 2), 0);
    labels = {what == "mu" ? "mu" : "R0"};
    return {what == "mu" ? ad.mu : ad.r[0]};
  }
  if (what == "ck" || what == "g1-quasimap") {
    qgw::BirkhoffData bd = qgw::compute_ck(qgw::default_underline(m, qmax));
    if (what == "g1-quasimap")
      return labels = {"g1-quasimap"}, std::vector{qgw::quasimap_g1(m, bd, qmax)};
    std::vector<qgw::QSeries> out;
    for (size_t k = 0; k < bd.c.size(); ++k) {
      labels.push_back("C" + std::to_string(k));
      out.push_back(bd.c[k]);
    }
    return out;
  }
  if (what == "g1-gw") return labels = {"g1-gw"}, std::vector{qgw::gw_g1(m, qmax).f_gw};
  throw qgw::error("unknown --what selector '" + what + "'");
}

int run_compute(const Request& req) {
  std::vector<std::string> labels;
  std::vector<qgw::QSeries> series = compute_series(req, labels);

  if (req.format == "json") {
    json out;
    out["model"] = model_json(req.model);
    out["qmax"] = req.qmax;
    out["what"] = req.what;
    if (series.size() == 1) {
      out["series"] = series_json(series[0]);
      if (req.decimal >= 0) out["series_decimal"] = series_decimal_json(series[0], req.decimal);
    } else {
      json arr = json::array(), lab = json::array();
      for (const auto& s : series) arr.push_back(series_json(s));
      for (const auto& l : labels) lab.push_back(l);
      out["labels"] = lab;
      out["series"] = arr;
      if (req.decimal >= 0) {
        json dec = json::array();
        for (const auto& s : series) dec.push_back(series_decimal_json(s, req.decimal));
        out["series_decimal"] = dec;
      }
    }
    out["version"] = kVersion;
    emit(req, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    bool multi = series.size() > 1;
    os << (multi ? "label,d,value" : "d,value");
    if (req.decimal >= 0) os << ",decimal";
    os << "\n";
    for (size_t k = 0; k < series.size(); ++k)
      for (int d = 0; d <= series[k].trunc(); ++d) {
        if (multi) os << csv_escape(labels[k]) << ",";
        os << d << "," << qgw::rat_str(series[k][d]);
        if (req.decimal >= 0) os << "," << qgw::rat_decimal(series[k][d], req.decimal);
        os << "\n";
      }
    emit(req, os.str());
  }
  return 0;
}

// ---- verify ----

int run_verify(const Request& req) {
  const qgw::CIModel& m = req.model;
  const int qmax = req.qmax;

  std::set<std::string> wanted(req.suites.begin(), req.suites.end());
  if (wanted.empty()) wanted = {"pf", "popa", "loop", "assembly"};
  for (const auto& s : wanted)
    if (s != "pf" && s != "popa" && s != "loop" && s != "assembly")
      throw CLI::ValidationError("--suites", "unknown suite '" + s + "'");

  std::vector<qgw::VerifyOutcome> outcomes;
  std::optional<qgw::IUnderline> iu;
  std::optional<qgw::BirkhoffData> bd;
  auto underline = [&]() -> const qgw::IUnderline& {
    if (!iu) iu = qgw::default_underline(m, qmax);
    return *iu;
  };

  // canonical suite order, independent of how --suites was spelled
  if (wanted.count("pf")) outcomes.push_back(qgw::pf_check(underline()));
  if (wanted.count("popa")) {
    bd = qgw::compute_ck(underline());
    qgw::AsymptoticData ad =
        qgw::extract_asymptotics(qgw::default_fixed(m, qmax, qmax + 2), 0);
    outcomes.push_back(qgw::popa_check(*bd, ad, m));
  }
  if (wanted.count("loop")) outcomes.push_back(qgw::loop_limit_check(m, qmax));
  if (wanted.count("assembly")) outcomes.push_back(qgw::assembly_check(m, qmax));

  bool all_passed = true;
  for (const auto& o : outcomes) all_passed = all_passed && o.passed;

  if (req.format == "json") {
    json out;
    out["model"] = model_json(m);
    out["qmax"] = qmax;
    json names = json::array();
    for (const auto& o : outcomes) names.push_back(o.suite);
    out["suites"] = names;
    json arr = json::array();
    for (const auto& o : outcomes) {
      json j{{"suite", o.suite}, {"q_order", o.q_order}, {"passed", o.passed}};
      if (o.first_failure) {
        j["first_failure"] = json{{"q_deg", o.first_failure->q_deg},
                                  {"place", o.first_failure->place},
                                  {"lhs", o.first_failure->lhs},
                                  {"rhs", o.first_failure->rhs}};
      }
      arr.push_back(j);
    }
    out["outcomes"] = arr;
    out["version"] = kVersion;
    emit(req, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "suite,q_order,passed,failure_q,failure_place,failure_lhs,failure_rhs\n";
    for (const auto& o : outcomes) {
      os << o.suite << "," << o.q_order << "," << (o.passed ? "true" : "false");
      if (o.first_failure)
        os << "," << o.first_failure->q_deg << "," << csv_escape(o.first_failure->place) << ","
           << csv_escape(o.first_failure->lhs) << "," << csv_escape(o.first_failure->rhs);
      else
        os << ",,,,";
      os << "\n";
    }
    emit(req, os.str());
  }
  return all_passed ? 0 : 1;
}

// ---- table ----

int run_table(const Request& req) {
  qgw::G1Report rep = qgw::gw_g1(req.model, req.qmax);

  if (req.format == "json") {
    json out;
    out["model"] = model_json(req.model);
    out["qmax"] = req.qmax;
    out["what"] = "invariants";
    json arr = json::array();
    for (const auto& [d, v] : rep.invariants) {
      json row{{"d", d}, {"N", qgw::rat_str(v)}};
      if (req.decimal >= 0) row["N_decimal"] = qgw::rat_decimal(v, req.decimal);
      arr.push_back(row);
    }
    out["invariants"] = arr;
    out["version"] = kVersion;
    emit(req, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << (req.decimal >= 0 ? "d,N,N_decimal\n" : "d,N\n");
    for (const auto& [d, v] : rep.invariants) {
      os << d << "," << qgw::rat_str(v);
      if (req.decimal >= 0) os << "," << qgw::rat_decimal(v, req.decimal);
      os << "\n";
    }
    emit(req, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact genus-one quasimap / Gromov-Witten series for Calabi-Yau "
               "complete intersections in projective space"};
  app.require_subcommand(1);

  Request req;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", req.model.n, "ambient projective space P^{n-1}")->required();
    cmd->add_option("--degrees", req.model.degrees, "multidegree l_1,...,l_r")
        ->required()
        ->delimiter(',');
    cmd->add_option("--qmax", req.qmax, "truncation order in q")->required();
    cmd->add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", req.output, "write the report to a file instead of stdout");
    cmd->add_option("--decimal", req.decimal,
                    "append approximate decimals with this many digits (exact values stay)");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute one generating series");
  add_common(compute);
  compute->add_option("--what", req.what, "series selector")
      ->required()
      ->check(CLI::IsMember({"g1-quasimap", "g1-gw", "ck", "mu", "r0", "i0",
                             "mirror-map", "correction"}));

  CLI::App* verify = app.add_subcommand("verify", "run certification suites");
  add_common(verify);
  verify->add_option("--suites", req.suites, "subset of pf,popa,loop,assembly (default: all)")
      ->delimiter(',');

  CLI::App* table = app.add_subcommand("table", "genus-one invariants N_{1,d}");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, any parse problem is usage
  }

  try {
    qgw::validate_model(req.model);
    if (req.qmax < 1) throw CLI::ValidationError("--qmax", "must be at least 1");
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (compute->parsed()) return run_compute(req);
    if (verify->parsed()) return run_verify(req);
    return run_table(req);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const qgw::window_error& e) {
    std::cerr << "usage error (window too small): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
