#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "seif/json_io.hpp"

using namespace seif;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;

// "-" is stdin; text starting with '[' or '{' is inline JSON; else a file.
Json read_input(const std::string& arg) {
  std::string text;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::BadInput, "cannot read " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return Json::parse(text);
}

std::string kind_of(const Json& j) {
  if (j.is_array()) return "seifert";
  if (j.is_object() && j.contains("kind") && j["kind"].is_string()) return j["kind"].get<std::string>();
  throw Error(ErrorCode::BadInput, "document has no kind");
}

SteenbrinkPMHS read_pmhs(const Json& j) {
  if (kind_of(j) == "tezp") {
    auto t = tezp_from_json(j);
    if (!t.hodge) throw Error(ErrorCode::BadInput, "TEZP document has no pmhs");
    return *t.hodge;
  }
  return pmhs_from_json(j);
}

TEZPData read_tezp(const Json& j, const Tolerances& tol) {
  if (kind_of(j) == "pmhs") return tezp_from_pmhs(pmhs_from_json(j), tol);
  return tezp_from_json(j);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  double tol = 0;
  double cluster_tol = 0;
  bool json = false;
  bool is_signed = false;
  Tolerances tolerances() const {
    Tolerances t = Tolerances::from_env();
    if (tol > 0) t.tol = tol;
    if (cluster_tol > 0) t.cluster_tol = cluster_tol;
    return t;
  }
};

int cmd_classify(const std::string& input, bool triple, const Options& o) {
  Json j = read_input(input);
  auto tol = o.tolerances();
  std::string kind = triple ? "triple" : kind_of(j);
  std::string text;
  Json out;
  if (kind == "triple") {
    auto d = classify_triple(triple_from_json(j), tol);
    text = to_string(d), out = to_json(d);
  } else if (kind == "tezp") {
    auto d = classify_seifert(tezp_from_json(j).l_hnor(), tol);
    text = to_string(d), out = to_json(d);
  } else if (kind == "pmhs") {
    auto d = classify_pmhs_seifert(pmhs_from_json(j), tol);
    text = to_string(d), out = to_json(d);
  } else {
    auto d = classify_seifert(seifert_from_json(j), tol);
    text = to_string(d), out = to_json(d);
  }
  if (o.json) print_json(out);
  else std::cout << text << "\n";
  return kOk;
}

int cmd_spectrum(const std::string& input, const Options& o) {
  auto p = read_pmhs(read_input(input));
  if (o.is_signed) p.is_signed = true;
  auto spp = spectral_pairs(p, o.tolerances());
  if (o.json) print_json(to_json(spp));
  else std::cout << to_string(spp) << "\n";
  return kOk;
}

int cmd_verify(const std::string& input, const Options& o) {
  auto p = read_pmhs(read_input(input));
  if (o.is_signed) p.is_signed = true;
  auto tol = o.tolerances();
  Report r = check_pmhs(p, tol);
  if (r.ok()) {
    auto more = verify_seifert_identities(p, tol);
    r.items.insert(r.items.end(), more.items.begin(), more.items.end());
  }
  if (o.json) print_json(to_json(r));
  else std::cout << r.to_string();
  return r.ok() ? kOk : kViolation;
}

int cmd_fl_check(const std::vector<std::string>& alphas, int max_block, const Options& o) {
  std::vector<Frac> grid;
  for (const auto& a : alphas) grid.push_back(frac_from_json(Json(a)));
  if (grid.empty()) grid = {Frac(1, 6), Frac(1, 3), Frac(1, 2), Frac(2, 3), Frac(1)};
  const double limit = 1e-6;
  double worst = 0;
  Json rows = Json::array();
  for (Frac a : grid)
    for (int d = 1; d <= max_block; ++d) {
      Mat n = Mat::Zero(d, d);
      for (int k = 0; k + 1 < d; ++k) n(k + 1, k) = 1;
      ElementarySection s{Vec::Ones(d), a - 1};
      auto fl = fl_elementary(s, n);
      for (Cx z : {Cx(1), Cx(0, 2), Cx(-1, 1)}) {
        Vec closed = evaluate(fl, n, std::log(z));
        Vec quad = quadrature_fl(s, n, z);
        double res = (closed - quad).cwiseAbs().maxCoeff() / std::max(1.0, closed.cwiseAbs().maxCoeff());
        worst = std::max(worst, res);
        rows.push_back({{"alpha", frac_string(a)}, {"block", d}, {"z", {z.real(), z.imag()}}, {"residual", res}});
        if (!o.json) std::printf("alpha=%s block=%d z=(%g,%g) residual=%.3e\n", frac_string(a).c_str(), d, z.real(), z.imag(), res);
      }
    }
  if (o.json) {
    Json j = document("fl_check");
    j["rows"] = rows;
    j["max_residual"] = worst;
    j["ok"] = worst <= limit;
    print_json(j);
  } else {
    std::printf("max residual %.3e (%s)\n", worst, worst <= limit ? "ok" : "above 1e-6");
  }
  return worst <= limit ? kOk : kViolation;
}

int run(int argc, char** argv) {
  CLI::App app{"Seifert forms, isometric triples and Steenbrink polarized mixed Hodge structures"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--tol", o.tol, "numerical tolerance (default 1e-9 or SEIFERT_TOL)");
  app.add_option("--cluster-tol", o.cluster_tol, "eigenvalue clustering tolerance");
  app.add_flag("--json", o.json, "machine-readable output");

  std::string in1, in2, name;
  bool triple = false, seifert = false, tate = false, report = false;
  std::vector<std::string> alphas;
  int block = 3;

  auto* classify = app.add_subcommand("classify", "normal forms of a Seifert form, triple, PMHS or TEZP document");
  classify->add_option("input", in1, "JSON text, file or -")->required();
  auto* f_tr = classify->add_flag("--triple", triple, "input is an isometric triple");
  classify->add_flag("--seifert", seifert, "input is a Seifert form")->excludes(f_tr);

  auto* spectrum = app.add_subcommand("spectrum", "spectral pairs of a PMHS");
  spectrum->add_option("input", in1)->required();
  spectrum->add_flag("--signed", o.is_signed, "treat as a signed Steenbrink PMHS");

  auto* verify = app.add_subcommand("verify", "PMHS axioms and the S / L^nor / G identities");
  verify->add_option("input", in1)->required();
  verify->add_flag("--signed", o.is_signed, "treat as a signed Steenbrink PMHS");

  auto* tensor = app.add_subcommand("tensor", "Thom-Sebastiani sum of two TEZP documents");
  tensor->add_option("a", in1)->required();
  tensor->add_option("b", in2)->required();

  auto* suspend_cmd = app.add_subcommand("suspend", "add a square x^2 to a TEZP document");
  suspend_cmd->add_option("input", in1)->required();

  auto* twist = app.add_subcommand("twist", "square-root Tate twist of a PMHS");
  twist->add_option("input", in1)->required();
  twist->add_flag("--tate", tate, "full Tate twist instead");
  twist->add_flag("--report", report, "check the twist instead of printing it");

  auto* fixture_cmd = app.add_subcommand("fixture", "named TEZP data: p1-mirror, x2, t-pqr:p,q,r");
  fixture_cmd->add_option("name", name)->required();

  auto* fl_check = app.add_subcommand("fl-check", "closed-form Fourier-Laplace transform against quadrature");
  fl_check->add_option("--alpha", alphas, "exponents in (0,1] as p/q");
  fl_check->add_option("--block", block, "largest Jordan block")->check(CLI::Range(1, 6));

  auto* make = app.add_subcommand("make-pmhs", "split PMHS from a ladder specification");
  make->add_option("input", in1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  auto tol = o.tolerances();
  if (*classify) return cmd_classify(in1, triple, o);
  if (*spectrum) return cmd_spectrum(in1, o);
  if (*verify) return cmd_verify(in1, o);
  if (*tensor) {
    print_json(to_json(tensor_tezp(read_tezp(read_input(in1), tol), read_tezp(read_input(in2), tol), tol)));
    return kOk;
  }
  if (*suspend_cmd) {
    print_json(to_json(suspend(read_tezp(read_input(in1), tol), tol)));
    return kOk;
  }
  if (*twist) {
    auto p = read_pmhs(read_input(in1));
    if (report) {
      auto r = twist_report(p, tol);
      if (o.json) print_json(to_json(r));
      else std::cout << r.to_string();
      return r.ok() ? kOk : kViolation;
    }
    print_json(to_json(tate ? tate_twist(p) : sqrt_tate_twist(p, tol)));
    return kOk;
  }
  if (*fixture_cmd) {
    print_json(to_json(fixture(name)));
    return kOk;
  }
  if (*fl_check) return cmd_fl_check(alphas, block, o);
  if (*make) {
    auto s = split_spec_from_json(read_input(in1));
    print_json(to_json(make_split_pmhs(s.ladders, s.weight, s.is_signed, s.seed)));
    return kOk;
  }
  return kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return kBadInput;
  }
}
