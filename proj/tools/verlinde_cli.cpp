// Command-line surface: compute theta-function dimensions, enumerate label
// sets, and run the identity suites. Reports are printed as text, JSON or
// CSV; exit codes are scriptable (0 pass, 1 identity failure, 2 rounding
// failure, 3 unbounded enumeration, 64 usage).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "verlinde/verlinde.hpp"

namespace {

using verlinde::IdentityReport;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitRoundingFailure = 2;
constexpr int kExitUnbounded = 3;
constexpr int kExitUsage = 64;

struct Options {
  std::string mode = "float";
  double tolerance = verlinde::kDefaultTolerance;
  std::uint64_t seed = 0;
  std::string output = "text";
  std::string out_file;
};

verlinde::Mode parse_mode(const std::string& s) {
  return s == "exact" ? verlinde::Mode::Exact : verlinde::Mode::Float;
}

std::vector<long long> parse_int_list(const std::string& csv, const char* what) {
  std::vector<long long> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": expected a comma-separated integer list");
    }
  }
  return out;
}

std::vector<int> parse_subset(const std::vector<std::string>& raw, const char* what) {
  std::vector<int> out;
  for (const auto& tok : raw) {
    if (tok.empty()) continue;
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      try {
        out.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": expected integers");
      }
    }
  }
  return out;
}

Json report_json(const IdentityReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json j{{"name", r.name},         {"params", params},        {"lhs", r.lhs},
         {"rhs", r.rhs},           {"residual", r.residual},  {"passed", r.passed},
         {"mode", verlinde::to_string(r.mode)}};
  if (r.lhs_scaled) j["lhs_scaled"] = *r.lhs_scaled;
  if (r.rhs_scaled) j["rhs_scaled"] = *r.rhs_scaled;
  return j;
}

std::string report_params_str(const IdentityReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += " ";
    s += k + "=" + v;
  }
  return s;
}

std::string render_reports(const std::vector<IdentityReport>& reports, const Options& opt, const Json& doc) {
  if (opt.output == "json") return doc.dump(2) + "\n";
  std::ostringstream os;
  if (opt.output == "csv") {
    os << "name,params,lhs,rhs,residual,passed,mode\n";
    for (const auto& r : reports) {
      os << r.name << ",\"" << report_params_str(r) << "\"," << r.lhs << "," << r.rhs << ","
         << r.residual << "," << (r.passed ? "true" : "false") << "," << verlinde::to_string(r.mode) << "\n";
    }
    return os.str();
  }
  for (const auto& r : reports) {
    os << (r.passed ? "[ok]  " : "[FAIL] ") << r.name << " " << report_params_str(r) << "  lhs=" << r.lhs
       << " rhs=" << r.rhs << " residual=" << r.residual << " mode=" << verlinde::to_string(r.mode);
    if (r.lhs_scaled) os << " lhs_scaled=" << *r.lhs_scaled << " rhs_scaled=" << *r.rhs_scaled;
    os << "\n";
  }
  return os.str();
}

void emit(const std::string& body, const Options& opt) {
  if (!opt.out_file.empty()) {
    std::ofstream f(opt.out_file, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + opt.out_file);
    f << body;
  } else {
    std::cout << body;
  }
}

// All n-element subsets of {0,…,m−1}.
std::vector<std::vector<int>> all_subsets(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  struct Rec {
    int m, n;
    std::vector<int>& acc;
    std::vector<std::vector<int>>& out;
    void run(int next) {
      if (static_cast<int>(acc.size()) == n) {
        out.push_back(acc);
        return;
      }
      for (int v = next; v < m; ++v) {
        acc.push_back(v);
        run(v + 1);
        acc.pop_back();
      }
    }
  } rec{m, n, acc, out};
  rec.run(0);
  return out;
}

std::vector<IdentityReport> run_gluing(int n, int kappa, int genus, const std::string& dims,
                                       std::uint64_t seed, double tol) {
  using namespace verlinde;
  const GradedSpace space = dims == "verlinde" ? GradedSpace::with_verlinde_dims(n, kappa, genus, tol)
                                               : GradedSpace::with_unit_dims(n, kappa);
  const GluingProblem problem = random_betas(space, seed);
  long long expect = 0;
  for (int l : space.primed_labels(n, n)) expect += space.dim_of(l);

  std::vector<IdentityReport> reports;
  auto base_params = [&](const char* name) {
    IdentityReport r;
    r.name = name;
    r.mode = Mode::Exact;
    r.params = {{"n", std::to_string(n)},
                {"kappa", std::to_string(kappa)},
                {"dims", dims},
                {"seed", std::to_string(seed)}};
    if (dims == "verlinde") r.params.emplace_back("genus", std::to_string(genus));
    return r;
  };

  IdentityReport dim_rep = base_params("gluing-dim");
  const long long got = glued_subspace_dim(problem);
  dim_rep.lhs = static_cast<double>(got);
  dim_rep.rhs = static_cast<double>(expect);
  dim_rep.passed = got == expect;
  reports.push_back(dim_rep);

  // π ∘ reconstruct = id and membership of the reconstruction, over the
  // standard basis of V′_{n,n}.
  long long total = 0, roundtrip_ok = 0, member_ok = 0;
  for (int l : space.primed_labels(n, n)) {
    for (long long c = 0; c < space.dim_of(static_cast<std::size_t>(l)); ++c) {
      SectionVector tp(space);
      tp.comps()[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)] = 1;
      const SectionVector th = reconstruct(problem, tp);
      ++total;
      if (project_pi(space, th, n, n) == tp) ++roundtrip_ok;
      if (check_section(problem, th)) ++member_ok;
    }
  }
  IdentityReport rec_rep = base_params("gluing-reconstruct");
  rec_rep.lhs = static_cast<double>(roundtrip_ok);
  rec_rep.rhs = static_cast<double>(total);
  rec_rep.passed = roundtrip_ok == total;
  reports.push_back(rec_rep);

  IdentityReport mem_rep = base_params("gluing-membership");
  mem_rep.lhs = static_cast<double>(member_ok);
  mem_rep.rhs = static_cast<double>(total);
  mem_rep.passed = member_ok == total;
  reports.push_back(mem_rep);
  return reports;
}

int run(int argc, char** argv) {
  CLI::App app{"Verlinde dimensions, theta-function label sets and identity suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--mode", opt.mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tolerance", opt.tolerance, "Relative tolerance for rounding/identity checks")
      ->envname("VERLINDE_TOLERANCE");
  app.add_option("--seed", opt.seed, "Seed for randomized constructions");
  app.add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", opt.out_file, "Write output to a file instead of stdout");

  // dim
  auto* dim_cmd = app.add_subcommand("dim", "Compute a dimension");
  std::string dim_target;
  int n = 2, kappa = 1, genus = 2, p = 0, q = 0, m = 3;
  std::string aprime_csv, a_csv, b_csv;
  dim_cmd->add_option("target", dim_target, "svb|spb|vb|pb|gvb")->required()
      ->check(CLI::IsMember({"svb", "spb", "vb", "pb", "gvb"}));
  dim_cmd->add_option("--n", n, "Rank")->required();
  dim_cmd->add_option("--kappa", kappa, "Level")->required();
  dim_cmd->add_option("--genus", genus, "Genus")->required();
  dim_cmd->add_option("--aprime", aprime_csv, "a' vector for spb, comma separated");
  dim_cmd->add_option("--a", a_csv, "a vector for pb, comma separated");
  dim_cmd->add_option("--b", b_csv, "b vector for pb (default: kappa - reversed a)");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate a label set");
  std::string set_name;
  bool count_only = false, primed = false;
  std::vector<std::string> I_raw, J_raw;
  std::string m_exp_csv, l_exp_csv;
  long long e_exp = 0, d_exp = 0;
  enum_cmd->add_option("set", set_name, "aprime|adoubleprime|saprime|adelta|apq|ageneral")->required()
      ->check(CLI::IsMember({"aprime", "adoubleprime", "saprime", "adelta", "apq", "ageneral"}));
  enum_cmd->add_option("--n", n, "Rank")->required();
  enum_cmd->add_option("--kappa", kappa, "Level");
  enum_cmd->add_option("--I", I_raw, "Stratum subset I (values or bare for empty)")->expected(0, -1);
  enum_cmd->add_option("--J", J_raw, "Stratum subset J (values or bare for empty)")->expected(0, -1);
  enum_cmd->add_option("--p", p, "p for apq");
  enum_cmd->add_option("--q", q, "q for apq");
  enum_cmd->add_flag("--primed", primed, "Primed variant of apq");
  enum_cmd->add_option("--m-exp", m_exp_csv, "m exponents for ageneral, comma separated");
  enum_cmd->add_option("--l-exp", l_exp_csv, "l exponents for ageneral, comma separated");
  enum_cmd->add_option("--e", e_exp, "det E exponent for ageneral");
  enum_cmd->add_option("--d", d_exp, "det F exponent for ageneral");
  enum_cmd->add_flag("--count", count_only, "Print the cardinality only");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
  std::string suite, rhs_variant = "corrected", dims_source = "unit";
  std::vector<std::string> B_raw;
  verify_cmd->add_option("suite", suite, "degeneration|zagier|zagier-matrix|unitarity|beta-compat|main|gluing|all")
      ->required()
      ->check(CLI::IsMember({"degeneration", "zagier", "zagier-matrix", "unitarity", "beta-compat", "main",
                             "gluing", "all"}));
  verify_cmd->add_option("--n", n, "Rank / minor size");
  verify_cmd->add_option("--kappa", kappa, "Level");
  verify_cmd->add_option("--genus", genus, "Genus");
  verify_cmd->add_option("--rhs", rhs_variant, "Right-hand side variant for zagier")
      ->check(CLI::IsMember({"corrected", "printed"}));
  verify_cmd->add_option("--m", m, "Root-of-unity order for zagier-matrix/unitarity");
  verify_cmd->add_option("--B", B_raw, "Column subset (default: all subsets)")->expected(0, -1);
  verify_cmd->add_option("--dims", dims_source, "Summand dimensions for gluing")
      ->check(CLI::IsMember({"unit", "verlinde"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  const verlinde::Mode mode = parse_mode(opt.mode);
  if (opt.tolerance <= 0) {
    std::cerr << "error: tolerance must be positive\n";
    return kExitUsage;
  }

  try {
    if (dim_cmd->parsed()) {
      verlinde::DimensionResult res;
      Json params{{"n", n}, {"kappa", kappa}, {"genus", genus}};
      if (dim_target == "svb") {
        res = verlinde::dim_svb(n, kappa, genus, opt.tolerance);
      } else if (dim_target == "vb") {
        res = verlinde::dim_vb(n, kappa, genus, opt.tolerance);
      } else if (dim_target == "gvb") {
        res = verlinde::dim_gvb(n, kappa, genus, opt.tolerance);
      } else if (dim_target == "spb") {
        const auto aprime = parse_int_list(aprime_csv, "--aprime");
        params["aprime"] = aprime;
        res = verlinde::dim_spb(n, kappa, genus, aprime, opt.tolerance);
      } else {
        verlinde::LabelPair x;
        x.a = parse_int_list(a_csv, "--a");
        if (!b_csv.empty()) {
          x.b = parse_int_list(b_csv, "--b");
        } else {
          x.b.resize(x.a.size());
          for (std::size_t i = 0; i < x.a.size(); ++i) x.b[i] = kappa - x.a[x.a.size() - 1 - i];
        }
        params["a"] = x.a;
        params["b"] = x.b;
        res = verlinde::dim_pb(n, kappa, genus, x, opt.tolerance);
      }
      Json doc{{"command", "dim"},
               {"target", dim_target},
               {"params", params},
               {"value", res.value},
               {"raw", res.raw},
               {"residual", res.residual}};
      if (opt.output == "json") {
        emit(doc.dump(2) + "\n", opt);
      } else if (opt.output == "csv") {
        std::ostringstream os;
        os << "target,value,raw,residual\n"
           << dim_target << "," << res.value << "," << res.raw << "," << res.residual << "\n";
        emit(os.str(), opt);
      } else {
        std::ostringstream os;
        os << dim_target << " value=" << res.value << " raw=" << res.raw << " residual=" << res.residual
           << "\n";
        emit(os.str(), opt);
      }
      return kExitPass;
    }

    if (enum_cmd->parsed()) {
      const std::vector<int> I_list = parse_subset(I_raw, "--I");
      const std::vector<int> J_list = parse_subset(J_raw, "--J");
      std::vector<verlinde::LabelPair> labels;
      if (set_name == "aprime") {
        labels = verlinde::enumerate_A_prime(n, kappa);
      } else if (set_name == "adoubleprime") {
        labels = verlinde::enumerate_A_double_prime(n, kappa);
      } else if (set_name == "saprime") {
        labels = verlinde::enumerate_SA_prime(n, kappa);
      } else if (set_name == "adelta") {
        labels = verlinde::enumerate_A_delta(n, kappa, verlinde::StratumIndex(I_list, J_list));
      } else if (set_name == "apq") {
        labels = verlinde::enumerate_A_pq(n, kappa, p, q, primed);
      } else {
        std::vector<long long> m_exp = parse_int_list(m_exp_csv, "--m-exp");
        std::vector<long long> l_exp = parse_int_list(l_exp_csv, "--l-exp");
        if (m_exp.empty() && l_exp.empty() && m_exp_csv.empty() && l_exp_csv.empty()) {
          // Default to the Δ^κ presentation when no exponents are given.
          const auto delta = verlinde::BundleExponents::delta_power(n, kappa);
          m_exp = delta.m_exp;
          l_exp = delta.l_exp;
          e_exp = delta.e;
          d_exp = delta.d;
        }
        if (l_exp.empty()) l_exp.assign(static_cast<std::size_t>(n), 0);
        const verlinde::BundleExponents L(n, m_exp, l_exp, e_exp, d_exp);
        labels = verlinde::enumerate_A_general(L, verlinde::StratumIndex(I_list, J_list));
      }
      Json doc{{"command", "enumerate"}, {"set", set_name}, {"n", n}, {"kappa", kappa},
               {"count", labels.size()}};
      if (!count_only) {
        Json arr = Json::array();
        for (const auto& x : labels) arr.push_back(Json{{"a", x.a}, {"b", x.b}});
        doc["labels"] = arr;
      }
      if (opt.output == "json") {
        emit(doc.dump(2) + "\n", opt);
      } else if (count_only) {
        emit(std::to_string(labels.size()) + "\n", opt);
      } else if (opt.output == "csv") {
        std::ostringstream os;
        os << "a,b\n";
        for (const auto& x : labels) {
          std::string a, b;
          for (std::size_t i = 0; i < x.a.size(); ++i) a += (i ? " " : "") + std::to_string(x.a[i]);
          for (std::size_t i = 0; i < x.b.size(); ++i) b += (i ? " " : "") + std::to_string(x.b[i]);
          os << "\"" << a << "\",\"" << b << "\"\n";
        }
        emit(os.str(), opt);
      } else {
        std::ostringstream os;
        for (const auto& x : labels) os << x.str() << "\n";
        emit(os.str(), opt);
      }
      return kExitPass;
    }

    // verify
    const std::vector<int> B_list = parse_subset(B_raw, "--B");
    std::vector<IdentityReport> reports;
    const verlinde::ZagierRhs rhs =
        rhs_variant == "printed" ? verlinde::ZagierRhs::Printed : verlinde::ZagierRhs::Corrected;
    auto append_zagier_matrix_suite = [&](int mm, int nn) {
      if (!B_list.empty()) {
        reports.push_back(verlinde::verify_zagier_matrix(mm, nn, B_list, mode, opt.tolerance));
      } else {
        for (const auto& B : all_subsets(mm, nn)) {
          reports.push_back(verlinde::verify_zagier_matrix(mm, nn, B, mode, opt.tolerance));
        }
      }
    };
    auto append_unitarity_suite = [&](int mm, int nn) {
      if (!B_list.empty()) {
        reports.push_back(verlinde::verify_unitarity(mm, nn, B_list));
      } else {
        for (const auto& B : all_subsets(mm, nn)) reports.push_back(verlinde::verify_unitarity(mm, nn, B));
      }
    };

    if (suite == "degeneration") {
      reports.push_back(verlinde::verify_degeneration(n, kappa, genus, opt.tolerance));
    } else if (suite == "zagier") {
      reports = verlinde::verify_zagier(n, kappa, mode, rhs, opt.tolerance);
    } else if (suite == "zagier-matrix") {
      append_zagier_matrix_suite(m, n);
    } else if (suite == "unitarity") {
      append_unitarity_suite(m, n);
    } else if (suite == "beta-compat") {
      reports = verlinde::verify_beta_dim_compat(n, kappa, genus, opt.tolerance);
    } else if (suite == "main") {
      reports.push_back(verlinde::verify_main_theorem_dims(n, kappa, genus, opt.tolerance));
    } else if (suite == "gluing") {
      reports = run_gluing(n, kappa, genus, dims_source, opt.seed, opt.tolerance);
    } else {  // all
      reports.push_back(verlinde::verify_degeneration(n, kappa, genus, opt.tolerance));
      for (auto& r : verlinde::verify_zagier(n, kappa, mode, rhs, opt.tolerance)) reports.push_back(r);
      append_zagier_matrix_suite(n + kappa, n);
      append_unitarity_suite(n + kappa, n);
      for (auto& r : verlinde::verify_beta_dim_compat(n, kappa, genus, opt.tolerance)) reports.push_back(r);
      reports.push_back(verlinde::verify_main_theorem_dims(n, kappa, genus, opt.tolerance));
      for (auto& r : run_gluing(n, kappa, genus, dims_source, opt.seed, opt.tolerance)) reports.push_back(r);
    }

    bool all_passed = true;
    double max_residual = 0.0;
    Json arr = Json::array();
    for (const auto& r : reports) {
      all_passed = all_passed && r.passed;
      max_residual = std::max(max_residual, r.residual);
      arr.push_back(report_json(r));
    }
    Json doc{{"command", "verify"},   {"suite", suite},  {"mode", verlinde::to_string(mode)},
             {"tolerance", opt.tolerance}, {"seed", opt.seed}, {"passed", all_passed},
             {"max_residual", max_residual}, {"reports", arr}};
    emit(render_reports(reports, opt, doc), opt);
    return all_passed ? kExitPass : kExitIdentityFailure;
  } catch (const verlinde::RoundingError& err) {
    std::cerr << "rounding failure: " << err.what() << "\n";
    return kExitRoundingFailure;
  } catch (const verlinde::UnboundedIndexSetError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUnbounded;
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
