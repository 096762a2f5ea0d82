#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "superjordan/jordanian.hpp"
#include "superjordan/numeric.hpp"

using namespace sj;
using nlohmann::json;

namespace {

struct Options {
  std::string rep = "fund";
  std::string format = "text";
  int order = 6;
  std::string which = "q";
  std::string out;
  std::string dump_dir;
  bool check_blocks = false;
  bool numeric = false;
  double q0 = 1.21;
  double h0 = 0.3;
};

const char* mark(bool ok) { return ok ? "PASS" : "FAIL"; }

int finish(const Options& o, bool ok, const json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return ok ? 0 : 1;
}

std::string params_text(const IdentityVerdict& v) {
  std::ostringstream os;
  const int ar = identity_arity(v.id);
  if (ar == 1 || ar == 2) os << " alpha=" << v.params.alpha.get_str();
  if (ar == 2 || ar == 3) os << " beta=" << v.params.beta.get_str();
  return os.str();
}

int cmd_relations(const Options& o) {
  const auto report = validate(rep_by_name(o.rep));
  std::ostringstream os;
  for (const auto& c : report.checks) os << mark(c.holds) << "  " << c.relation << "\n";
  os << "relations in " << report.rep << ": " << mark(report.all_pass()) << "\n";
  return finish(o, report.all_pass(), to_json(report), os.str());
}

int cmd_identities(const Options& o) {
  const auto rep = rep_by_name(o.rep);
  std::vector<IdentityVerdict> all = verify_identities_symbolic(o.order);
  for (auto& v : verify_identities_rep(rep)) all.push_back(std::move(v));
  bool ok = true;
  std::ostringstream os;
  json arr = json::array();
  for (const auto& v : all) {
    if (v.gating) ok = ok && v.holds;
    os << (v.holds ? "PASS" : v.gating ? "FAIL" : "info") << "  " << std::left << std::setw(12) << v.channel
       << std::setw(6) << identity_name(v.id) << params_text(v);
    if (!v.note.empty()) os << "  (" << v.note << ")";
    os << "\n";
    arr.push_back(to_json(v));
  }
  os << "identities (order " << o.order << ", rep " << rep.name() << "): " << mark(ok) << "\n";
  return finish(o, ok, {{"order", o.order}, {"rep", rep.name()}, {"identities", arr}, {"pass", ok}}, os.str());
}

void dump(const std::filesystem::path& p, const json& j) {
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << j.dump(2) << "\n";
}

int cmd_jordanian(const Options& o) {
  const auto rep = rep_by_name(o.rep);
  const auto t = t_report(rep);
  const auto r = limit_Rh(rep);
  const auto props = rh_property_report(rep);
  const bool ok = t.all_pass() && r.verdict() && props.ybe.holds && props.identity_at_zero;

  if (!o.dump_dir.empty()) {
    const std::filesystem::path dir(o.dump_dir);
    std::filesystem::create_directories(dir);
    dump(dir / "conjugated.json", to_json(r.conjugated));
    dump(dir / "valuations.json", valuations_json(r));
    dump(dir / "limit.json", r.limit ? to_json(*r.limit) : json{{"pole", r.pole}});
    dump(dir / "assembled.json", to_json(r.assembled));
  }

  const json vals = valuations_json(r);
  std::ostringstream os;
  os << "representation " << rep.name() << " (dim " << rep.dim() << ")\n";
  os << "valuations at s=1: " << vals["entries"].size() << " nonzero entries, minimum "
     << vals["min_valuation"].get<int>() << "\n";
  if (!r.pole.empty()) os << "pole: " << r.pole << "\n";
  os << mark(t.difference_relation) << "  T - T^-1 = 2h e1\n";
  os << mark(t.inverse_relation) << "  T T^-1 = 1\n";
  os << mark(t.squared_relation) << "  T^2 - T^-2 = 2h (T + T^-1) e1\n";
  for (const auto& p : t.powers) os << mark(p.holds) << "  lim t^(" << p.alpha.get_str() << ") = T^" << p.alpha.get_str() << "\n";
  os << mark(t.closed_form_matches) << "  closed form of T^(+-1)\n";
  os << mark(r.blocks_match) << "  conjugated blocks match alpha, beta, gamma\n";
  os << mark(r.beta_limit_zero) << "  lim beta = 0\n";
  os << mark(r.gamma_limit_zero) << "  lim gamma = 0\n";
  os << mark(r.limit_equals_assembled) << "  limit equals assembled R_h\n";
  os << mark(props.ybe.holds) << "  YBE for R_h on fund (x) fund\n";
  os << mark(props.identity_at_zero) << "  R_h = 1 at h = 0\n";
  os << "info  P R_h P R_h = 1: " << (props.flip_product_is_identity ? "yes" : "no") << "\n";
  os << "info  h-degree of R_h - 1: " << props.hbar_degree << ", nilpotency index: " << props.nilpotency_index << "\n";
  os << "jordanian " << rep.name() << ": " << mark(ok) << "\n";

  json j{{"pipeline", to_json(r)},
         {"T", to_json(t)},
         {"valuations", vals},
         {"rh_properties",
          {{"ybe", props.ybe.holds},
           {"identity_at_zero", props.identity_at_zero},
           {"flip_product_is_identity", props.flip_product_is_identity},
           {"hbar_degree", props.hbar_degree},
           {"nilpotency_index", props.nilpotency_index}}},
         {"pass", ok}};
  return finish(o, ok, j, os.str());
}

json numeric_json(const std::vector<numeric::Comparison>& cs, bool& ok, std::ostringstream& os) {
  json arr = json::array();
  for (const auto& c : cs) {
    ok = ok && c.pass;
    os << mark(c.pass) << "  numeric " << c.label << " max rel error " << std::scientific << std::setprecision(2)
       << c.max_rel_error << std::defaultfloat << "\n";
    std::ostringstream err;
    err << std::scientific << std::setprecision(3) << c.max_rel_error;
    arr.push_back({{"label", c.label}, {"max_rel_error", err.str()}, {"pass", c.pass}});
  }
  return arr;
}

int cmd_rmatrix(const Options& o) {
  const auto f = fundamental();
  const auto rep = rep_by_name(o.rep);
  const auto b = r_q(f, rep);
  bool ok = true;
  std::ostringstream os;
  json j{{"rep", rep.name()}, {"dim", b.r.rows()}};
  os << "R_q on fund (x) " << rep.name() << ": " << b.r.rows() << "x" << b.r.cols() << ", " << b.r.nonzero_count()
     << " nonzero entries\n";
  if (!o.out.empty()) {
    dump(o.out, to_json(b));
    os << "written to " << o.out << "\n";
  }
  if (o.check_blocks) {
    const bool eq = b.r == r_fund_arb(rep);
    ok = ok && eq;
    j["block_form_equal"] = eq;
    os << mark(eq) << "  product formula equals block form\n";
  }
  if (o.numeric) {
    const auto nrep = numeric::by_name(o.rep, o.q0);
    j["numeric"] = numeric_json({numeric::compare("R_q fund (x) " + rep.name(), b.r,
                                                  numeric::r_q(numeric::fund(), nrep, o.q0), o.q0, o.h0, 1e-10)},
                                ok, os);
  }
  j["pass"] = ok;
  return finish(o, ok, j, os.str());
}

int cmd_ybe(const Options& o) {
  const auto rep = rep_by_name(o.rep);
  const GradedMatrix r = o.which == "q" ? r_q(rep, rep).r : assemble_Rh(rep);
  const auto res = ybe_check(r, rep.space());
  std::ostringstream os;
  os << mark(res.holds) << "  YBE for R_" << o.which << " on " << rep.name() << " (x3): " << res.nonzero
     << " nonzero residual entries\n";
  bool ok = res.holds;
  json j{{"which", o.which}, {"rep", rep.name()}, {"residual_nonzero", res.nonzero}, {"holds", res.holds}};
  if (o.numeric) {
    const auto nrep = numeric::by_name(o.rep, o.which == "q" ? o.q0 : 1.0);
    const auto approx = o.which == "q" ? numeric::r_q(nrep, nrep, o.q0) : numeric::r_h(nrep, o.h0);
    j["numeric"] = numeric_json({numeric::compare("R_" + o.which, r, approx, o.q0, o.h0, 1e-10)}, ok, os);
  }
  j["pass"] = ok;
  return finish(o, ok, j, os.str());
}

int default_order() {
  if (const char* env = std::getenv("SJW_ORDER")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring invalid SJW_ORDER='" << env << "'\n";
    }
  }
  return 6;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for U_q(sl(2|1)) and its Jordanian contraction"};
  app.require_subcommand(1);
  Options o;
  o.order = default_order();
  const std::vector<std::string> reps{"fund", "fund2", "fund3"};

  auto add_common = [&](CLI::App* c, const std::string& default_rep) {
    o.rep = default_rep;
    c->add_option("--rep", o.rep, "representation")->check(CLI::IsMember(reps))->capture_default_str();
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };
  auto add_numeric = [&](CLI::App* c) {
    c->add_flag("--numeric", o.numeric, "compare with a floating-point rebuild");
    c->add_option("--q0", o.q0, "numeric q")->capture_default_str();
    c->add_option("--h0", o.h0, "numeric h")->capture_default_str();
  };

  int (*handler)(const Options&) = nullptr;

  auto* verify = app.add_subcommand("verify", "verify relations or twist identities");
  verify->require_subcommand(1);
  auto* rel = verify->add_subcommand("relations", "defining relations in a representation");
  auto* ids = verify->add_subcommand("identities", "twist identities, symbolic and in a representation");
  auto* jord = app.add_subcommand("jordanian", "Jordanian contraction pipeline");
  jord->require_subcommand(1);
  auto* run = jord->add_subcommand("run", "run the pipeline");
  auto* rmat = app.add_subcommand("rmatrix", "R-matrix constructions");
  rmat->require_subcommand(1);
  auto* build = rmat->add_subcommand("build", "build R_q on fund (x) rep");
  auto* ybe = app.add_subcommand("ybe", "graded Yang-Baxter check on rep (x3)");

  for (auto* c : {rel, run, build, ybe}) add_common(c, "fund");
  // identities default to fund2
  ids->add_option("--rep", o.rep, "representation (default fund2)")->check(CLI::IsMember(reps));
  ids->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  ids->add_option("--order", o.order, "h-adic truncation order (env SJW_ORDER)")->check(CLI::PositiveNumber);
  run->add_option("--dump-stages", o.dump_dir, "directory for stage JSON dumps");
  build->add_option("--out", o.out, "write the R-matrix as JSON");
  build->add_flag("--check-blocks,--check-eq5", o.check_blocks, "compare with the block-form construction");
  add_numeric(build);
  ybe->add_option("--which", o.which, "q or h")->check(CLI::IsMember({"q", "h"}))->capture_default_str();
  add_numeric(ybe);

  rel->callback([&] { handler = cmd_relations; });
  ids->callback([&] { handler = cmd_identities; });
  run->callback([&] { handler = cmd_jordanian; });
  build->callback([&] { handler = cmd_rmatrix; });
  ybe->callback([&] { handler = cmd_ybe; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (*ids && ids->count("--rep") == 0) o.rep = "fund2";
  if (o.which == "h" && o.rep != "fund") {
    std::cerr << "ybe --which h: R_h is defined on fund (x) rep, so the check needs --rep fund\n";
    return 2;
  }
  if (o.numeric && (o.q0 == 0 || o.q0 == 1 || o.q0 == -1)) {
    std::cerr << "--q0 must differ from 0, 1 and -1\n";
    return 2;
  }
  if (o.numeric && o.q0 < 0) {
    std::cerr << "--q0 must be positive (s = sqrt(q0))\n";
    return 2;
  }
  try {
    return handler(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
