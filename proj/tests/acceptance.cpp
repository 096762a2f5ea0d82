// Acceptance run: one line per criterion with its runtime and limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "superjordan/jordanian.hpp"
#include "superjordan/numeric.hpp"

using namespace sj;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<bool(std::string&)> run;
};

bool relations(std::string&) {
  return validate(fundamental()).all_pass() && validate(fund2()).all_pass();
}

bool construction(std::string& detail) {
  for (const auto& rep : {fundamental(), fund2()})
    if (!(r_q(fundamental(), rep).r == r_fund_arb(rep))) {
      detail = "mismatch for " + rep.name();
      return false;
    }
  return true;
}

bool ybe_q(std::string& detail) {
  const auto f = fundamental();
  const auto res = ybe_check(r_q(f, f).r, f.space());
  detail = std::to_string(res.nonzero) + " nonzero residual entries";
  return res.holds;
}

bool count_failures(const std::vector<IdentityVerdict>& vs, std::string& detail) {
  int checked = 0, failed = 0;
  for (const auto& v : vs) {
    if (!v.gating) continue;
    ++checked;
    if (!v.holds) ++failed;
  }
  detail = std::to_string(checked) + " instances, " + std::to_string(failed) + " failed";
  return failed == 0 && checked > 0;
}

bool identities_symbolic(std::string& detail) { return count_failures(verify_identities_symbolic(6), detail); }

bool identities_rep(std::string& detail) {
  auto all = verify_identities_rep(fundamental());
  for (auto& v : verify_identities_rep(fund2())) all.push_back(std::move(v));
  return count_failures(all, detail);
}

bool t_extraction(std::string& detail) {
  for (const auto& rep : {fundamental(), fund2()})
    if (!t_report(rep).all_pass()) {
      detail = "failed in " + rep.name();
      return false;
    }
  return true;
}

bool contraction(std::string& detail) {
  for (const auto& rep : {fundamental(), fund2()}) {
    const auto r = limit_Rh(rep);
    if (!r.verdict()) {
      detail = rep.name() + (r.pole.empty() ? "" : ": " + r.pole);
      return false;
    }
  }
  return true;
}

bool rh_ybe(std::string&) {
  const auto p = rh_property_report(fundamental());
  return p.ybe.holds && p.identity_at_zero;
}

bool oracle(std::string& detail) {
  static const std::vector<Letter> pool{
      Letter::of(Generator::E1), Letter::of(Generator::E2), Letter::of(Generator::E3), Letter::of(Generator::F1),
      Letter::of(Generator::F2), Letter::of(Generator::F3), Letter::cartan(1, 0),      Letter::cartan(0, 1),
      Letter::cartan(-1, 0),     Letter::cartan(0, -1)};
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> len(1, 6);
  const std::vector<Representation> reps{fundamental(), fund2()};
  int mismatches = 0;
  for (int n = 0; n < 200; ++n) {
    std::vector<Letter> w(len(rng));
    for (auto& l : w) l = pool[pick(rng)];
    const AlgebraElement normal = word(w);
    for (const auto& rep : reps) {
      GradedMatrix direct = GradedMatrix::identity(rep.space());
      for (const auto& l : w) direct = direct * rep.image(l);
      if (!(evaluate(normal, rep) == direct)) ++mismatches;
    }
  }
  detail = "200 words, " + std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

bool numeric_channel(std::string& detail) {
  double worst = 0;
  bool ok = true;
  for (const auto& c : numeric::spot_check(1.21, 0.3, 1e-10)) {
    ok = ok && c.pass;
    worst = std::max(worst, c.max_rel_error);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max rel error %.2e", worst);
  detail = buf;
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "relation suite in fund and fund (x) fund", 5, relations},
      {2, "product and block constructions of R_q agree", 60, construction},
      {3, "graded YBE for R_q on fund (x3)", 120, ybe_q},
      {4, "twist identities, symbolic through h^6", 120, identities_symbolic},
      {5, "twist identities in fund and fund (x) fund", 60, identities_rep},
      {6, "T extraction, closed form and powers", 30, t_extraction},
      {7, "contraction limit equals assembled R_h", 120, contraction},
      {8, "graded YBE for R_h and R_h(h=0) = 1", 120, rh_ybe},
      {9, "PBW normal form against matrix products", 60, oracle},
      {10, "numeric channel at (1.21, 0.3)", 5, numeric_channel},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < c.limit_s;
    if (!in_time) detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    const bool pass = ok && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %2d: %s (%.2f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), dt,
                c.limit_s, detail.empty() ? "" : " - ", detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
