// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dyckstat/cli.hpp"
#include "dyckstat/dyck.hpp"
#include "dyckstat/series.hpp"
#include "dyckstat/verify.hpp"

namespace {

using namespace dyckstat;

// Rows n = 1..6 of the three residue tables for m = 3, as "k:count" text.
const std::map<int, std::vector<std::string>> kTables = {
    {0, {"0:1", "0:2", "0:4 1:1", "0:8 1:5 2:1", "0:16 1:18 2:7 3:1", "0:32 1:56 2:34 3:9 4:1"}},
    {1,
     {"1:1", "1:1 2:1", "1:2 2:2 3:1", "1:4 2:6 3:3 4:1", "1:8 2:17 3:12 4:4 5:1",
      "1:16 2:46 3:44 4:20 5:5 6:1"}},
    {2,
     {"0:1", "0:1 1:1", "0:1 1:3 2:1", "0:1 1:7 2:5 3:1", "0:1 1:15 2:18 3:7 4:1",
      "0:1 1:31 2:56 3:34 4:9 5:1"}},
};

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome from_reports(const std::vector<VerifyReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return {false, r.to_text()};
  }
  return {true, ""};
}

Outcome residue_tables() {
  int rows = 0;
  for (const auto& [c, expected] : kTables) {
    for (int n = 1; n <= 6; ++n) {
      std::ostringstream out;
      std::ostringstream err;
      const int code = run_cli({"table", "--n", std::to_string(n), "--stat", "up-residue", "--m", "3", "--residues",
                                std::to_string(c)},
                               out, err);
      const auto& want = expected[static_cast<std::size_t>(n - 1)];
      if (code != 0 || out.str() != want + "\n") {
        return {false, "c=" + std::to_string(c) + " n=" + std::to_string(n) + ": got '" + out.str() + "' want '" +
                           want + "'"};
      }
      ++rows;
    }
  }
  return {rows == 18, std::to_string(rows) + " rows"};
}

Outcome residue_identity() {
  auto rep = verify_theorem_main(2, 6, 14);
  for (int m = 2; m <= 6; ++m) {
    const auto r = check_theorem_main(m, 14);
    if (!r.higher_powers_vanish) rep.fail("y^i terms with i >= 2 survive for m=" + std::to_string(m));
  }
  return from_reports({rep});
}

Outcome quadratic() { return {check_quadratic_g03(12), ""}; }

Outcome conjecture() {
  auto r1 = verify_conjecture(1, {4, 5, 6}, 12);
  auto r2 = verify_conjecture(2, {6, 7}, 12);
  // The report must spell out a mismatching coefficient.
  auto probe = check_conjecture(1, 4, 4);
  probe.mismatches.push_back({3, 1, 7, 8});
  const auto text = probe.to_text();
  if (text.find("DISAGREEMENT") == std::string::npos || text.find("[x^3 y^1] lhs = 7, rhs = 8") == std::string::npos) {
    r1.fail("report format does not flag mismatching coefficients");
  }
  const auto out = from_reports({r1, r2});
  if (out.passed) std::cout << r1.to_text() << r2.to_text();
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "residue tables m=3, n=1..6, c=0,1,2", 1.0, residue_tables},
      {2, "exterior pairs to red up steps under Pi, n<=9, injective", 30.0,
       [] { return from_reports({verify_pi_transport(9)}); }},
      {3, "Pi, Phi round-trips n<=9; phi round-trip on planted trees n<=10", 60.0,
       [] { return from_reports({verify_roundtrips(9, 10)}); }},
      {4, "Omega involution, class transport, segment censuses, n<=9, m=2..5", 60.0,
       [] { return from_reports({verify_omega_involution(9, {2, 3, 4, 5})}); }},
      {5, "G^(m-1;m) - y G^(0;m) identity, m=2..6, N=14", 5.0, residue_identity},
      {6, "continued fraction vs enumeration, m<=5, N=10", 60.0,
       [] { return from_reports({verify_cf_vs_brute(5, 10)}); }},
      {7, "quadratic equation for G^(0;3), N=12", 1.0, quadratic},
      {8, "even-height distribution is Narayana, n<=10", 30.0, [] { return from_reports({verify_narayana(10)}); }},
      {9, "s-ary equations, census and duality, s=1..3", 60.0,
       [] { return from_reports({verify_sary(3, 10, {9, 6, 6})}); }},
      {10, "conjectured relations, part 1 m=4..6, part 2 m=6,7, N=12", 10.0, conjecture},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = outcome.passed && in_time;
    if (!ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << timing << ")\n";
    if (!outcome.passed && !outcome.detail.empty()) std::cout << outcome.detail << '\n';
    if (!in_time) std::cout << "  exceeded the time limit\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
