#include "dyckstat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dyckstat/error.hpp"
#include "dyckstat/omega.hpp"
#include "dyckstat/pi.hpp"
#include "dyckstat/series.hpp"
#include "dyckstat/tree.hpp"
#include "dyckstat/verify.hpp"

namespace dyckstat {

namespace {

struct Options {
  bool paren = false;
  bool unsafe_cap = false;
  std::string out_file;

  int n = 0;
  std::string stat;
  int m = 0;
  std::vector<int> residues;
  int s = 0;
  std::string format = "text";

  std::string bijection;
  std::string path;
  bool trace = false;

  int order = 10;
  std::string which = "P";

  std::string check;
  int max_n = -1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DyckPath read_path(const Options& o) {
  if (!o.paren && o.path.find_first_of("()") != std::string::npos) {
    throw UsageError("parentheses in path words need --paren");
  }
  return parse_path(o.path);
}

EnumerationCaps caps_for(const Options& o) {
  EnumerationCaps caps;
  if (o.unsafe_cap) {
    caps.dyck = std::numeric_limits<int>::max();
    caps.sary = std::numeric_limits<int>::max();
  }
  return caps;
}

void require_m(const Options& o) {
  if (o.m == 0) throw UsageError("--m is required");
}

std::string run_table(const Options& o) {
  Statistic stat;
  const auto kind = statistic_from_string(o.stat);
  switch (kind) {
    case StatisticKind::ExteriorPairs: stat = Statistic::exterior(); break;
    case StatisticKind::PyramidWeight: stat = Statistic::pyramid(); break;
    case StatisticKind::Height: stat = Statistic::path_height(); break;
    case StatisticKind::UpResidue:
      require_m(o);
      if (o.residues.empty()) throw UsageError("--residues is required for up-residue");
      stat = Statistic::up_residue(ResidueSpec(o.m, o.residues));
      break;
    case StatisticKind::SAryPyramidWeight:
    case StatisticKind::SAryExteriorDown:
      if (o.s < 1) throw UsageError("--s is required for s-ary statistics");
      stat = kind == StatisticKind::SAryPyramidWeight ? Statistic::sary_pyramid(o.s) : Statistic::sary_exterior(o.s);
      break;
  }
  const auto table = distribution(o.n, stat, caps_for(o));
  if (o.format == "json") return table.to_json() + "\n";
  if (o.format == "csv") return table.to_csv();
  return table.to_text() + "\n";
}

std::string trace_text(const PhiTrace& trace) {
  std::string s;
  for (const auto& e : trace.entries) {
    s += std::string(static_cast<std::size_t>(2 * e.depth), ' ') + to_string(e.label) + " " + e.word + "\n";
  }
  return s;
}

std::string run_map(const Options& o) {
  const auto p = read_path(o);
  if (o.bijection == "pi" || o.bijection == "pi-inverse") {
    PhiTrace trace;
    const auto image = o.bijection == "pi" ? Pi(p, &trace) : Pi_inverse(p, &trace);
    return render_text(image) + "\n" + (o.trace ? trace_text(trace) : "");
  }
  require_m(o);
  const auto image = o.bijection == "omega" ? omega(p, o.m) : psi(p, o.m);
  std::string s = render_text(image) + "\n";
  if (o.trace) {
    if (height(p) >= o.m - 1) {
      s += decompose_standard(p, o.m).to_json() + "\n";
    } else {
      s += "fixed: height below m-1\n";
    }
  }
  return s;
}

std::string run_series(const Options& o) {
  if (o.s > 0) {
    if (o.which != "P" && o.which != "E") throw UsageError("--which must be P or E");
    return sary_series(o.s, o.which == "P" ? SAryGf::P : SAryGf::E, o.order).to_triangle();
  }
  require_m(o);
  if (o.residues.empty()) throw UsageError("--residues is required");
  return cf_series(ResidueSpec(o.m, o.residues), o.order).to_triangle();
}

VerifyReport run_check(const Options& o) {
  const auto bound = [&](int fallback) {
    const int n = o.max_n >= 0 ? o.max_n : fallback;
    if (n > EnumerationCaps{}.dyck && !o.unsafe_cap) {
      throw UsageError("--max-n " + std::to_string(n) + " exceeds the enumeration cap; pass --unsafe-cap");
    }
    return n;
  };
  const auto ms = [&](std::vector<int> fallback) { return o.m != 0 ? std::vector<int>{o.m} : fallback; };
  const std::string& c = o.check;
  if (c == "thm-main") {
    const int order = o.max_n >= 0 ? o.max_n : 14;
    return o.m != 0 ? verify_theorem_main(o.m, o.m, order) : verify_theorem_main(2, 6, order);
  }
  if (c == "cf-vs-brute") return verify_cf_vs_brute(o.m != 0 ? o.m : 5, bound(10));
  if (c == "pi-transport") return verify_pi_transport(bound(9));
  if (c == "roundtrips") return verify_roundtrips(bound(9), bound(10));
  if (c == "omega-involution") return verify_omega_involution(bound(9), ms({2, 3, 4, 5}));
  if (c == "psi-classes") return verify_psi_classes(bound(9), ms({2, 3, 4, 5}));
  if (c == "narayana") return verify_narayana(bound(10));
  if (c == "sary-duality") {
    const int order = o.max_n >= 0 ? o.max_n : 10;
    return verify_sary(3, order, {9, 6, 6});
  }
  if (c == "quadratic-g03") return verify_quadratic_g03(o.max_n >= 0 ? o.max_n : 12);
  if (c == "conjecture-1") return verify_conjecture(1, ms({4, 5, 6}), o.max_n >= 0 ? o.max_n : 12);
  if (c == "conjecture-2") return verify_conjecture(2, ms({6, 7}), o.max_n >= 0 ? o.max_n : 12);
  throw UsageError("unknown check " + c);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dyck path statistics, bijections and generating functions", "dyckstat"};
  app.require_subcommand(1);
  app.add_flag("--paren", o.paren, "Accept ( and ) as step letters");
  app.add_flag("--unsafe-cap", o.unsafe_cap, "Lift the exhaustive enumeration caps");
  app.add_option("--out", o.out_file, "Write output to FILE instead of standard output");

  auto* table = app.add_subcommand("table", "Distribution of a statistic over all paths of semilength n");
  table->add_option("--n", o.n, "Semilength")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--stat", o.stat, "exterior-pairs | pyramid-weight | up-residue | height | sary-pyramid-weight | sary-exterior-down")
      ->required();
  table->add_option("--m", o.m, "Modulus")->check(CLI::Range(2, 64));
  table->add_option("--residues", o.residues, "Marked residues, comma separated")->delimiter(',');
  table->add_option("--s", o.s, "Down-step size for s-ary paths")->check(CLI::PositiveNumber);
  table->add_option("--format", o.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));

  auto* map = app.add_subcommand("map", "Apply a bijection to a path");
  map->add_option("--bijection", o.bijection, "pi | pi-inverse | omega | psi")
      ->required()
      ->check(CLI::IsMember({"pi", "pi-inverse", "omega", "psi"}));
  map->add_option("--m", o.m, "Modulus for omega and psi")->check(CLI::Range(2, 64));
  map->add_option("--path", o.path, "Path word")->required();
  map->add_flag("--trace", o.trace, "Print case labels or the standard form");

  auto* tree = app.add_subcommand("tree", "Ordered tree of a path as an outline");
  tree->add_option("--path", o.path, "Path word")->required();

  auto* decompose = app.add_subcommand("decompose", "Standard form of a path as JSON");
  decompose->add_option("--m", o.m, "Modulus")->required()->check(CLI::Range(2, 64));
  decompose->add_option("--path", o.path, "Path word")->required();

  auto* series = app.add_subcommand("series", "Truncated bivariate generating function");
  series->add_option("--m", o.m, "Modulus")->check(CLI::Range(2, 64));
  series->add_option("--residues", o.residues, "Marked residues, comma separated")->delimiter(',');
  series->add_option("--sary", o.s, "s for the s-ary equations")->check(CLI::PositiveNumber);
  series->add_option("--which", o.which, "P or E");
  series->add_option("--order", o.order, "Truncation order")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run an exhaustive or series-level check");
  verify->add_option("--check", o.check, "Check name")
      ->required()
      ->check(CLI::IsMember({"thm-main", "cf-vs-brute", "pi-transport", "roundtrips", "omega-involution",
                             "psi-classes", "narayana", "sary-duality", "quadratic-g03", "conjecture-1",
                             "conjecture-2"}));
  verify->add_option("--m", o.m, "Restrict to one modulus")->check(CLI::Range(2, 64));
  verify->add_option("--max-n", o.max_n, "Semilength bound, or truncation order for series checks")
      ->check(CLI::NonNegativeNumber);

  auto* render = app.add_subcommand("render", "ASCII staircase of a path");
  render->add_option("--path", o.path, "Path word")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  int code = kExitOk;
  std::string text;
  try {
    if (table->parsed()) {
      text = run_table(o);
    } else if (map->parsed()) {
      text = run_map(o);
    } else if (tree->parsed()) {
      text = render_outline(path_to_tree(read_path(o)));
    } else if (decompose->parsed()) {
      text = decompose_standard(read_path(o), o.m).to_json() + "\n";
    } else if (series->parsed()) {
      text = run_series(o);
    } else if (verify->parsed()) {
      const auto rep = run_check(o);
      text = rep.to_text();
      if (!rep.passed) code = kExitVerifyFailed;
    } else if (render->parsed()) {
      text = render_staircase(read_path(o));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::Internal ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }

  if (!text.empty() && text.back() != '\n') text += '\n';
  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_file << '\n';
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace dyckstat
