#include "dyckstat/dyck.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "dyckstat/checked.hpp"
#include "dyckstat/error.hpp"

namespace dyckstat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadChar: return "BadChar";
    case ErrorKind::NonBalanced: return "NonBalanced";
    case ErrorKind::BelowAxis: return "BelowAxis";
    case ErrorKind::EmptyResidueSet: return "EmptyResidueSet";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NonUnitDivisor: return "NonUnitDivisor";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotPlanted: return "NotPlanted";
    case ErrorKind::NonPositiveSize: return "NonPositiveSize";
    case ErrorKind::HeightTooLow: return "HeightTooLow";
    case ErrorKind::NotReflectable: return "NotReflectable";
    case ErrorKind::InvalidM: return "InvalidM";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

// Shared validation for Dyck (s = 1) and s-ary step sequences.
void validate_steps(std::span<const Step> steps, int s) {
  long altitude = 0;
  long ups = 0;
  long downs = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::Up) {
      ++ups;
      ++altitude;
    } else {
      ++downs;
      altitude -= s;
    }
    if (altitude < 0) {
      throw Error(ErrorKind::BelowAxis, "path dips below the axis at step " + std::to_string(i));
    }
  }
  if (ups != static_cast<long>(s) * downs) {
    throw Error(ErrorKind::NonBalanced, "path does not return to the axis (" + std::to_string(ups) +
                                            " up, " + std::to_string(downs) + " down)");
  }
}

}  // namespace

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) { validate_steps(steps_, 1); }

std::vector<int> DyckPath::altitudes() const {
  std::vector<int> alt(steps_.size() + 1, 0);
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    alt[i + 1] = alt[i] + (steps_[i] == Step::Up ? 1 : -1);
  }
  return alt;
}

SAryPath::SAryPath(int s, std::vector<Step> steps) : s_(s), steps_(std::move(steps)) {
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "s must be at least 1");
  validate_steps(steps_, s_);
}

ResidueSpec::ResidueSpec(int m, std::span<const int> residues) : m_(m), mask_(0) {
  if (m < 2 || m > 64) throw Error(ErrorKind::InvalidArgument, "modulus must lie in [2, 64]");
  if (residues.empty()) throw Error(ErrorKind::EmptyResidueSet, "residue set is empty");
  for (int c : residues) {
    if (c < 0 || c >= m) {
      throw Error(ErrorKind::InvalidArgument,
                  "residue " + std::to_string(c) + " outside [0, " + std::to_string(m - 1) + "]");
    }
    mask_ |= std::uint64_t{1} << c;
  }
}

bool ResidueSpec::contains(int residue) const noexcept {
  return residue >= 0 && residue < m_ && ((mask_ >> residue) & 1U) != 0;
}

std::vector<int> ResidueSpec::residues() const {
  std::vector<int> out;
  for (int c = 0; c < m_; ++c) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

ResidueSpec ResidueSpec::shifted(int i) const {
  std::uint64_t mask = 0;
  for (int c = 0; c < m_; ++c) {
    if (contains(c)) mask |= std::uint64_t{1} << ((((c - i) % m_) + m_) % m_);
  }
  return ResidueSpec(MaskTag{}, m_, mask);
}

// Text format ---------------------------------------------------------------

std::vector<Step> parse_steps(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U':
      case 'u':
      case '(':
        steps.push_back(Step::Up);
        break;
      case 'D':
      case 'd':
      case ')':
        steps.push_back(Step::Down);
        break;
      default:
        throw Error(ErrorKind::BadChar,
                    std::string("unexpected character '") + text[i] + "' at position " + std::to_string(i));
    }
  }
  return steps;
}

DyckPath parse_path(std::string_view text) { return DyckPath(parse_steps(text)); }

std::string render_text(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step st : steps) out.push_back(st == Step::Up ? 'U' : 'D');
  return out;
}

std::string render_text(const DyckPath& p) { return render_text(p.steps()); }

std::string render_staircase(const DyckPath& p) {
  if (p.empty()) return "\n";
  const int h = height(p);
  std::vector<std::string> rows(static_cast<std::size_t>(h), std::string(p.size(), ' '));
  int alt = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == Step::Up) {
      rows[static_cast<std::size_t>(alt)][i] = '/';
      ++alt;
    } else {
      --alt;
      rows[static_cast<std::size_t>(alt)][i] = '\\';
    }
  }
  std::string out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    std::string row = *it;
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

// Enumeration ---------------------------------------------------------------

DyckEnumerator::DyckEnumerator(int n) : n_(n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "semilength must be nonnegative");
}

std::optional<DyckPath> DyckEnumerator::next() {
  if (done_) return std::nullopt;
  const auto n = static_cast<std::size_t>(n_);
  if (!started_) {
    started_ = true;
    current_.assign(n, Step::Up);
    current_.resize(2 * n, Step::Down);
    return DyckPath(current_);
  }
  // Rightmost up step that can turn into a down step; refill the tail minimally.
  std::vector<int> before(current_.size(), 0);
  std::vector<std::size_t> ups_before(current_.size(), 0);
  int alt = 0;
  std::size_t ups = 0;
  for (std::size_t i = 0; i < current_.size(); ++i) {
    before[i] = alt;
    ups_before[i] = ups;
    if (current_[i] == Step::Up) {
      ++alt;
      ++ups;
    } else {
      --alt;
    }
  }
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (current_[i] == Step::Up && before[i] >= 1) {
      current_[i] = Step::Down;
      std::size_t remaining_ups = n - ups_before[i];
      std::size_t pos = i + 1;
      for (; remaining_ups > 0; --remaining_ups) current_[pos++] = Step::Up;
      for (; pos < current_.size(); ++pos) current_[pos] = Step::Down;
      return DyckPath(current_);
    }
  }
  done_ = true;
  return std::nullopt;
}

void for_each_dyck(int n, const std::function<void(const DyckPath&)>& visit) {
  DyckEnumerator e(n);
  while (auto p = e.next()) visit(*p);
}

std::vector<DyckPath> enumerate_dyck(int n) {
  std::vector<DyckPath> out;
  for_each_dyck(n, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

namespace {

void sary_recurse(int s, std::size_t total, long ups_left, long downs_left, long altitude,
                  std::vector<Step>& prefix, const std::function<void(const SAryPath&)>& visit) {
  if (prefix.size() == total) {
    visit(SAryPath(s, prefix));
    return;
  }
  if (ups_left > 0) {
    prefix.push_back(Step::Up);
    sary_recurse(s, total, ups_left - 1, downs_left, altitude + 1, prefix, visit);
    prefix.pop_back();
  }
  if (downs_left > 0 && altitude >= s) {
    prefix.push_back(Step::Down);
    sary_recurse(s, total, ups_left, downs_left - 1, altitude - s, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_sary(int s, int n, const std::function<void(const SAryPath&)>& visit) {
  if (s < 1 || n < 0) throw Error(ErrorKind::InvalidArgument, "need s >= 1 and n >= 0");
  std::vector<Step> prefix;
  const auto total = static_cast<std::size_t>((s + 1) * n);
  prefix.reserve(total);
  sary_recurse(s, total, static_cast<long>(s) * n, n, 0, prefix, visit);
}

std::vector<SAryPath> enumerate_sary(int s, int n) {
  std::vector<SAryPath> out;
  for_each_sary(s, n, [&](const SAryPath& p) { out.push_back(p); });
  return out;
}

// Statistics ----------------------------------------------------------------

namespace {

// Peak scan shared by Dyck and s-ary paths: at each UD adjacency grow the
// pyramid while s more up steps precede and one more down step follows.
std::vector<Pyramid> scan_pyramids(std::span<const Step> steps, int s) {
  std::vector<Pyramid> out;
  const std::size_t len = steps.size();
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (steps[i] != Step::Up || steps[i + 1] != Step::Down) continue;
    std::size_t run_up = 0;
    for (std::size_t j = i + 1; j-- > 0 && steps[j] == Step::Up;) ++run_up;
    std::size_t run_down = 0;
    for (std::size_t j = i + 1; j < len && steps[j] == Step::Down; ++j) ++run_down;
    const std::size_t k = std::min(run_up / static_cast<std::size_t>(s), run_down);
    if (k == 0) continue;
    out.push_back({i + 1 - k * static_cast<std::size_t>(s), static_cast<int>(k)});
  }
  // Step ranges must be pairwise disjoint.
  for (std::size_t a = 1; a < out.size(); ++a) {
    const auto& prev = out[a - 1];
    const std::size_t prev_end = prev.start_index + static_cast<std::size_t>(prev.height) * (s + 1);
    if (prev_end > out[a].start_index) throw Error(ErrorKind::Internal, "overlapping maximal pyramids");
  }
  return out;
}

}  // namespace

std::vector<Pyramid> maximal_pyramids(const DyckPath& p) { return scan_pyramids(p.steps(), 1); }

int pyramid_weight(const DyckPath& p) {
  int w = 0;
  for (const auto& pyr : maximal_pyramids(p)) w += pyr.height;
  return w;
}

int exterior_pairs(const DyckPath& p) { return static_cast<int>(p.semilength()) - pyramid_weight(p); }

int exterior_pairs_by_matching(const DyckPath& p) {
  std::vector<std::size_t> open;
  int count = 0;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (p[b] == Step::Up) {
      open.push_back(b);
      continue;
    }
    const std::size_t a = open.back();
    open.pop_back();
    const std::size_t j = (b - a + 1) / 2;
    bool pyramid = true;
    for (std::size_t t = a; t <= b && pyramid; ++t) {
      pyramid = (p[t] == Step::Up) == (t < a + j);
    }
    if (!pyramid) ++count;
  }
  return count;
}

int up_steps_at_residue(std::span<const Step> steps, int start_altitude, const ResidueSpec& spec) {
  int alt = start_altitude;
  int count = 0;
  for (Step st : steps) {
    if (st == Step::Up) {
      ++alt;
      if (spec.marks(alt)) ++count;
    } else {
      --alt;
    }
  }
  return count;
}

int up_steps_at_residue(const DyckPath& p, const ResidueSpec& spec) {
  return up_steps_at_residue(p.steps(), 0, spec);
}

int height(const DyckPath& p) {
  int alt = 0;
  int best = 0;
  for (Step st : p.steps()) {
    alt += st == Step::Up ? 1 : -1;
    best = std::max(best, alt);
  }
  return best;
}

std::vector<DyckPath> blocks(const DyckPath& p) {
  std::vector<DyckPath> out;
  std::vector<Step> current;
  int alt = 0;
  for (Step st : p.steps()) {
    current.push_back(st);
    alt += st == Step::Up ? 1 : -1;
    if (alt == 0) {
      out.emplace_back(std::move(current));
      current.clear();
    }
  }
  return out;
}

std::vector<Pyramid> sary_maximal_pyramids(const SAryPath& p) { return scan_pyramids(p.steps(), p.s()); }

int sary_pyramid_weight(const SAryPath& p) {
  int w = 0;
  for (const auto& pyr : sary_maximal_pyramids(p)) w += pyr.height;
  return w;
}

int sary_exterior_down_steps(const SAryPath& p) {
  const auto pyramids = sary_maximal_pyramids(p);
  std::vector<bool> covered(p.size(), false);
  for (const auto& pyr : pyramids) {
    const std::size_t span = static_cast<std::size_t>(pyr.height) * static_cast<std::size_t>(p.s() + 1);
    for (std::size_t i = pyr.start_index; i < pyr.start_index + span; ++i) covered[i] = true;
  }
  int exterior = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.steps()[i] == Step::Down && !covered[i]) ++exterior;
  }
  if (exterior != static_cast<int>(p.length()) - sary_pyramid_weight(p)) {
    throw Error(ErrorKind::Internal, "exterior down steps disagree with n - pyramid weight");
  }
  return exterior;
}

// Counting ------------------------------------------------------------------

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error(ErrorKind::IndexOutOfRange, "binomial index out of range");
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    if (r > UINT64_MAX) throw Error(ErrorKind::Overflow, "binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t catalan(int n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "catalan index must be nonnegative");
  return fuss_catalan(1, n);
}

std::uint64_t narayana(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw Error(ErrorKind::IndexOutOfRange, "narayana needs 0 <= k <= n-1");
  const unsigned __int128 r =
      static_cast<unsigned __int128>(binomial(n, k)) * binomial(n, k + 1) / static_cast<unsigned>(n);
  if (r > UINT64_MAX) throw Error(ErrorKind::Overflow, "narayana number exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t fuss_catalan(int s, int n) {
  if (s < 1 || n < 0) throw Error(ErrorKind::IndexOutOfRange, "need s >= 1 and n >= 0");
  return binomial((s + 1) * n, n) / static_cast<std::uint64_t>(s * n + 1);
}

// Distribution tables -------------------------------------------------------

std::string to_string(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::ExteriorPairs: return "exterior-pairs";
    case StatisticKind::PyramidWeight: return "pyramid-weight";
    case StatisticKind::UpResidue: return "up-residue";
    case StatisticKind::Height: return "height";
    case StatisticKind::SAryPyramidWeight: return "sary-pyramid-weight";
    case StatisticKind::SAryExteriorDown: return "sary-exterior-down";
  }
  return "unknown";
}

StatisticKind statistic_from_string(std::string_view name) {
  for (auto kind : {StatisticKind::ExteriorPairs, StatisticKind::PyramidWeight, StatisticKind::UpResidue,
                    StatisticKind::Height, StatisticKind::SAryPyramidWeight, StatisticKind::SAryExteriorDown}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown statistic '" + std::string(name) + "'");
}

std::uint64_t DistributionTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [k, c] : counts) sum = checked_add(sum, c);
  return sum;
}

std::string DistributionTable::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["statistic"] = to_string(statistic.kind);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  if (statistic.residues) {
    params["m"] = statistic.residues->m();
    params["residues"] = statistic.residues->residues();
  }
  if (statistic.is_sary()) params["s"] = statistic.s;
  j["params"] = params;
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [k, count] : counts) c[std::to_string(k)] = count;
  j["counts"] = c;
  return j.dump();
}

DistributionTable DistributionTable::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed table JSON: ") + e.what());
  }
  DistributionTable t;
  try {
    t.n = j.at("n").get<int>();
    t.statistic.kind = statistic_from_string(j.at("statistic").get<std::string>());
    const auto& params = j.at("params");
    if (params.contains("m")) {
      const auto residues = params.at("residues").get<std::vector<int>>();
      t.statistic.residues = ResidueSpec(params.at("m").get<int>(), residues);
    }
    if (params.contains("s")) t.statistic.s = params.at("s").get<int>();
    for (const auto& [k, count] : j.at("counts").items()) t.counts[std::stoi(k)] = count.get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed table JSON: ") + e.what());
  }
  return t;
}

std::string DistributionTable::to_csv() const {
  std::ostringstream os;
  os << "k,count\n";
  for (const auto& [k, count] : counts) os << k << ',' << count << '\n';
  return os.str();
}

std::string DistributionTable::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, count] : counts) {
    if (!first) os << ' ';
    first = false;
    os << k << ':' << count;
  }
  return os.str();
}

DistributionTable distribution(int n, const Statistic& stat, const EnumerationCaps& caps) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  DistributionTable table{n, stat, {}};
  if (stat.is_sary()) {
    if (n > caps.sary) {
      throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " exceeds the s-ary enumeration cap " +
                                              std::to_string(caps.sary));
    }
    for_each_sary(stat.s, n, [&](const SAryPath& p) {
      const int k = stat.kind == StatisticKind::SAryPyramidWeight ? sary_pyramid_weight(p)
                                                                  : sary_exterior_down_steps(p);
      ++table.counts[k];
    });
    return table;
  }
  if (n > caps.dyck) {
    throw Error(ErrorKind::CapExceeded,
                "n = " + std::to_string(n) + " exceeds the Dyck enumeration cap " + std::to_string(caps.dyck));
  }
  if (stat.kind == StatisticKind::UpResidue && !stat.residues) {
    throw Error(ErrorKind::InvalidArgument, "up-residue statistic needs a residue set");
  }
  for_each_dyck(n, [&](const DyckPath& p) {
    int k = 0;
    switch (stat.kind) {
      case StatisticKind::ExteriorPairs: k = exterior_pairs(p); break;
      case StatisticKind::PyramidWeight: k = pyramid_weight(p); break;
      case StatisticKind::UpResidue: k = up_steps_at_residue(p, *stat.residues); break;
      case StatisticKind::Height: k = height(p); break;
      default: break;
    }
    ++table.counts[k];
  });
  return table;
}

}  // namespace dyckstat

std::size_t std::hash<dyckstat::DyckPath>::operator()(const dyckstat::DyckPath& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto st : p.steps()) {
    h ^= static_cast<std::size_t>(st) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}
