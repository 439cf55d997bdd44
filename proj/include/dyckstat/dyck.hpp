#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyckstat {

/// A lattice step. Up sorts before Down, which fixes the lexicographic order
/// used by every enumerator in the library.
enum class Step : std::uint8_t { Up = 0, Down = 1 };

/// A Dyck path: equally many up and down steps, no prefix dips below the axis.
class DyckPath {
 public:
  DyckPath() = default;

  /// Validates and takes ownership of `steps`.
  /// Throws Error{NonBalanced} or Error{BelowAxis}.
  explicit DyckPath(std::vector<Step> steps);

  std::span<const Step> steps() const noexcept { return steps_; }
  Step operator[](std::size_t i) const noexcept { return steps_[i]; }
  std::size_t size() const noexcept { return steps_.size(); }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  bool empty() const noexcept { return steps_.empty(); }

  /// Altitude after each prefix; entry i is the height after i steps.
  std::vector<int> altitudes() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend std::strong_ordering operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// Path with up step (1,1) and grand down step (1,-s). s = 1 gives a Dyck path.
class SAryPath {
 public:
  SAryPath() = default;
  /// Throws Error{InvalidArgument} for s < 1, NonBalanced or BelowAxis.
  SAryPath(int s, std::vector<Step> steps);

  int s() const noexcept { return s_; }
  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  /// Number of grand down steps.
  std::size_t length() const noexcept { return steps_.size() / static_cast<std::size_t>(s_ + 1); }

  friend bool operator==(const SAryPath&, const SAryPath&) = default;
  friend std::strong_ordering operator<=>(const SAryPath&, const SAryPath&) = default;

 private:
  int s_ = 1;
  std::vector<Step> steps_;
};

/// The factor U^{s*height} D^{height} beginning at `start_index` (s = 1 for
/// Dyck paths).
struct Pyramid {
  std::size_t start_index = 0;
  int height = 0;

  friend bool operator==(const Pyramid&, const Pyramid&) = default;
};

/// Nonempty subset R of {0, ..., m-1} for some modulus m >= 2.
class ResidueSpec {
 public:
  /// Throws Error{InvalidArgument} for m < 2 or m > 64 or an out-of-range
  /// residue, Error{EmptyResidueSet} if `residues` is empty.
  ResidueSpec(int m, std::span<const int> residues);
  ResidueSpec(int m, std::initializer_list<int> residues)
      : ResidueSpec(m, std::span<const int>(residues.begin(), residues.size())) {}

  int m() const noexcept { return m_; }
  bool contains(int residue) const noexcept;
  /// True iff h mod m lies in the set.
  bool marks(int height) const noexcept { return contains(((height % m_) + m_) % m_); }
  std::vector<int> residues() const;
  /// {c' : c' = c - i (mod m), c in R}.
  ResidueSpec shifted(int i) const;

  friend bool operator==(const ResidueSpec&, const ResidueSpec&) = default;

 private:
  struct MaskTag {};
  ResidueSpec(MaskTag, int m, std::uint64_t mask) : m_(m), mask_(mask) {}
  int m_;
  std::uint64_t mask_;
};

// Text format ---------------------------------------------------------------

/// Accepts U/D in either case; '(' and ')' are aliases for U and D.
/// Throws Error{BadChar}, Error{NonBalanced}, Error{BelowAxis}.
DyckPath parse_path(std::string_view text);
std::string render_text(const DyckPath& p);
std::string render_text(std::span<const Step> steps);
std::vector<Step> parse_steps(std::string_view text);

/// Multi-line ASCII staircase ('/' for up, '\' for down), top row first.
std::string render_staircase(const DyckPath& p);

// Enumeration ---------------------------------------------------------------

/// Lexicographic (U < D) stream over all Dyck paths of semilength n.
class DyckEnumerator {
 public:
  explicit DyckEnumerator(int n);
  /// Returns the next path or nullopt once exhausted.
  std::optional<DyckPath> next();

 private:
  int n_;
  bool done_ = false;
  bool started_ = false;
  std::vector<Step> current_;
};

void for_each_dyck(int n, const std::function<void(const DyckPath&)>& visit);
std::vector<DyckPath> enumerate_dyck(int n);

/// Lexicographic (U < D) list of all s-ary paths with n grand down steps.
std::vector<SAryPath> enumerate_sary(int s, int n);
void for_each_sary(int s, int n, const std::function<void(const SAryPath&)>& visit);

// Statistics ----------------------------------------------------------------

std::vector<Pyramid> maximal_pyramids(const DyckPath& p);
int pyramid_weight(const DyckPath& p);
/// n minus the pyramid weight.
int exterior_pairs(const DyckPath& p);
/// Counts matched up/down pairs whose enclosed factor is not of the form U^j D^j.
int exterior_pairs_by_matching(const DyckPath& p);

int up_steps_at_residue(const DyckPath& p, const ResidueSpec& spec);
int up_steps_at_residue(std::span<const Step> steps, int start_altitude, const ResidueSpec& spec);

int height(const DyckPath& p);
std::vector<DyckPath> blocks(const DyckPath& p);

std::vector<Pyramid> sary_maximal_pyramids(const SAryPath& p);
int sary_pyramid_weight(const SAryPath& p);
int sary_exterior_down_steps(const SAryPath& p);

// Counting ------------------------------------------------------------------

std::uint64_t binomial(int n, int k);
std::uint64_t catalan(int n);
/// N_{n,k} = binom(n,k) binom(n,k+1) / n for 0 <= k <= n-1.
std::uint64_t narayana(int n, int k);
/// Number of s-ary paths with n grand down steps: binom((s+1)n, n) / (sn + 1).
std::uint64_t fuss_catalan(int s, int n);

// Distribution tables -------------------------------------------------------

enum class StatisticKind {
  ExteriorPairs,
  PyramidWeight,
  UpResidue,
  Height,
  SAryPyramidWeight,
  SAryExteriorDown,
};

std::string to_string(StatisticKind kind);
StatisticKind statistic_from_string(std::string_view name);

struct Statistic {
  StatisticKind kind = StatisticKind::ExteriorPairs;
  std::optional<ResidueSpec> residues;  // UpResidue only
  int s = 1;                            // s-ary statistics only

  static Statistic exterior() { return {StatisticKind::ExteriorPairs, std::nullopt, 1}; }
  static Statistic pyramid() { return {StatisticKind::PyramidWeight, std::nullopt, 1}; }
  static Statistic up_residue(ResidueSpec r) { return {StatisticKind::UpResidue, r, 1}; }
  static Statistic path_height() { return {StatisticKind::Height, std::nullopt, 1}; }
  static Statistic sary_pyramid(int s) { return {StatisticKind::SAryPyramidWeight, std::nullopt, s}; }
  static Statistic sary_exterior(int s) { return {StatisticKind::SAryExteriorDown, std::nullopt, s}; }

  bool is_sary() const noexcept {
    return kind == StatisticKind::SAryPyramidWeight || kind == StatisticKind::SAryExteriorDown;
  }

  friend bool operator==(const Statistic&, const Statistic&) = default;
};

struct EnumerationCaps {
  int dyck = 14;
  int sary = 8;
};

struct DistributionTable {
  int n = 0;
  Statistic statistic;
  std::map<int, std::uint64_t> counts;

  std::uint64_t total() const;

  /// {"n":..,"statistic":..,"params":{..},"counts":{"k":count}}
  std::string to_json() const;
  static DistributionTable from_json(std::string_view text);
  /// Header "k,count" followed by one row per k, ascending.
  std::string to_csv() const;
  /// "k:count" pairs separated by single spaces.
  std::string to_text() const;

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

/// Exact counts by exhaustive enumeration. Throws Error{CapExceeded}.
DistributionTable distribution(int n, const Statistic& stat, const EnumerationCaps& caps = {});

}  // namespace dyckstat

template <>
struct std::hash<dyckstat::DyckPath> {
  std::size_t operator()(const dyckstat::DyckPath& p) const noexcept;
};
