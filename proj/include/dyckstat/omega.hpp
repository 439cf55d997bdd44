#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dyckstat/dyck.hpp"

namespace dyckstat {

// Cut lines are L_i : y = m*i - 1 for i >= 1.

enum class SegmentKind { Initial, AboveBlock, UnderBlock, UpwardLink, DownwardLink, Terminal };

std::string to_string(SegmentKind kind);

/// A factor of a path in standard form. Shares storage with the path it was
/// cut from; equality compares kind, line and step content.
class Segment {
 public:
  Segment(SegmentKind kind, int line, int start_altitude, std::shared_ptr<const std::vector<Step>> storage,
          std::size_t begin, std::size_t end);

  SegmentKind kind() const noexcept { return kind_; }
  /// Index i of the cut line the segment starts on (1 for initial and terminal).
  int line() const noexcept { return line_; }
  int start_altitude() const noexcept { return start_altitude_; }
  int end_altitude() const noexcept;
  std::span<const Step> steps() const noexcept;
  std::size_t size() const noexcept { return end_ - begin_; }

  friend bool operator==(const Segment& a, const Segment& b);

 private:
  SegmentKind kind_;
  int line_;
  int start_altitude_;
  std::shared_ptr<const std::vector<Step>> storage_;
  std::size_t begin_;
  std::size_t end_;
};

/// Up-step census of a segment: j counts heights = m-1 (mod m), k heights = 0 (mod m).
struct FjkClass {
  int j = 0;
  int k = 0;
  friend bool operator==(const FjkClass&, const FjkClass&) = default;
};

struct StandardForm {
  int m = 2;
  std::vector<Segment> segments;

  /// Concatenation of all segment steps.
  DyckPath reassemble() const;
  /// {"m":..,"segments":[{"kind":..,"line":..,"steps":"UD.."},..]}
  std::string to_json() const;
};

/// Greedy first-arrival factorization along the cut lines.
/// Throws Error{HeightTooLow} if height(p) < m - 1, Error{InvalidM} if m < 2.
StandardForm decompose_standard(const DyckPath& p, int m);

/// Reflection of an above- or under-block about its cut line.
/// Throws Error{NotReflectable} for links and end segments.
Segment gamma(const Segment& seg, int m);

/// Reflects every block of the standard form; paths lower than m-1 are fixed.
DyckPath omega(const DyckPath& p, int m);

FjkClass classify_fjk(const DyckPath& p, int m);
FjkClass segment_census(const Segment& seg, int m);

/// Identity on class (1,0), omega otherwise. Throws Error{HeightTooLow}.
DyckPath psi(const DyckPath& p, int m);

}  // namespace dyckstat
