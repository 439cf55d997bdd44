#include "dyckstat/omega.hpp"

#include <algorithm>

#include <json.hpp>

#include "dyckstat/error.hpp"

namespace dyckstat {

std::string to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::Initial: return "initial";
    case SegmentKind::AboveBlock: return "above-block";
    case SegmentKind::UnderBlock: return "under-block";
    case SegmentKind::UpwardLink: return "upward-link";
    case SegmentKind::DownwardLink: return "downward-link";
    case SegmentKind::Terminal: return "terminal";
  }
  return "?";
}

Segment::Segment(SegmentKind kind, int line, int start_altitude, std::shared_ptr<const std::vector<Step>> storage,
                 std::size_t begin, std::size_t end)
    : kind_(kind), line_(line), start_altitude_(start_altitude), storage_(std::move(storage)), begin_(begin), end_(end) {
  if (!storage_ || begin_ > end_ || end_ > storage_->size()) {
    throw Error(ErrorKind::Internal, "segment range outside its storage");
  }
}

std::span<const Step> Segment::steps() const noexcept {
  return std::span<const Step>(*storage_).subspan(begin_, end_ - begin_);
}

int Segment::end_altitude() const noexcept {
  int alt = start_altitude_;
  for (Step st : steps()) alt += st == Step::Up ? 1 : -1;
  return alt;
}

bool operator==(const Segment& a, const Segment& b) {
  if (a.kind_ != b.kind_ || a.line_ != b.line_ || a.start_altitude_ != b.start_altitude_) return false;
  const auto sa = a.steps();
  const auto sb = b.steps();
  return std::equal(sa.begin(), sa.end(), sb.begin(), sb.end());
}

DyckPath StandardForm::reassemble() const {
  std::vector<Step> steps;
  for (const auto& seg : segments) steps.insert(steps.end(), seg.steps().begin(), seg.steps().end());
  return DyckPath(std::move(steps));
}

std::string StandardForm::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m;
  j["segments"] = nlohmann::ordered_json::array();
  for (const auto& seg : segments) {
    nlohmann::ordered_json s;
    s["kind"] = to_string(seg.kind());
    s["line"] = seg.line();
    s["steps"] = render_text(seg.steps());
    j["segments"].push_back(std::move(s));
  }
  return j.dump();
}

namespace {

void check_m(int m) {
  if (m < 2) throw Error(ErrorKind::InvalidM, "m must be at least 2");
}

}  // namespace

StandardForm decompose_standard(const DyckPath& p, int m) {
  check_m(m);
  if (height(p) < m - 1) {
    throw Error(ErrorKind::HeightTooLow, "path height " + std::to_string(height(p)) + " is below m-1 = " +
                                             std::to_string(m - 1));
  }
  auto storage = std::make_shared<const std::vector<Step>>(p.steps().begin(), p.steps().end());
  const auto alt = p.altitudes();
  const auto line_alt = [m](int i) { return m * i - 1; };

  // First arrival at L_1 and last visit to L_1.
  const auto first = static_cast<std::size_t>(std::find(alt.begin(), alt.end(), m - 1) - alt.begin());
  std::size_t last = alt.size() - 1;
  while (alt[last] != m - 1) --last;

  StandardForm form{m, {}};
  form.segments.emplace_back(SegmentKind::Initial, 1, 0, storage, 0, first);

  std::size_t cur = first;
  int i = 1;
  while (cur < last) {
    std::size_t j = cur + 1;
    if ((*storage)[cur] == Step::Up) {
      while (alt[j] != line_alt(i) && alt[j] != line_alt(i + 1)) ++j;
      if (alt[j] == line_alt(i)) {
        form.segments.emplace_back(SegmentKind::AboveBlock, i, alt[cur], storage, cur, j);
      } else {
        form.segments.emplace_back(SegmentKind::UpwardLink, i, alt[cur], storage, cur, j);
        ++i;
      }
    } else {
      while (alt[j] != line_alt(i) && alt[j] != line_alt(i - 1)) ++j;
      if (alt[j] == line_alt(i)) {
        form.segments.emplace_back(SegmentKind::UnderBlock, i, alt[cur], storage, cur, j);
      } else {
        form.segments.emplace_back(SegmentKind::DownwardLink, i, alt[cur], storage, cur, j);
        --i;
      }
    }
    cur = j;
  }
  if (i != 1) throw Error(ErrorKind::Internal, "standard form did not close on L_1");
  form.segments.emplace_back(SegmentKind::Terminal, 1, m - 1, storage, last, storage->size());
  return form;
}

Segment gamma(const Segment& seg, int m) {
  check_m(m);
  SegmentKind target;
  if (seg.kind() == SegmentKind::AboveBlock) {
    target = SegmentKind::UnderBlock;
  } else if (seg.kind() == SegmentKind::UnderBlock) {
    target = SegmentKind::AboveBlock;
  } else {
    throw Error(ErrorKind::NotReflectable, "only above- and under-blocks can be reflected, got " + to_string(seg.kind()));
  }
  auto flipped = std::make_shared<std::vector<Step>>();
  flipped->reserve(seg.size());
  for (Step st : seg.steps()) flipped->push_back(st == Step::Up ? Step::Down : Step::Up);
  const std::size_t len = flipped->size();
  return Segment(target, seg.line(), seg.start_altitude(), std::move(flipped), 0, len);
}

DyckPath omega(const DyckPath& p, int m) {
  check_m(m);
  if (height(p) < m - 1) return p;
  const auto form = decompose_standard(p, m);
  std::vector<Step> out;
  out.reserve(p.size());
  for (const auto& seg : form.segments) {
    const bool block = seg.kind() == SegmentKind::AboveBlock || seg.kind() == SegmentKind::UnderBlock;
    const auto piece = block ? gamma(seg, m) : seg;
    out.insert(out.end(), piece.steps().begin(), piece.steps().end());
  }
  return DyckPath(std::move(out));
}

FjkClass classify_fjk(const DyckPath& p, int m) {
  check_m(m);
  return {up_steps_at_residue(p, ResidueSpec(m, {m - 1})), up_steps_at_residue(p, ResidueSpec(m, {0}))};
}

FjkClass segment_census(const Segment& seg, int m) {
  check_m(m);
  return {up_steps_at_residue(seg.steps(), seg.start_altitude(), ResidueSpec(m, {m - 1})),
          up_steps_at_residue(seg.steps(), seg.start_altitude(), ResidueSpec(m, {0}))};
}

DyckPath psi(const DyckPath& p, int m) {
  check_m(m);
  if (height(p) < m - 1) {
    throw Error(ErrorKind::HeightTooLow, "psi is defined only for paths of height at least m-1");
  }
  if (classify_fjk(p, m) == FjkClass{1, 0}) return p;
  return omega(p, m);
}

}  // namespace dyckstat
