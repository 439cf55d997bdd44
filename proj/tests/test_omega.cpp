#include <gtest/gtest.h>

#include "dyckstat/error.hpp"
#include "dyckstat/omega.hpp"

namespace dyckstat {
namespace {

// m = 3 path with nine segments in standard form.
const char* kNineSegments = "UUUDDUUUUUDDUDDDUDDD";

std::vector<SegmentKind> kinds(const StandardForm& f) {
  std::vector<SegmentKind> out;
  for (const auto& s : f.segments) out.push_back(s.kind());
  return out;
}

TEST(StandardForm, SmallestCase) {
  const auto f = decompose_standard(parse_path("UUDD"), 2);
  ASSERT_EQ(f.segments.size(), 3u);
  EXPECT_EQ(f.segments[0].kind(), SegmentKind::Initial);
  EXPECT_EQ(render_text(f.segments[0].steps()), "U");
  EXPECT_EQ(f.segments[1].kind(), SegmentKind::AboveBlock);
  EXPECT_EQ(f.segments[1].line(), 1);
  EXPECT_EQ(render_text(f.segments[1].steps()), "UD");
  EXPECT_EQ(f.segments[2].kind(), SegmentKind::Terminal);
  EXPECT_EQ(render_text(f.segments[2].steps()), "D");
  EXPECT_EQ(f.to_json(),
            R"({"m":2,"segments":[{"kind":"initial","line":1,"steps":"U"},)"
            R"({"kind":"above-block","line":1,"steps":"UD"},{"kind":"terminal","line":1,"steps":"D"}]})");
}

TEST(StandardForm, NineSegments) {
  const auto p = parse_path(kNineSegments);
  const auto f = decompose_standard(p, 3);
  using K = SegmentKind;
  EXPECT_EQ(kinds(f), (std::vector<K>{K::Initial, K::AboveBlock, K::UnderBlock, K::UpwardLink, K::AboveBlock,
                                      K::UnderBlock, K::DownwardLink, K::AboveBlock, K::Terminal}));
  EXPECT_EQ(f.reassemble(), p);
  EXPECT_EQ(classify_fjk(p, 3), (FjkClass{4, 4}));
  EXPECT_EQ(classify_fjk(omega(p, 3), 3), (FjkClass{5, 3}));
}

TEST(StandardForm, LowPrimitivePaths) {
  for_each_dyck(6, [](const DyckPath& p) {
    if (height(p) != 2 || blocks(p).size() != 1) return;
    const auto f = decompose_standard(p, 3);
    EXPECT_EQ(f.segments.front().kind(), SegmentKind::Initial);
    EXPECT_EQ(f.segments.back().kind(), SegmentKind::Terminal);
    for (std::size_t i = 1; i + 1 < f.segments.size(); ++i) {
      const auto k = f.segments[i].kind();
      EXPECT_TRUE(k == SegmentKind::AboveBlock || k == SegmentKind::UnderBlock);
      EXPECT_EQ(f.segments[i].line(), 1);
    }
  });
}

TEST(StandardForm, Errors) {
  EXPECT_THROW(decompose_standard(parse_path("UD"), 3), Error);
  try {
    decompose_standard(parse_path("UUDD"), 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidM);
  }
}

TEST(Gamma, Reflection) {
  const auto f = decompose_standard(parse_path("UUDD"), 2);
  const auto g = gamma(f.segments[1], 2);
  EXPECT_EQ(g.kind(), SegmentKind::UnderBlock);
  EXPECT_EQ(render_text(g.steps()), "DU");
  EXPECT_EQ(gamma(g, 2), f.segments[1]);
  try {
    gamma(f.segments[0], 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotReflectable);
  }
}

TEST(Gamma, InvolutionOnAllBlocks) {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 0; n <= 8; ++n) {
      for_each_dyck(n, [m](const DyckPath& p) {
        if (height(p) < m - 1) return;
        for (const auto& s : decompose_standard(p, m).segments) {
          if (s.kind() != SegmentKind::AboveBlock && s.kind() != SegmentKind::UnderBlock) continue;
          const auto g = gamma(s, m);
          ASSERT_EQ(g.size(), s.size());
          ASSERT_EQ(gamma(g, m), s);
        }
      });
    }
  }
}

TEST(Omega, Examples) {
  EXPECT_EQ(render_text(omega(parse_path("UUDD"), 2)), "UDUD");
  EXPECT_EQ(omega(parse_path("UDUD"), 4), parse_path("UDUD"));
  EXPECT_EQ(classify_fjk(parse_path("UUDD"), 2), (FjkClass{1, 1}));
  EXPECT_EQ(classify_fjk(parse_path("UDUD"), 4), (FjkClass{0, 0}));
}

TEST(Omega, InvolutionAndClassTransport) {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 0; n <= 10; ++n) {
      for_each_dyck(n, [m](const DyckPath& p) {
        const auto q = omega(p, m);
        ASSERT_EQ(omega(q, m), p);
        if (height(p) < m - 1) return;
        const auto c = classify_fjk(p, m);
        ASSERT_EQ(classify_fjk(q, m), (FjkClass{c.k + 1, c.j - 1})) << render_text(p);
      });
    }
  }
}

TEST(Psi, FixesClassOneZero) {
  for_each_dyck(7, [](const DyckPath& p) {
    if (height(p) < 2) return;
    if (classify_fjk(p, 3) == FjkClass{1, 0}) EXPECT_EQ(psi(p, 3), p);
  });
  EXPECT_THROW(psi(parse_path("UD"), 3), Error);
}

TEST(Psi, CardinalityShift) {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 10; ++n) {
      std::map<int, std::uint64_t> top;
      std::map<int, std::uint64_t> bottom;
      for_each_dyck(n, [&](const DyckPath& p) {
        const auto c = classify_fjk(p, m);
        ++top[c.j];
        ++bottom[c.k];
      });
      for (const auto& [j, count] : top) {
        if (j >= 2) EXPECT_EQ(count, bottom[j - 1]) << "m=" << m << " n=" << n << " j=" << j;
      }
    }
  }
}

}  // namespace
}  // namespace dyckstat
