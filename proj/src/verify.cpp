#include "dyckstat/verify.hpp"

#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "dyckstat/dyck.hpp"
#include "dyckstat/omega.hpp"
#include "dyckstat/pi.hpp"
#include "dyckstat/series.hpp"
#include "dyckstat/tree.hpp"

namespace dyckstat {

void VerifyReport::fail(std::string what) {
  if (passed) counterexample = what;
  passed = false;
  lines.push_back("FAIL " + std::move(what));
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << check << ": " << (passed ? "PASS" : "FAIL") << '\n';
  for (const auto& l : lines) os << "  " << l << '\n';
  if (counterexample) os << "  first counterexample: " << *counterexample << '\n';
  return os.str();
}

namespace {

std::string set_text(const ResidueSpec& r) {
  std::string s = "m=" + std::to_string(r.m()) + " R={";
  bool first = true;
  for (int c : r.residues()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(c);
  }
  return s + "}";
}

}  // namespace

VerifyReport verify_theorem_main(int m_lo, int m_hi, int order) {
  VerifyReport rep{"thm-main", true, {}, std::nullopt};
  for (int m = m_lo; m <= m_hi; ++m) {
    const auto r = check_theorem_main(m, order);
    rep.lines.push_back("m=" + std::to_string(m) + " order " + std::to_string(order) + ": " +
                        (r.passed() ? "difference vanishes" : "identity fails"));
    for (const auto& f : r.failures) rep.fail("m=" + std::to_string(m) + ": " + f);
  }
  return rep;
}

VerifyReport verify_cf_vs_brute(int m_hi, int order, int random_sets, std::uint32_t seed) {
  VerifyReport rep{"cf-vs-brute", true, {}, std::nullopt};
  std::mt19937 rng(seed);
  int compared = 0;
  for (int m = 2; m <= m_hi; ++m) {
    std::vector<ResidueSpec> specs;
    for (int c = 0; c < m; ++c) specs.push_back(ResidueSpec(m, {c}));
    std::uniform_int_distribution<std::uint32_t> pick(1, (1U << m) - 1);
    for (int i = 0; i < random_sets; ++i) {
      std::uint32_t mask = pick(rng);
      while (std::popcount(mask) < 2) mask = pick(rng);
      std::vector<int> residues;
      for (int c = 0; c < m; ++c) {
        if ((mask >> c) & 1U) residues.push_back(c);
      }
      specs.push_back(ResidueSpec(m, residues));
    }
    for (const auto& spec : specs) {
      const auto cf = cf_series(spec, order);
      const auto brute = brute_series(spec, order);
      ++compared;
      if (cf != brute) {
        for (int n = 0; n <= order; ++n) {
          if (cf.row(n) != brute.row(n)) {
            rep.fail(set_text(spec) + " first differs at x^" + std::to_string(n));
            break;
          }
        }
      }
      // Each shifted set obeys the first-return step G^{(R-i)} = 1/(1 - x y^[1 in R-i] G^{(R-i-1)}).
      const auto shifted = spec.shifted(1);
      const auto one = BivariateSeries::constant(1, order);
      const auto mark = BivariateSeries::monomial(1, 1, spec.contains(1) ? 1 : 0, order);
      if (cf != divide(one, one - mark * cf_series(shifted, order))) {
        rep.fail(set_text(spec) + ": first-return step fails");
      }
      if (cf_evaluate(spec, cf) != cf) rep.fail(set_text(spec) + ": not a fixed point of its continued fraction");
    }
  }
  rep.lines.push_back(std::to_string(compared) + " residue sets compared to order " + std::to_string(order));
  return rep;
}

VerifyReport verify_pi_transport(int max_n) {
  VerifyReport rep{"pi-transport", true, {}, std::nullopt};
  const ResidueSpec red(3, {0});
  for (int n = 0; n <= max_n; ++n) {
    std::unordered_set<DyckPath> images;
    std::uint64_t count = 0;
    for_each_dyck(n, [&](const DyckPath& p) {
      ++count;
      const auto image = Pi(p);
      if (image.semilength() != p.semilength()) rep.fail(render_text(p) + ": length changed");
      const int ext = exterior_pairs(p);
      const int reds = up_steps_at_residue(image, red);
      if (ext != reds) {
        rep.fail(render_text(p) + " -> " + render_text(image) + ": exterior pairs " + std::to_string(ext) +
                 ", red up steps " + std::to_string(reds));
      }
      if (!images.insert(image).second) rep.fail(render_text(p) + ": image " + render_text(image) + " repeated");
    });
    rep.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(count) + " paths, " +
                        std::to_string(images.size()) + " distinct images");
  }
  return rep;
}

VerifyReport verify_roundtrips(int max_n, int max_planted) {
  VerifyReport rep{"roundtrips", true, {}, std::nullopt};
  for (int n = 0; n <= max_n; ++n) {
    for_each_dyck(n, [&](const DyckPath& p) {
      if (Pi_inverse(Pi(p)) != p) rep.fail("Pi^-1 Pi != id at " + render_text(p));
      const auto t = path_to_tree(p);
      if (Phi_inverse(Phi(t)) != t) rep.fail("Phi^-1 Phi != id at " + render_text(p));
    });
  }
  std::uint64_t planted = 0;
  for (int n = 1; n <= max_planted; ++n) {
    // Planted trees with n edges are the primitive paths U q D, q in C_{n-1}.
    for_each_dyck(n - 1, [&](const DyckPath& inner) {
      const auto t = PlantedTree::stalk_over(path_to_tree(inner));
      ++planted;
      const auto image = phi(t);
      if (phi_inverse(image) != t) rep.fail("phi^-1 phi != id at " + render_word(t.tree()));
      if (phi(phi_inverse(t)) != t) rep.fail("phi phi^-1 != id at " + render_word(t.tree()));
      if (image.edge_count() != t.edge_count()) rep.fail("phi changed the edge count at " + render_word(t.tree()));
    });
  }
  rep.lines.push_back("paths and ordered trees up to n=" + std::to_string(max_n) + ", " + std::to_string(planted) +
                      " planted trees up to " + std::to_string(max_planted) + " edges");
  return rep;
}

VerifyReport verify_omega_involution(int max_n, const std::vector<int>& ms) {
  VerifyReport rep{"omega-involution", true, {}, std::nullopt};
  for (int m : ms) {
    std::uint64_t checked = 0;
    for (int n = 0; n <= max_n; ++n) {
      for_each_dyck(n, [&](const DyckPath& p) {
        const auto image = omega(p, m);
        if (omega(image, m) != p) rep.fail("m=" + std::to_string(m) + ": Omega^2 != id at " + render_text(p));
        if (height(p) < m - 1) {
          if (image != p) rep.fail("m=" + std::to_string(m) + ": low path moved " + render_text(p));
          return;
        }
        ++checked;
        const auto form = decompose_standard(p, m);
        if (form.reassemble() != p) rep.fail("m=" + std::to_string(m) + ": reassembly fails at " + render_text(p));
        for (const auto& seg : form.segments) {
          FjkClass expected;
          switch (seg.kind()) {
            case SegmentKind::AboveBlock: expected = {0, 1}; break;
            case SegmentKind::UnderBlock: expected = {1, 0}; break;
            case SegmentKind::UpwardLink: expected = {1, 1}; break;
            case SegmentKind::Initial: expected = {1, 0}; break;
            case SegmentKind::DownwardLink:
            case SegmentKind::Terminal: expected = {0, 0}; break;
          }
          const auto got = segment_census(seg, m);
          if (got != expected) {
            rep.fail("m=" + std::to_string(m) + ": " + to_string(seg.kind()) + " " + render_text(seg.steps()) +
                     " in " + render_text(p) + " has census (" + std::to_string(got.j) + "," +
                     std::to_string(got.k) + ")");
          }
        }
        const auto before = classify_fjk(p, m);
        const auto after = classify_fjk(image, m);
        if (after != FjkClass{before.k + 1, before.j - 1}) {
          rep.fail("m=" + std::to_string(m) + ": class (" + std::to_string(before.j) + "," + std::to_string(before.k) +
                   ") of " + render_text(p) + " went to (" + std::to_string(after.j) + "," +
                   std::to_string(after.k) + ")");
        }
      });
    }
    rep.lines.push_back("m=" + std::to_string(m) + ": " + std::to_string(checked) + " paths of height >= m-1");
  }
  return rep;
}

VerifyReport verify_psi_classes(int max_n, const std::vector<int>& ms) {
  VerifyReport rep{"psi-classes", true, {}, std::nullopt};
  for (int m : ms) {
    const ResidueSpec top(m, {m - 1});
    const ResidueSpec bottom(m, {0});
    for (int n = 0; n <= max_n; ++n) {
      std::map<int, std::uint64_t> a_top;
      std::map<int, std::uint64_t> a_bottom;
      std::unordered_set<DyckPath> images;
      for_each_dyck(n, [&](const DyckPath& p) {
        ++a_bottom[up_steps_at_residue(p, bottom)];
        if (height(p) < m - 1) return;
        ++a_top[up_steps_at_residue(p, top)];
        const auto before = classify_fjk(p, m);
        const auto image = psi(p, m);
        const auto after = classify_fjk(image, m);
        const FjkClass expected = before == FjkClass{1, 0} ? before : FjkClass{before.k + 1, before.j - 1};
        if (after != expected) rep.fail("m=" + std::to_string(m) + ": psi class transport fails at " + render_text(p));
        if (before.j == 1 && (after.k != 0 || after.j < 1)) {
          rep.fail("m=" + std::to_string(m) + ": Psi_1 image outside B at " + render_text(p));
        }
        if (!images.insert(image).second) rep.fail("m=" + std::to_string(m) + ": psi not injective at " + render_text(p));
      });
      for (const auto& [j, count] : a_top) {
        if (j < 2) continue;
        const auto it = a_bottom.find(j - 1);
        const std::uint64_t other = it == a_bottom.end() ? 0 : it->second;
        if (count != other) {
          rep.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": |A^(m-1)_" + std::to_string(j) +
                   "| = " + std::to_string(count) + " but |A^(0)_" + std::to_string(j - 1) +
                   "| = " + std::to_string(other));
        }
      }
      // Almost equidistribution: g^(0)_{n,0} = g^(m-1)_{n,0} + g^(m-1)_{n,1} over all paths.
      const auto all_top = distribution(n, Statistic::up_residue(top)).counts;
      const auto get = [](const std::map<int, std::uint64_t>& mp, int k) {
        const auto it = mp.find(k);
        return it == mp.end() ? std::uint64_t{0} : it->second;
      };
      if (get(a_bottom, 0) != get(all_top, 0) + get(all_top, 1)) {
        rep.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": g^(0)_{n,0} != g^(m-1)_{n,0} + g^(m-1)_{n,1}");
      }
    }
    rep.lines.push_back("m=" + std::to_string(m) + ": checked n <= " + std::to_string(max_n));
  }
  return rep;
}

VerifyReport verify_narayana(int max_n) {
  VerifyReport rep{"narayana", true, {}, std::nullopt};
  for (int n = 1; n <= max_n; ++n) {
    const auto table = distribution(n, Statistic::up_residue(ResidueSpec(2, {0})));
    for (int k = 0; k <= n - 1; ++k) {
      const auto it = table.counts.find(k);
      const std::uint64_t got = it == table.counts.end() ? 0 : it->second;
      if (got != narayana(n, k)) {
        rep.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(got) +
                 " paths, N = " + std::to_string(narayana(n, k)));
      }
      if (narayana(n, k) != narayana(n, n - 1 - k)) rep.fail("Narayana symmetry fails at " + std::to_string(n));
    }
    if (table.total() != catalan(n)) rep.fail("row total differs from Catalan at n=" + std::to_string(n));
  }
  rep.lines.push_back("rows n = 1.." + std::to_string(max_n));
  return rep;
}

VerifyReport verify_sary(int s_hi, int order, const std::vector<int>& brute_n) {
  VerifyReport rep{"sary-duality", true, {}, std::nullopt};
  for (int s = 1; s <= s_hi; ++s) {
    const auto p = sary_series(s, SAryGf::P, order);
    const auto e = sary_series(s, SAryGf::E, order);
    if (sary_equation_rhs(s, SAryGf::P, p) != p) rep.fail("s=" + std::to_string(s) + ": P residual nonzero");
    if (sary_equation_rhs(s, SAryGf::E, e) != e) rep.fail("s=" + std::to_string(s) + ": E residual nonzero");
    for (int n = 0; n <= order; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (e.coeff(n, k) != p.coeff(n, n - k)) {
          rep.fail("s=" + std::to_string(s) + ": e_{" + std::to_string(n) + "," + std::to_string(k) + "} != p_{" +
                   std::to_string(n) + "," + std::to_string(n - k) + "}");
        }
      }
    }
    const int limit = static_cast<std::size_t>(s - 1) < brute_n.size() ? brute_n[static_cast<std::size_t>(s - 1)] : 0;
    const int bn = std::min(limit, order);
    EnumerationCaps caps;
    caps.sary = std::max(caps.sary, bn);
    if (sary_brute(s, SAryGf::P, bn, caps) != p.truncated(bn)) rep.fail("s=" + std::to_string(s) + ": P differs from census");
    if (sary_brute(s, SAryGf::E, bn, caps) != e.truncated(bn)) rep.fail("s=" + std::to_string(s) + ": E differs from census");
    rep.lines.push_back("s=" + std::to_string(s) + ": equations to order " + std::to_string(order) +
                        ", census to n=" + std::to_string(bn));
  }
  return rep;
}

VerifyReport verify_quadratic_g03(int order) {
  VerifyReport rep{"quadratic-g03", true, {}, std::nullopt};
  if (!check_quadratic_g03(order)) rep.fail("residual nonzero to order " + std::to_string(order));
  rep.lines.push_back("order " + std::to_string(order));
  return rep;
}

VerifyReport verify_conjecture(int part, const std::vector<int>& ms, int order) {
  VerifyReport rep{"conjecture-" + std::to_string(part), true, {}, std::nullopt};
  for (int m : ms) {
    const auto r = check_conjecture(part, m, order);
    std::istringstream text(r.to_text());
    for (std::string line; std::getline(text, line);) rep.lines.push_back(line);
    if (!r.agrees()) rep.fail("m=" + std::to_string(m) + ": " + std::to_string(r.mismatches.size()) + " mismatches");
  }
  return rep;
}

}  // namespace dyckstat
