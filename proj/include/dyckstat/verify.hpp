#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dyckstat {

/// Outcome of one exhaustive or series-level verification.
struct VerifyReport {
  std::string check;
  bool passed = true;
  std::vector<std::string> lines;
  /// First failing input with the disagreeing values.
  std::optional<std::string> counterexample;

  void fail(std::string what);
  std::string to_text() const;
};

/// Series identity for G^{(m-1;m)} - y G^{(0;m)} for each m in [m_lo, m_hi].
VerifyReport verify_theorem_main(int m_lo, int m_hi, int order);
/// Continued fraction against enumeration: all singletons plus `random_sets`
/// random residue sets (at least two residues where possible) per m.
VerifyReport verify_cf_vs_brute(int m_hi, int order, int random_sets = 5, std::uint32_t seed = 20100301);
/// Exterior pairs of p equal red up steps of Pi(p); Pi injective on C_n.
VerifyReport verify_pi_transport(int max_n);
/// Pi^-1 Pi, Phi^-1 Phi on C_n / T_n up to max_n, phi^-1 phi on planted trees up to max_planted.
VerifyReport verify_roundtrips(int max_n, int max_planted);
/// Omega^2 = id, class transport and per-segment censuses for each m.
VerifyReport verify_omega_involution(int max_n, const std::vector<int>& ms);
/// Psi class transport, injectivity and |A^{(m-1)}_{n,j}| = |A^{(0)}_{n,j-1}|.
VerifyReport verify_psi_classes(int max_n, const std::vector<int>& ms);
/// Even-height up-step distribution equals the Narayana triangle.
VerifyReport verify_narayana(int max_n);
/// Functional equations, enumeration agreement and e_{n,k} = p_{n,n-k}.
/// `brute_n[s-1]` bounds the enumeration for each s in [1, s_hi].
VerifyReport verify_sary(int s_hi, int order, const std::vector<int>& brute_n);
VerifyReport verify_quadratic_g03(int order);
/// Passes iff every report shows full agreement; mismatches are listed
/// coefficient by coefficient.
VerifyReport verify_conjecture(int part, const std::vector<int>& ms, int order);

}  // namespace dyckstat
