#ifndef LOCIND_HARNESS_HPP
#define LOCIND_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "locind/gkmod.hpp"
#include "locind/liealg.hpp"
#include "locind/locp1.hpp"

namespace locind {

enum class Family { A, B, C, D };

/// Accepts A-D or closed-orbit, open-orbit, borel-weil-bott, product.
Family parse_family(const std::string& name);
std::string family_name(Family f);

struct VerificationCase {
  std::string id;
  Family family = Family::A;
  /// lambda0, or one value per factor for D.
  std::vector<int> lambda;
  /// Parity of the M = {+-1} type (family B, or a B factor of D).
  std::optional<int> parity;
  /// Per-coordinate window (K-types for family C).
  int lo = -30, hi = 30;
  int margin = 4;
  /// Second factor of a D product: A or B.
  Family second = Family::A;
  /// Set for the wall fixture (both geometric cohomologies vanish).
  bool fixture = false;
  /// Also recompute with margin + 1 and in the other chart.
  bool check_stability = false;

  Window window() const;
};

/// Characters of one side per (co)homological degree.
struct DegreeCharacter {
  std::size_t degree = 0;
  Character character;
};

struct Report {
  VerificationCase input;
  /// Algebraic side: (P)_j, all j up to the top degree of the complex.
  std::vector<DegreeCharacter> side_a;
  /// Geometric side: H^s, s = 0, 1.
  std::vector<DegreeCharacter> side_b;
  /// Compared degrees (s, j = u - s); degrees missing from this list must vanish.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool match = false;
  /// First weight where a comparison fails, with the side degrees involved.
  std::optional<Weight> counterexample;
  std::string mismatch_detail;
  Ledger ledger;
  std::vector<std::string> notes;
};

/// Runs both sides and compares characters exactly. Propagates WindowTooSmall.
Report run_case(const VerificationCase& c);

/// Algebraic side only: (P)_j for every j.
std::vector<DegreeCharacter> algebraic_side(const VerificationCase& c);
/// Geometric side only: Cech H^0 and H^1 of the localization.
std::vector<DegreeCharacter> geometric_side(const VerificationCase& c, Chart chart = Chart::Z);

/// Deterministic JSON report.
std::string report_json(const Report& r, int indent = 2);
/// Character table: side,degree,weight,multiplicity,parity.
std::string report_csv(const Report& r);

/// Default lambda grid of a family (C includes the wall fixture n = -1).
std::vector<VerificationCase> default_grid(Family f);

/// Human-readable description of the pair behind a family.
std::string describe_family(Family f);
PairData family_pair(Family f, Family second = Family::A);

struct SelfTestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};
/// Invariant suite with negative controls.
std::vector<SelfTestResult> selftest();

}  // namespace locind

#endif  // LOCIND_HARNESS_HPP
