#ifndef LOCIND_COHIND_HPP
#define LOCIND_COHIND_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locind/exactla.hpp"
#include "locind/gkmod.hpp"
#include "locind/liealg.hpp"
#include "locind/pbw.hpp"

namespace locind {

struct ComplexOptions {
  /// Extra truncation depth beyond the dependency cone; must be >= 1.
  int margin = 4;
  /// Largest truncation depth allowed before WindowTooSmall is thrown.
  unsigned max_depth = 96;
  /// Negative control: drops the alternating sign of the D xi_i term.
  bool corrupt_sign = false;
};

/// Basis element of a term: c^beta m^gamma (x) xi_I (x) w for torus K, or
/// v_k^* (x) xi_I (x) w (gamma = {k}, beta empty) for K = SL2.
struct ChainKey {
  std::vector<unsigned> beta;
  std::vector<unsigned> gamma;
  std::vector<std::size_t> wedge;

  auto operator<=>(const ChainKey&) const = default;
  bool operator==(const ChainKey&) const = default;
};

/// The complex at one K-weight (torus K) or one K-type (SL2 K).
struct WeightBlock {
  /// basis[d] = basis of the degree-d term.
  std::vector<std::vector<ChainKey>> basis;
  /// boundary[d]: degree d -> degree d-1 (boundary[0] is the zero map to 0).
  std::vector<SparseMatrix> boundary;
};

/// Standard resolution complex, K-finite part, truncated to a window of
/// K-weights (or K-types) and a finite filtration depth.
struct StdComplex {
  std::string family;
  std::size_t top_degree = 0;
  bool ktype_graded = false;
  Window window;
  int margin = 0;
  /// Truncation depths used (c-multidegree bound, filtration bound).
  unsigned depth_c = 0, depth_m = 0;
  /// Labels of the adapted basis pieces, for reports.
  std::vector<std::string> c_labels, m_labels;
  /// Set when the disconnected M = {+-1} was handled as a parity constraint.
  bool parity_constrained = false;
  std::optional<int> parity;
  std::map<Weight, WeightBlock> blocks;

  Character term_character(std::size_t d) const;
  /// Character of H_j, computed weightwise with exact ranks.
  Character homology(std::size_t j) const;
  /// Some weight block where boundary(d-1) * boundary(d) != 0.
  std::optional<std::pair<Weight, std::size_t>> d_squared_failure() const;
  std::string describe_key(const ChainKey& k) const;
};

/// W = V (x) top(g/h) is formed internally; V must be one-dimensional.
StdComplex build_standard_complex(const PairData& pair, const GradedModule& V, const Window& window,
                                  const ComplexOptions& options = {});

/// Character of (P)_j(V (x) top(g/h)) on the window.
Character derived_p(const PairData& pair, const GradedModule& V, std::size_t j, const Window& window,
                    const ComplexOptions& options = {});

/// Character of (I)^j(V) via the duality with P applied to the dual module.
Character derived_i(const PairData& pair, const GradedModule& V, std::size_t j, const Window& window,
                    const ComplexOptions& options = {});

/// Alternating sum of the term characters.
Character euler_characteristic(const StdComplex& c);
/// Alternating sum of the homology characters.
Character homology_euler_characteristic(const StdComplex& c);

/// True when every homology character is unchanged with margin + 1.
bool homology_stable(const PairData& pair, const GradedModule& V, const Window& window,
                     const ComplexOptions& options = {});

}  // namespace locind

#endif  // LOCIND_COHIND_HPP
