#ifndef LOCIND_GKMOD_HPP
#define LOCIND_GKMOD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locind/exactla.hpp"
#include "locind/liealg.hpp"
#include "locind/weight.hpp"

namespace locind {

/// Box of weights, lower <= upper per coordinate. A rank-0 window contains
/// every rank-0 weight.
struct Window {
  std::vector<int> lower, upper;

  Window() = default;
  Window(std::vector<int> lo, std::vector<int> hi);
  static Window interval(int lo, int hi) { return Window({lo}, {hi}); }
  /// Same bounds repeated for each of `rank` coordinates.
  static Window box(std::size_t rank, int lo, int hi);

  std::size_t rank() const { return lower.size(); }
  bool contains(const Weight& w) const;
  Window expanded(int margin) const;
  Window negated() const;
  /// Cartesian product of two windows.
  Window product(const Window& other) const;
  /// All weights of the window with coordinates congruent to `residue` mod
  /// `step` (step 1 = every lattice point).
  std::vector<Weight> points(int step = 1, int residue = 0) const;

  bool operator==(const Window&) const = default;
};

std::string to_string(const Window& w);

class WindowTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight (or SL2 K-type) multiplicity function, with an optional parity
/// label per weight for the disconnected M = {+-1}. Multiplicities may be
/// negative for alternating sums.
struct Character {
  bool ktypes = false;
  std::map<Weight, long> multiplicities;
  std::map<Weight, int> parities;

  void add(const Weight& w, long m, std::optional<int> parity = std::nullopt);
  long multiplicity(const Weight& w) const;
  long total() const;
  bool empty() const { return multiplicities.empty(); }

  Character restricted(const Window& window) const;
  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;

  bool operator==(const Character&) const = default;
};

/// Weight negation; on SL2 K-types (self-dual) it is the identity.
Character negate_weights(const Character& c);

/// First weight (in weight order) where the two characters differ.
std::optional<Weight> first_difference(const Character& a, const Character& b);

/// Decomposes an sl2 weight character (weights = h-eigenvalues) into SL2
/// K-types by peeling from the largest weight down. Throws
/// std::invalid_argument when the character is not a sum of K-types.
Character peel_sl2(const Character& weights);
/// Weight character of a K-type character.
Character expand_sl2(const Character& ktypes);

/// JSON array of {"weight": [..], "multiplicity": n, "parity": p?}.
std::string character_json(const Character& c);

/// One weight space of a graded module.
struct WeightSpace {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::optional<int> parity;
};

/// Weight-graded module over a Lie algebra `acting`, truncated to a window.
/// actions[i] maps the mu-space to the (mu + adjoint_weights[i])-space; the
/// matrix has one column per source basis vector. Blocks whose target lies
/// outside the window are dropped. For K-type graded modules the weights are
/// SL2 highest weights and no Lie action is recorded.
struct GradedModule {
  LieAlgPtr acting;
  std::vector<Weight> adjoint_weights;
  Window window;
  bool ktype_graded = false;
  std::map<Weight, WeightSpace> spaces;
  std::vector<std::map<Weight, SparseMatrix>> actions;

  std::size_t dim_at(const Weight& w) const;
  /// Action block of basis element i at source weight mu (zero if absent).
  SparseMatrix block(std::size_t i, const Weight& mu) const;
  /// Applies basis element i to a vector of the mu-space.
  Vector act(std::size_t i, const Weight& mu, const Vector& v) const;
  std::size_t total_dim() const;
};

/// Sole weight and character value of a one-dimensional module.
struct OneDimData {
  Weight weight;
  Vector values;
  std::optional<int> parity;
};
OneDimData onedim_data(const GradedModule& m);

/// Which quotient lambda_top uses.
enum class TopOf { GModH, KModL };

/// One-dimensional (h, L)-module: h acts by lambda, L by `ltype` (torus
/// weight of L) and, for L = {+-1}, by the given parity.
GradedModule one_dim_module(const PairData& pair, const Vector& lambda, const Weight& ltype,
                            std::optional<int> parity = std::nullopt);

/// Top exterior power of g/h (as an (h, L)-module) or of k/l (as an l-module).
GradedModule lambda_top(const PairData& pair, TopOf which);

GradedModule dual_module(const GradedModule& m);
GradedModule tensor_onedim(const GradedModule& m, const GradedModule& t);
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
/// External tensor product of an a-module and a b-module over a (+) b.
GradedModule external_product(const GradedModule& a, const GradedModule& b);

Character character_of(const GradedModule& m);

/// Failure of the blockwise relations: grading shift, or
/// act(x)act(y) - act(y)act(x) = act([x, y]) at an interior weight.
struct BracketFailure {
  std::size_t i = 0, j = 0;
  Weight weight;
  std::string describe() const;
};
std::optional<BracketFailure> check_bracket_invariant(const GradedModule& m);

}  // namespace locind

#endif  // LOCIND_GKMOD_HPP
