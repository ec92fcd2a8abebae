#ifndef LOCIND_LIEALG_HPP
#define LOCIND_LIEALG_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "locind/exactla.hpp"
#include "locind/weight.hpp"

namespace locind {

class InvalidLieAlgebra : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPair : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonInvariantCharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// First basis triple (or pair) violating antisymmetry or the Jacobi identity.
struct StructureFailure {
  std::string kind;  // "antisymmetry" | "jacobi"
  std::size_t i = 0, j = 0, k = 0;
  std::string describe() const;
};

/// Finite-dimensional Lie algebra over Q given by structure constants:
/// [x_i, x_j] = sum_k c[i][j][k] x_k.
class LieAlg {
 public:
  using Constants = std::vector<std::vector<Vector>>;

  /// Validates antisymmetry and the Jacobi identity over all basis triples;
  /// throws InvalidLieAlgebra on failure.
  LieAlg(std::vector<std::string> labels, Constants constants);

  /// Skips validation. Only for building negative-control fixtures.
  static LieAlg unchecked(std::vector<std::string> labels, Constants constants);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index_of(const std::string& label) const;

  const Vector& bracket_basis(std::size_t i, std::size_t j) const { return c_[i][j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const;

  /// Exhaustive check over basis pairs and triples.
  std::optional<StructureFailure> find_structure_failure() const;

  /// The same algebra in another basis (rows = new basis vectors in old coordinates).
  LieAlg change_basis(const std::vector<Vector>& new_basis,
                      std::vector<std::string> new_labels) const;

 private:
  struct Unchecked {};
  LieAlg(Unchecked, std::vector<std::string> labels, Constants constants);

  std::vector<std::string> labels_;
  Constants c_;
};

using LieAlgPtr = std::shared_ptr<const LieAlg>;

/// Human-readable linear combination, e.g. "h-2e".
std::string format_lie_element(const LieAlg& g, const Vector& x);

/// Basis (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlg sl2();

/// Abelian Lie algebra of dimension r (basis t, or t1..tr).
LieAlg torus_algebra(std::size_t rank);

/// Block-diagonal sum; labels get a factor suffix when the two label sets
/// collide (e1, h1, f1, e2, ...).
LieAlg direct_sum(const LieAlg& a, const LieAlg& b);

/// Subalgebra spanned by coordinate vectors of an ambient algebra.
class Subalg {
 public:
  /// Throws InvalidLieAlgebra if the vectors are dependent or not bracket-closed.
  Subalg(LieAlgPtr ambient, std::vector<Vector> basis);

  const LieAlgPtr& ambient() const { return ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Coordinates of an ambient vector in this basis, or nullopt if outside.
  std::optional<Vector> coordinates(const Vector& x) const;
  bool contains(const Vector& x) const { return coordinates(x).has_value(); }

  /// Structure constants in the subalgebra's own basis.
  LieAlg as_lie_algebra(std::vector<std::string> labels) const;

 private:
  LieAlgPtr ambient_;
  std::vector<Vector> basis_;
  SparseMatrix basis_columns_;
};

/// Point of P^1 in one of the two standard charts, z or w = 1/z.
enum class Chart { Z, W };
struct P1Point {
  Chart chart = Chart::Z;
  ExactScalar coord = 0;
};

/// Isotropy algebra of a point of P^1 under the Moebius action of SL2: the
/// span of (e, h, f) combinations whose vector field vanishes at the point.
/// Requires `ambient` to be sl2 in the (e, h, f) basis.
Subalg stabilizer_subalgebra(const LieAlgPtr& ambient, const P1Point& point);

/// Descriptor of a reductive group K (or L) inside a pair.
///   Torus: rank r, Lie(K) = span(embedding), finite component group generated
///          by order-two torus elements given as sign exponents.
///   SL2:   K = SL2 with Lie(K) = span(embedding) and maximal torus `torus`.
struct KDescriptor {
  enum class Kind { Torus, SL2 };

  Kind kind = Kind::Torus;
  std::string name;
  /// Lie(K) basis in ambient coordinates.
  std::vector<Vector> embedding;
  /// Maximal-torus generators in ambient coordinates (torus coordinates of weights).
  std::vector<Vector> torus;
  /// Weight of each ambient basis element under the maximal torus of K.
  std::vector<Weight> adjoint_weights;
  /// Order-two elements t with t acting on a character n by (-1)^(sum s_i n_i).
  std::vector<std::vector<int>> component_signs;

  std::size_t torus_rank() const { return torus.size(); }
  /// Sign by which a component generator acts on the character `n`.
  int component_sign(std::size_t generator, const Weight& n) const;
};

/// (g, K) together with subpair data (h, L); M = L x| U with u = dim U.
/// The first `l_dim` vectors of h.basis() span l = Lie(L); the remaining
/// ones are ad(l)-weight vectors spanning a complement of l in h.
struct PairData {
  std::string family;
  LieAlgPtr g;
  KDescriptor K;
  Subalg h;
  KDescriptor L;
  std::size_t l_dim = 0;
  std::size_t u_dim = 0;
  std::string lambda_domain;
  /// For product pairs: the two factors, and for each h basis vector the
  /// (factor, index in the factor's h basis) it came from.
  std::vector<std::shared_ptr<const PairData>> factors;
  std::vector<std::pair<std::size_t, std::size_t>> h_origin;

  /// Character values on h's basis; throws NonInvariantCharacter if it does
  /// not vanish on [h, h].
  void check_character(const Vector& lambda) const;
};

enum class BasePoint { Zero, Infinity };

/// (A) K = diagonal torus, H = Borel stabilizing 0 (or infinity).
PairData closed_orbit_pair(BasePoint base = BasePoint::Zero);
/// (B) K = diagonal torus, H = Borel stabilizing 1, M = {+-1}.
PairData open_orbit_pair();
/// (C) K = G = SL2, H = Borel stabilizing 0; u = 1.
PairData borel_weil_bott_pair();
/// (D) Direct sum of two torus-type pairs (families A/B); at most one factor
/// may have a disconnected L.
PairData product_pair(const PairData& a, const PairData& b);

/// Validates the invariants of a pair: K embedding is a subalgebra whose torus
/// weights reproduce ad eigenvalues, Lie(L) sits inside m = k cap h,
/// u_dim = dim m - dim l, and the complement vectors are ad(l)-weight vectors.
void validate_pair(const PairData& pair);

}  // namespace locind

#endif  // LOCIND_LIEALG_HPP
