#ifndef LOCIND_HECKE_HPP
#define LOCIND_HECKE_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "locind/exactla.hpp"
#include "locind/gkmod.hpp"
#include "locind/liealg.hpp"
#include "locind/pbw.hpp"

namespace locind {

class UnsupportedK : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// K-finite distribution on K as a family of endomorphisms, one block per
/// K-type (torus K: 1x1 blocks, the coefficient of the idempotent e_n).
struct RKElt {
  std::map<Weight, SparseMatrix> blocks;

  bool is_zero() const { return blocks.empty(); }
  RKElt operator+(const RKElt& o) const;
  RKElt operator*(const ExactScalar& s) const;
  bool operator==(const RKElt&) const = default;
};

/// Idempotent e_n (torus) or the identity block at an SL2 K-type.
RKElt rk_idempotent(const Weight& tau, std::size_t dim = 1);
/// Blockwise product (convolution).
RKElt rk_mul(const RKElt& s, const RKElt& t);

/// Element of R(g, K) in canonical form: sum of S (x) c^gamma over PBW
/// monomials c^gamma in a complement of k (the U(k) factors are absorbed
/// into the R(K) coefficient).
struct RgKElt {
  std::map<PBWMonomial, RKElt> terms;

  bool is_zero() const { return terms.empty(); }
  RgKElt operator+(const RgKElt& o) const;
  RgKElt operator-(const RgKElt& o) const;
  RgKElt operator*(const ExactScalar& s) const;
  bool operator==(const RgKElt&) const = default;
};

/// Matrix of x = (a, b, c) = a e + b h + c f on V_n with the basis
/// h v_j = (n-2j) v_j, f v_j = v_{j+1}, e v_j = j(n-j+1) v_{j-1}.
SparseMatrix sl2_irrep_matrix(int n, const Vector& x);

/// R(g, K) for a pair with torus K, or with K = G = SL2. The Lie algebra is
/// rebased so that a basis of k comes first and PBW normal forms put the
/// U(k) part on the left.
class HeckeAlgebra {
 public:
  /// Throws UnsupportedK unless K is a torus or k = g = sl2.
  explicit HeckeAlgebra(const PairData& pair);

  bool torus() const { return torus_; }
  const UAlgebra& U() const { return *U_; }
  std::size_t k_dim() const { return k_dim_; }
  /// Rebased coordinates of an ambient element of g.
  Vector rebase(const Vector& ambient) const;
  UElt from_ambient(const Vector& ambient) const { return U_->from_lie(rebase(ambient)); }
  /// K-weight of a monomial (torus K only).
  Weight weight(const PBWMonomial& m) const;

  /// Canonical form of S (x) u.
  RgKElt element(const RKElt& s, const UElt& u) const;
  RgKElt mul(const RgKElt& a, const RgKElt& b) const;

  /// (S (x) xi) * b by the balanced product formula, with an explicit basis
  /// of span Ad(K) xi. For K = SL2, xi must lie in C + g.
  RgKElt product_formula(const RKElt& s, const UElt& xi, const RgKElt& b,
                         const std::vector<UElt>& span_basis) const;
  /// Default basis of span Ad(K) xi.
  std::vector<UElt> orbit_span_basis(const UElt& xi) const;

  /// Sum of the identity blocks over the window, tensored with 1.
  RgKElt approx_identity(const Window& window) const;
  /// Every term maps K-weights in the window into the window.
  bool supported_in(const RgKElt& x, const Window& window) const;

 private:
  RKElt absorb(const RKElt& s, const PBWMonomial& kpart) const;
  std::vector<std::pair<Weight, UElt>> weight_components(const UElt& u) const;

  bool torus_ = true;
  std::size_t k_dim_ = 0;
  std::size_t rank_ = 0;
  LieAlgPtr rebased_;
  SparseMatrix to_rebased_;
  std::vector<Weight> weights_;
  std::unique_ptr<UAlgebra> U_;
};

RgKElt rgk_mul(const HeckeAlgebra& R, const RgKElt& a, const RgKElt& b);
RgKElt approx_identity(const HeckeAlgebra& R, const Window& window);

struct OracleOptions {
  int margin = 4;
  /// Largest PBW degree the truncation may reach.
  unsigned max_degree = 48;
};

/// Degree-0 induced module of V (x) top(g/h) by generators and relations:
/// per K-weight n, U(g) modulo the left ideal of h - lambda, the right ideal
/// of t - n and the component-group relations, read off on a PBW truncation.
/// Torus K gives a weight-graded module with the g-action; K = SL2 gives
/// K-type multiplicities only. Product pairs are handled factorwise.
GradedModule p_deg0_oracle(const PairData& pair, const GradedModule& V, const Window& window,
                           const OracleOptions& options = {});

}  // namespace locind

#endif  // LOCIND_HECKE_HPP
