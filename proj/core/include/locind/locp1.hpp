#ifndef LOCIND_LOCP1_HPP
#define LOCIND_LOCP1_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locind/exactla.hpp"
#include "locind/gkmod.hpp"
#include "locind/liealg.hpp"

namespace locind {

/// Laurent polynomial with rational exponents: exponent -> coefficient.
using Section = std::map<ExactScalar, ExactScalar>;

/// Differential operator sum c_{ij} x^i d^j on one chart of P^1 (x = z or
/// w = 1/z), with integer (possibly negative) powers of x.
class ChartOp {
 public:
  using Key = std::pair<int, unsigned>;  // (power of x, order of d)

  ChartOp() = default;
  explicit ChartOp(Chart chart) : chart_(chart) {}

  static ChartOp coordinate(Chart chart, int power = 1, const ExactScalar& c = 1);
  static ChartOp derivative(Chart chart, unsigned order = 1);
  static ChartOp scalar(Chart chart, const ExactScalar& c);

  Chart chart() const { return chart_; }
  const std::map<Key, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int power, unsigned order, const ExactScalar& c);
  unsigned order() const;

  ChartOp operator+(const ChartOp& o) const;
  ChartOp operator-(const ChartOp& o) const;
  ChartOp operator*(const ExactScalar& s) const;
  /// Composition (this after o), normal ordered.
  ChartOp operator*(const ChartOp& o) const;
  bool operator==(const ChartOp& o) const { return chart_ == o.chart_ && terms_ == o.terms_; }

  /// Applies the operator to a section x^r with rational exponents.
  Section apply(const Section& s) const;
  /// The same operator written in the other chart (z = 1/w).
  ChartOp in_other_chart() const;

  std::string to_string() const;

 private:
  Chart chart_ = Chart::Z;
  std::map<Key, ExactScalar> terms_;
};

ChartOp commutator(const ChartOp& a, const ChartOp& b);

/// Infinitesimal Moebius action of e, h, f (index 0, 1, 2) with the
/// convention xi_X f(x) = d/dt f(exp(-t xi) x) at t = 0.
ChartOp vector_field(std::size_t xi, Chart chart = Chart::Z);

/// First-order realization of sl2 on sections of the lambda0-twisted line
/// bundle in one chart; the z chart is based at 0, the w chart at infinity.
struct TwistedRep {
  int lambda0 = 0;
  Chart chart = Chart::Z;
  std::array<ChartOp, 3> rho;
};

TwistedRep twisted_rep(int lambda0, Chart chart = Chart::Z);
/// Pair (i, j) of basis indices where [rho(i), rho(j)] != rho([i, j]).
std::optional<std::pair<std::size_t, std::size_t>> bracket_failure(const TwistedRep& rep);
/// The twisted line-bundle tensor product: adds the zeroth-order part of the
/// b-twist to every operator.
TwistedRep twist(const TwistedRep& rep, int b);
/// Transition of the z-chart realization into the w chart:
/// w^lambda0 o rho_z o w^-lambda0 rewritten in w.
TwistedRep transport_to_w(const TwistedRep& rep);

/// Direct image at the closed orbit: basis delta_n (n >= 0) with
/// z delta_n = -n delta_{n-1}, d delta_n = delta_{n+1}. Returns the
/// coefficient of delta_m in (z^i d^j) delta_n.
std::optional<std::pair<int, ExactScalar>> delta_apply(int i, unsigned j, int n);

/// Graded sl2-module of the delta module for a realization based at the
/// chart origin; weights inside `window` only.
GradedModule delta_module(const TwistedRep& rep, const Window& window);
GradedModule delta_module(int lambda0, const Window& window);

/// Sections on the open orbit through z = 1 with M = {+-1} type `parity`:
/// z^r, r = (lambda0 - n)/2 for the weights n = parity mod 2 in the window.
GradedModule laurent_module(int lambda0, int parity, const Window& window, Chart chart = Chart::Z);

/// Cech cohomology of the n-twisted line bundle over the two-chart cover, as
/// SL2 K-type characters (H0, H1).
std::pair<Character, Character> cech_cohomology_On(int n);
/// H0(P^1, O(n)) as a graded sl2-module on z^0..z^n.
GradedModule global_sections_module(int n);

/// Casimir 2ef - h + h^2/2 on a weight space (requires the neighbours in the window).
SparseMatrix casimir_block(const GradedModule& m, const Weight& mu);

/// Filtration of a delta module by vanishing order.
struct FiltrationReport {
  bool kernels_match = false;      // ker z^{p+1} = span(delta_0 .. delta_p)
  bool annihilated = false;        // z^{p+1} kills F_p
  bool injective = false;          // F_{p-1} -> F_p
  bool exhaustive = false;         // union of the F_p is everything in the window
  bool k_stable = false;           // h preserves F_p
  bool bottom_is_fiber = false;    // F_0 is one-dimensional of weight lambda0 + 2
  std::string detail;
  bool ok() const {
    return kernels_match && annihilated && injective && exhaustive && k_stable && bottom_is_fiber;
  }
};
FiltrationReport filtration_check(int lambda0, unsigned p, int depth);

/// Truncation of an associated module along a K-orbit: p-jets along the closed
/// orbit {0}, or sections on the open orbit (where the ideal of the orbit is 0).
class JetModule {
 public:
  enum class Orbit { Closed, Open };

  JetModule(Orbit orbit, int lambda0, unsigned p, int parity = 0);

  Orbit orbit() const { return orbit_; }
  int lambda0() const { return lambda0_; }
  unsigned level() const { return p_; }
  int parity() const { return parity_; }

  /// Section modulo the p-th power of the orbit ideal.
  Section reduce(const Section& s) const;
  /// Jet coordinates v_s = ((zeta_X)^s phi)(0), s < p, for the normal
  /// direction zeta = e. Closed orbit only.
  Vector jets(const Section& s) const;
  /// Action of a function on jet coordinates by the Leibniz formula along zeta.
  Vector act_function(const Section& f, const Vector& v) const;
  /// Lie algebra element (e, h, f index) on a section, when it preserves the
  /// truncation; throws std::domain_error otherwise.
  Section act(std::size_t xi, const Section& s) const;
  /// Weight of the monomial z^r under the diagonal torus.
  ExactScalar weight_of(const ExactScalar& r) const;
  /// Action of the order-two element of M on z^r (open orbit).
  int component_sign(const ExactScalar& r) const;
  /// Fiber map at the base point (0 or 1).
  ExactScalar iota(const Section& s) const;

 private:
  Orbit orbit_;
  int lambda0_;
  unsigned p_;
  int parity_;
  TwistedRep rep_;
};

/// The five conformance conditions on a truncation, checked on weight bases
/// (exponent range `depth` for the open orbit).
struct JetReport {
  bool quotient_equivariant = false;
  bool free = false;
  bool action_equivariant = false;
  bool k_compatible = false;
  bool fiber_iso = false;
  bool leibniz = false;
  std::string detail;
  bool ok() const {
    return quotient_equivariant && free && action_equivariant && k_compatible && fiber_iso && leibniz;
  }
};
JetReport check_associated(const JetModule& j, int depth = 8);

/// Cech cohomology (H0, H1) over the two-chart cover of the localization
/// of a point-orbit (delta) or open-orbit (Laurent) module, weightwise on
/// the window. `chart` is the chart of the base point for the closed orbit.
std::pair<Character, Character> cech_direct_image(JetModule::Orbit orbit, int lambda0, int parity,
                                                  const Window& window, Chart chart = Chart::Z);

/// Orbit-side normalization offsets (integer weights of the three line twists).
struct Ledger {
  int kl_twist = 0;
  int canonical_Y = 0;
  int anticanonical_X = 2;
};

}  // namespace locind

#endif  // LOCIND_LOCP1_HPP
