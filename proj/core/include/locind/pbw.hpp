#ifndef LOCIND_PBW_HPP
#define LOCIND_PBW_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "locind/exactla.hpp"
#include "locind/liealg.hpp"
#include "locind/weight.hpp"

namespace locind {

/// Exponent vector, one entry per ordered basis element of g.
using PBWMonomial = std::vector<unsigned>;

/// Element of U(g) in PBW normal form. No zero coefficients are stored.
class UElt {
 public:
  UElt() = default;
  explicit UElt(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::map<PBWMonomial, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ExactScalar coefficient(const PBWMonomial& m) const;

  void add_term(const PBWMonomial& m, const ExactScalar& c);

  UElt operator+(const UElt& o) const;
  UElt operator-(const UElt& o) const;
  UElt operator-() const;
  UElt operator*(const ExactScalar& s) const;

  bool operator==(const UElt& o) const { return terms_ == o.terms_; }

 private:
  std::size_t dim_ = 0;
  std::map<PBWMonomial, ExactScalar> terms_;
};

/// U(g) for a fixed Lie algebra. Multiplication straightens words with
/// x_j x_i -> x_i x_j + [x_j, x_i] (j > i); partial results are memoized.
class UAlgebra {
 public:
  explicit UAlgebra(LieAlgPtr g);

  const LieAlgPtr& lie() const { return g_; }
  std::size_t dim() const { return g_->dim(); }

  UElt one() const;
  UElt generator(std::size_t i) const;
  /// Image of a Lie algebra element (coordinate vector) in U(g).
  UElt from_lie(const Vector& x) const;
  UElt monomial(const PBWMonomial& m, const ExactScalar& c = 1) const;

  UElt mul(const UElt& a, const UElt& b) const;
  UElt commutator(const UElt& a, const UElt& b) const;
  UElt power(const UElt& a, unsigned n) const;
  /// x_{i1} x_{i2} ... in the given (not necessarily ordered) sequence.
  UElt word(const std::vector<std::size_t>& letters) const;

  /// Principal anti-automorphism: x -> -x on g, extended anti-multiplicatively.
  UElt antipode(const UElt& a) const;

  /// All PBW monomials of total degree <= p, in lexicographic order.
  std::vector<PBWMonomial> monomials_up_to(unsigned p) const;

  std::string to_string(const UElt& a) const;

 private:
  // x_i * (PBW monomial), in normal form.
  const UElt& gen_times(std::size_t i, const PBWMonomial& m) const;
  UElt gen_times(std::size_t i, const UElt& a) const;

  LieAlgPtr g_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, PBWMonomial>, std::shared_ptr<const UElt>> cache_;
};

/// Max total exponent over the terms; 0 for the zero element.
unsigned filtration_degree(const UElt& a);
unsigned total_degree(const PBWMonomial& m);

/// Weight of a monomial given the adjoint weight of each basis element.
Weight monomial_weight(const PBWMonomial& m, const std::vector<Weight>& adjoint_weights);

}  // namespace locind

#endif  // LOCIND_PBW_HPP
