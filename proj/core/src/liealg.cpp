#include "locind/liealg.hpp"

#include <set>
#include <sstream>

namespace locind {

Weight Weight::operator+(const Weight& o) const {
  if (coords.empty()) return o;
  if (o.coords.empty()) return *this;
  if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

bool Weight::is_zero() const {
  for (int c : coords)
    if (c != 0) return false;
  return true;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

std::string StructureFailure::describe() const {
  std::ostringstream os;
  if (kind == "antisymmetry")
    os << "antisymmetry fails for basis pair (" << i << ", " << j << ")";
  else
    os << "Jacobi identity fails for basis triple (" << i << ", " << j << ", " << k << ")";
  return os.str();
}

LieAlg::LieAlg(Unchecked, std::vector<std::string> labels, Constants constants)
    : labels_(std::move(labels)), c_(std::move(constants)) {
  const std::size_t n = labels_.size();
  if (c_.size() != n) throw InvalidLieAlgebra("structure constant table has wrong size");
  for (const auto& row : c_) {
    if (row.size() != n) throw InvalidLieAlgebra("structure constant table has wrong size");
    for (const auto& v : row)
      if (v.size() != n) throw InvalidLieAlgebra("structure constant vector has wrong size");
  }
}

LieAlg::LieAlg(std::vector<std::string> labels, Constants constants)
    : LieAlg(Unchecked{}, std::move(labels), std::move(constants)) {
  if (auto failure = find_structure_failure()) throw InvalidLieAlgebra(failure->describe());
}

LieAlg LieAlg::unchecked(std::vector<std::string> labels, Constants constants) {
  return LieAlg(Unchecked{}, std::move(labels), std::move(constants));
}

std::size_t LieAlg::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::out_of_range("no basis element labelled " + label);
}

Vector LieAlg::basis_vector(std::size_t i) const {
  Vector v(dim(), 0);
  v.at(i) = 1;
  return v;
}

Vector LieAlg::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const ExactScalar s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (c_[i][j][k] != 0) out[k] += s * c_[i][j][k];
    }
  }
  return out;
}

std::optional<StructureFailure> LieAlg::find_structure_failure() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c_[i][j][k] != -c_[j][i][k]) return StructureFailure{"antisymmetry", i, j, 0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector xi = basis_vector(i), xj = basis_vector(j), xk = basis_vector(k);
        Vector a = bracket(xi, bracket(xj, xk));
        const Vector b = bracket(xj, bracket(xk, xi));
        const Vector c = bracket(xk, bracket(xi, xj));
        for (std::size_t t = 0; t < n; ++t) a[t] += b[t] + c[t];
        for (const auto& v : a)
          if (v != 0) return StructureFailure{"jacobi", i, j, k};
      }
  return std::nullopt;
}

LieAlg LieAlg::change_basis(const std::vector<Vector>& new_basis,
                            std::vector<std::string> new_labels) const {
  const std::size_t n = dim();
  if (new_basis.size() != n || new_labels.size() != n)
    throw InvalidLieAlgebra("change_basis needs exactly dim vectors and labels");
  SparseMatrix p(n, n);  // columns = new basis vectors
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) p.set(i, j, new_basis[j].at(i));
  const SparseMatrix pinv = inverse(p);
  Constants c(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = pinv.apply(bracket(new_basis[i], new_basis[j]));
  return LieAlg(std::move(new_labels), std::move(c));
}

LieAlg sl2() {
  // order e, h, f
  LieAlg::Constants c(3, std::vector<Vector>(3, Vector(3, 0)));
  c[1][0][0] = 2;   // [h,e] = 2e
  c[0][1][0] = -2;
  c[1][2][2] = -2;  // [h,f] = -2f
  c[2][1][2] = 2;
  c[0][2][1] = 1;   // [e,f] = h
  c[2][0][1] = -1;
  return LieAlg({"e", "h", "f"}, std::move(c));
}

LieAlg torus_algebra(std::size_t rank) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rank; ++i)
    labels.push_back(rank == 1 ? "t" : "t" + std::to_string(i + 1));
  return LieAlg(std::move(labels),
                LieAlg::Constants(rank, std::vector<Vector>(rank, Vector(rank, 0))));
}

LieAlg direct_sum(const LieAlg& a, const LieAlg& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::set<std::string> seen(a.labels().begin(), a.labels().end());
  bool collide = false;
  for (const auto& l : b.labels()) collide = collide || seen.count(l);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(collide ? l + "1" : l);
  for (const auto& l : b.labels()) labels.push_back(collide ? l + "2" : l);
  LieAlg::Constants c(n, std::vector<Vector>(n, Vector(n, 0)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c[i][j][k] = a.bracket_basis(i, j)[k];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) c[na + i][na + j][na + k] = b.bracket_basis(i, j)[k];
  return LieAlg(std::move(labels), std::move(c));
}

std::string format_lie_element(const LieAlg& g, const Vector& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const ExactScalar mag = abs(x[i]);
    if (x[i] < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (mag != 1) os << mag.get_str();
    os << g.label(i);
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

Subalg::Subalg(LieAlgPtr ambient, std::vector<Vector> basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  const std::size_t n = ambient_->dim();
  basis_columns_ = SparseMatrix(n, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (basis_[j].size() != n) throw InvalidLieAlgebra("subalgebra vector has wrong length");
    for (std::size_t i = 0; i < n; ++i) basis_columns_.set(i, j, basis_[j][i]);
  }
  if (rank(basis_columns_) != basis_.size())
    throw InvalidLieAlgebra("subalgebra basis is linearly dependent");
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (!contains(ambient_->bracket(basis_[i], basis_[j])))
        throw InvalidLieAlgebra("subalgebra is not closed under the bracket");
}

std::optional<Vector> Subalg::coordinates(const Vector& x) const {
  return solve(basis_columns_, x);
}

LieAlg Subalg::as_lie_algebra(std::vector<std::string> labels) const {
  const std::size_t n = dim();
  LieAlg::Constants c(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = *coordinates(ambient_->bracket(basis_[i], basis_[j]));
  return LieAlg(std::move(labels), std::move(c));
}

Subalg stabilizer_subalgebra(const LieAlgPtr& ambient, const P1Point& point) {
  if (ambient->labels() != std::vector<std::string>{"e", "h", "f"})
    throw InvalidPair("stabilizer_subalgebra needs sl2 in the (e, h, f) basis");
  // The vector field of a e + b h + c f is (-a - 2b z + c z^2) d/dz in the z
  // chart and (a w^2 + 2b w - c) d/dw in the w chart.
  const ExactScalar& p = point.coord;
  SparseMatrix row(1, 3);
  if (point.chart == Chart::Z) {
    row.set(0, 0, -1);
    row.set(0, 1, -2 * p);
    row.set(0, 2, p * p);
  } else {
    row.set(0, 0, p * p);
    row.set(0, 1, 2 * p);
    row.set(0, 2, -1);
  }
  return Subalg(ambient, kernel_basis(row));
}

// ---------------------------------------------------------------------------

int KDescriptor::component_sign(std::size_t generator, const Weight& n) const {
  const auto& s = component_signs.at(generator);
  long total = 0;
  for (std::size_t i = 0; i < s.size() && i < n.rank(); ++i) total += static_cast<long>(s[i]) * n[i];
  return (total % 2 == 0) ? 1 : -1;
}

void PairData::check_character(const Vector& lambda) const {
  if (lambda.size() != h.dim()) throw NonInvariantCharacter("character has wrong length");
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      const auto coords = h.coordinates(g->bracket(h.basis()[i], h.basis()[j]));
      ExactScalar value = 0;
      for (std::size_t k = 0; k < h.dim(); ++k) value += lambda[k] * (*coords)[k];
      if (value != 0)
        throw NonInvariantCharacter("character does not vanish on [h,h] (basis pair " +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
    }
}

namespace {

std::vector<Weight> sl2_weights() { return {Weight{2}, Weight{0}, Weight{-2}}; }

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

std::size_t span_dim(const std::vector<Vector>& vs, std::size_t n) {
  SparseMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, vs[i][j]);
  return rank(m);
}

KDescriptor diagonal_torus(const LieAlgPtr& g) {
  KDescriptor k;
  k.kind = KDescriptor::Kind::Torus;
  k.name = "T";
  k.embedding = {unit(g->dim(), 1)};
  k.torus = k.embedding;
  k.adjoint_weights = sl2_weights();
  return k;
}

}  // namespace

PairData closed_orbit_pair(BasePoint base) {
  auto g = std::make_shared<const LieAlg>(sl2());
  KDescriptor K = diagonal_torus(g);
  // l = span{h} first, then the nilradical direction (f at 0, e at infinity).
  Subalg h(g, {unit(3, 1), unit(3, base == BasePoint::Zero ? 2 : 0)});
  KDescriptor L = K;
  L.name = "T";
  PairData p{base == BasePoint::Zero ? "closed-orbit" : "closed-orbit-infinity",
             g, K, h, L, 1, 0,
             "lambda(h) integer, lambda vanishes on the nilradical", {}, {}};
  validate_pair(p);
  return p;
}

PairData open_orbit_pair() {
  auto g = std::make_shared<const LieAlg>(sl2());
  KDescriptor K = diagonal_torus(g);
  // Stabilizer of z = 1: Cartan h - 2e and nilradical -e + h + f.
  Subalg h(g, {Vector{-2, 1, 0}, Vector{-1, 1, 1}});
  if (!stabilizer_subalgebra(g, P1Point{Chart::Z, 1}).contains(h.basis()[0]) ||
      !stabilizer_subalgebra(g, P1Point{Chart::Z, 1}).contains(h.basis()[1]))
    throw InvalidPair("open-orbit Borel is not the stabilizer of z = 1");
  KDescriptor L;
  L.kind = KDescriptor::Kind::Torus;
  L.name = "{+-1}";
  L.adjoint_weights = std::vector<Weight>(3, Weight{});
  L.component_signs = {{1}};
  PairData p{"open-orbit", g, K, h, L, 0, 0,
             "lambda(h - 2e) integer, lambda vanishes on the nilradical; parity of M = {+-1}", {}, {}};
  validate_pair(p);
  return p;
}

PairData borel_weil_bott_pair() {
  auto g = std::make_shared<const LieAlg>(sl2());
  KDescriptor K;
  K.kind = KDescriptor::Kind::SL2;
  K.name = "SL2";
  K.embedding = {unit(3, 0), unit(3, 1), unit(3, 2)};
  K.torus = {unit(3, 1)};
  K.adjoint_weights = sl2_weights();
  Subalg h(g, {unit(3, 1), unit(3, 2)});
  KDescriptor L = diagonal_torus(g);
  PairData p{"borel-weil-bott", g, K, h, L, 1, 1,
             "lambda(h) integer, lambda(f) = 0", {}, {}};
  validate_pair(p);
  return p;
}

PairData product_pair(const PairData& a, const PairData& b) {
  if (a.K.kind != KDescriptor::Kind::Torus || b.K.kind != KDescriptor::Kind::Torus)
    throw InvalidPair("product_pair supports torus-type factors only");
  if (a.L.component_signs.size() + b.L.component_signs.size() > 1)
    throw InvalidPair("product_pair supports at most one disconnected factor");
  auto g = std::make_shared<const LieAlg>(direct_sum(*a.g, *b.g));
  const std::size_t na = a.g->dim(), nb = b.g->dim(), n = na + nb;
  auto lift_a = [&](const Vector& v) {
    Vector out(n, 0);
    for (std::size_t i = 0; i < na; ++i) out[i] = v[i];
    return out;
  };
  auto lift_b = [&](const Vector& v) {
    Vector out(n, 0);
    for (std::size_t i = 0; i < nb; ++i) out[na + i] = v[i];
    return out;
  };
  const std::size_t ra = a.K.torus_rank(), rb = b.K.torus_rank();
  auto pad_weight = [&](const Weight& w, bool first) {
    std::vector<int> c(ra + rb, 0);
    if (first)
      for (std::size_t i = 0; i < w.rank(); ++i) c[i] = w[i];
    else
      for (std::size_t i = 0; i < w.rank(); ++i) c[ra + i] = w[i];
    return Weight(c);
  };
  auto combine = [&](const KDescriptor& x, const KDescriptor& y, bool weights) {
    KDescriptor k;
    k.kind = KDescriptor::Kind::Torus;
    k.name = x.name + "x" + y.name;
    for (const auto& v : x.embedding) k.embedding.push_back(lift_a(v));
    for (const auto& v : y.embedding) k.embedding.push_back(lift_b(v));
    for (const auto& v : x.torus) k.torus.push_back(lift_a(v));
    for (const auto& v : y.torus) k.torus.push_back(lift_b(v));
    if (weights) {
      for (const auto& w : x.adjoint_weights) k.adjoint_weights.push_back(pad_weight(w, true));
      for (const auto& w : y.adjoint_weights) k.adjoint_weights.push_back(pad_weight(w, false));
    } else {
      k.adjoint_weights = std::vector<Weight>(n, Weight{});
    }
    for (const auto& s : x.component_signs) {
      std::vector<int> padded(ra + rb, 0);
      for (std::size_t i = 0; i < s.size(); ++i) padded[i] = s[i];
      k.component_signs.push_back(padded);
    }
    for (const auto& s : y.component_signs) {
      std::vector<int> padded(ra + rb, 0);
      for (std::size_t i = 0; i < s.size(); ++i) padded[ra + i] = s[i];
      k.component_signs.push_back(padded);
    }
    return k;
  };
  KDescriptor K = combine(a.K, b.K, true);
  // L-component signs are expressed against the torus coordinates of K.
  KDescriptor L = combine(a.L, b.L, false);
  // h basis: l(a), l(b), complement(a), complement(b).
  std::vector<Vector> hb;
  for (std::size_t i = 0; i < a.l_dim; ++i) hb.push_back(lift_a(a.h.basis()[i]));
  for (std::size_t i = 0; i < b.l_dim; ++i) hb.push_back(lift_b(b.h.basis()[i]));
  for (std::size_t i = a.l_dim; i < a.h.dim(); ++i) hb.push_back(lift_a(a.h.basis()[i]));
  for (std::size_t i = b.l_dim; i < b.h.dim(); ++i) hb.push_back(lift_b(b.h.basis()[i]));
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  for (std::size_t i = 0; i < a.l_dim; ++i) origin.emplace_back(0, i);
  for (std::size_t i = 0; i < b.l_dim; ++i) origin.emplace_back(1, i);
  for (std::size_t i = a.l_dim; i < a.h.dim(); ++i) origin.emplace_back(0, i);
  for (std::size_t i = b.l_dim; i < b.h.dim(); ++i) origin.emplace_back(1, i);
  PairData p{"product(" + a.family + "," + b.family + ")",
             g, K, Subalg(g, hb), L, a.l_dim + b.l_dim, a.u_dim + b.u_dim,
             "componentwise: " + a.lambda_domain + " | " + b.lambda_domain,
             {std::make_shared<const PairData>(a), std::make_shared<const PairData>(b)},
             origin};
  validate_pair(p);
  return p;
}

void validate_pair(const PairData& p) {
  const auto& g = *p.g;
  const std::size_t n = g.dim();
  Subalg k(p.g, p.K.embedding);  // throws if not a subalgebra
  if (p.K.adjoint_weights.size() != n) throw InvalidPair("adjoint_weights has wrong length");
  for (std::size_t t = 0; t < p.K.torus.size(); ++t) {
    if (!k.contains(p.K.torus[t])) throw InvalidPair("torus generator outside Lie(K)");
    for (std::size_t j = 0; j < n; ++j) {
      const Vector br = g.bracket(p.K.torus[t], g.basis_vector(j));
      for (std::size_t i = 0; i < n; ++i) {
        const ExactScalar expected = (i == j) ? ExactScalar(p.K.adjoint_weights[j][t]) : ExactScalar(0);
        if (br[i] != expected)
          throw InvalidPair("adjoint_weights do not reproduce ad(torus) on basis element " +
                            g.label(j));
      }
    }
  }
  if (p.l_dim > p.h.dim()) throw InvalidPair("l_dim exceeds dim h");
  std::vector<Vector> l(p.h.basis().begin(), p.h.basis().begin() + static_cast<long>(p.l_dim));
  if (span_dim(l, n) != p.L.embedding.size() ||
      span_dim([&] {
        auto both = l;
        both.insert(both.end(), p.L.embedding.begin(), p.L.embedding.end());
        return both;
      }(), n) != p.l_dim)
    throw InvalidPair("leading h basis vectors do not span Lie(L)");
  // m = k cap h
  std::vector<Vector> kh = p.K.embedding;
  kh.insert(kh.end(), p.h.basis().begin(), p.h.basis().end());
  const std::size_t dim_m = p.K.embedding.size() + p.h.dim() - span_dim(kh, n);
  for (const auto& v : l)
    if (!k.contains(v)) throw InvalidPair("Lie(L) is not contained in k cap h");
  if (p.u_dim != dim_m - p.l_dim) throw InvalidPair("u_dim != dim m - dim l");
  // Complement vectors must be ad(l)-weight vectors.
  for (std::size_t i = p.l_dim; i < p.h.dim(); ++i)
    for (const auto& t : l) {
      const Vector br = g.bracket(t, p.h.basis()[i]);
      // br must be a multiple of the vector itself
      const Vector& x = p.h.basis()[i];
      std::optional<ExactScalar> ratio;
      for (std::size_t c = 0; c < n; ++c) {
        if (x[c] == 0) {
          if (br[c] != 0) throw InvalidPair("h complement vector is not an ad(l) weight vector");
          continue;
        }
        const ExactScalar r = br[c] / x[c];
        if (ratio && *ratio != r) throw InvalidPair("h complement vector is not an ad(l) weight vector");
        ratio = r;
      }
    }
}

}  // namespace locind
