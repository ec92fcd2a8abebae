#include "locind/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace locind {

// ---------------------------------------------------------------------------
// R(K)

namespace {

SparseMatrix scaled(const SparseMatrix& m, const ExactScalar& s) {
  SparseMatrix r(m.rows(), m.cols());
  if (s == 0) return r;
  for (const auto& [k, v] : m.entries()) r.set(k.first, k.second, v * s);
  return r;
}

SparseMatrix sum(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix r = a;
  for (const auto& [k, v] : b.entries()) r.add(k.first, k.second, v);
  return r;
}

void add_block(RKElt& x, const Weight& tau, const SparseMatrix& m) {
  if (m.is_zero()) return;
  auto it = x.blocks.find(tau);
  if (it == x.blocks.end()) {
    x.blocks.emplace(tau, m);
    return;
  }
  if (it->second.rows() != m.rows() || it->second.cols() != m.cols())
    throw std::invalid_argument("block size mismatch at a K-type");
  it->second = sum(it->second, m);
  if (it->second.is_zero()) x.blocks.erase(it);
}

void add_term(RgKElt& x, const PBWMonomial& m, const RKElt& s) {
  if (s.is_zero()) return;
  auto it = x.terms.find(m);
  if (it == x.terms.end()) {
    x.terms.emplace(m, s);
    return;
  }
  it->second = it->second + s;
  if (it->second.is_zero()) x.terms.erase(it);
}

ExactScalar power(const ExactScalar& x, unsigned k) {
  ExactScalar r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

// Coordinates of `x` (as UElt) in the span of `basis`, or nullopt.
std::optional<Vector> coordinates_in(const std::vector<UElt>& basis, const UElt& x) {
  std::map<PBWMonomial, std::size_t> index;
  for (const auto& b : basis)
    for (const auto& [m, c] : b.terms()) index.try_emplace(m, index.size());
  for (const auto& [m, c] : x.terms())
    if (!index.count(m)) return std::nullopt;
  SparseMatrix a(index.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [m, c] : basis[j].terms()) a.set(index.at(m), j, c);
  Vector rhs(index.size(), 0);
  for (const auto& [m, c] : x.terms()) rhs[index.at(m)] = c;
  return solve(a, rhs);
}

}  // namespace

RKElt RKElt::operator+(const RKElt& o) const {
  RKElt r = *this;
  for (const auto& [tau, m] : o.blocks) add_block(r, tau, m);
  return r;
}

RKElt RKElt::operator*(const ExactScalar& s) const {
  RKElt r;
  for (const auto& [tau, m] : blocks) add_block(r, tau, scaled(m, s));
  return r;
}

RKElt rk_idempotent(const Weight& tau, std::size_t dim) {
  RKElt r;
  r.blocks.emplace(tau, SparseMatrix::identity(dim));
  return r;
}

RKElt rk_mul(const RKElt& s, const RKElt& t) {
  RKElt r;
  for (const auto& [tau, a] : s.blocks) {
    auto it = t.blocks.find(tau);
    if (it == t.blocks.end()) continue;
    if (a.cols() != it->second.rows()) throw std::invalid_argument("block size mismatch at a K-type");
    add_block(r, tau, a * it->second);
  }
  return r;
}

RgKElt RgKElt::operator+(const RgKElt& o) const {
  RgKElt r = *this;
  for (const auto& [m, s] : o.terms) add_term(r, m, s);
  return r;
}

RgKElt RgKElt::operator-(const RgKElt& o) const { return *this + o * ExactScalar(-1); }

RgKElt RgKElt::operator*(const ExactScalar& s) const {
  RgKElt r;
  for (const auto& [m, x] : terms) add_term(r, m, x * s);
  return r;
}

SparseMatrix sl2_irrep_matrix(int n, const Vector& x) {
  if (n < 0) throw std::invalid_argument("negative highest weight");
  if (x.size() != 3) throw std::invalid_argument("sl2 element needs three coordinates");
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  SparseMatrix m(d, d);
  for (int j = 0; j <= n; ++j) {
    if (j >= 1 && x[0] != 0) m.add(j - 1, j, x[0] * j * (n - j + 1));
    if (x[1] != 0) m.add(j, j, x[1] * (n - 2 * j));
    if (j + 1 <= n && x[2] != 0) m.add(j + 1, j, x[2]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// R(g, K)

namespace {

bool is_standard_sl2(const PairData& pair) {
  return pair.g->labels() == std::vector<std::string>{"e", "h", "f"} && pair.K.embedding.size() == 3 &&
         pair.K.embedding[0] == Vector{1, 0, 0} && pair.K.embedding[1] == Vector{0, 1, 0} &&
         pair.K.embedding[2] == Vector{0, 0, 1};
}

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(const PairData& pair) {
  const LieAlg& g = *pair.g;
  const std::size_t d = g.dim();
  if (pair.K.kind == KDescriptor::Kind::SL2) {
    if (!is_standard_sl2(pair)) throw UnsupportedK("K = SL2 is supported only as k = g = sl2 in the (e, h, f) basis");
    torus_ = false;
    k_dim_ = 3;
    rebased_ = pair.g;
    to_rebased_ = SparseMatrix::identity(3);
    weights_ = {Weight{2}, Weight{0}, Weight{-2}};
  } else {
    torus_ = true;
    rank_ = pair.K.torus_rank();
    k_dim_ = rank_;
    std::vector<Vector> basis = pair.K.torus;
    std::vector<std::string> labels;
    for (const auto& t : basis) labels.push_back(format_lie_element(g, t));
    for (std::size_t i = 0; i < basis.size(); ++i) weights_.push_back(Weight(std::vector<int>(rank_, 0)));
    RowReducer span;
    for (const auto& t : basis) {
      SparseRow r;
      for (std::size_t j = 0; j < d; ++j)
        if (t[j] != 0) r.emplace(j, t[j]);
      span.insert(r);
    }
    for (std::size_t j = 0; j < d && basis.size() < d; ++j) {
      if (!span.insert(SparseRow{{j, ExactScalar(1)}})) continue;
      basis.push_back(unit(d, j));
      labels.push_back(g.label(j));
      weights_.push_back(pair.K.adjoint_weights.at(j));
    }
    rebased_ = std::make_shared<const LieAlg>(g.change_basis(basis, labels));
    SparseMatrix cols(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) cols.set(i, j, basis[j][i]);
    to_rebased_ = inverse(cols);
  }
  U_ = std::make_unique<UAlgebra>(rebased_);
}

Vector HeckeAlgebra::rebase(const Vector& ambient) const { return to_rebased_.apply(ambient); }

Weight HeckeAlgebra::weight(const PBWMonomial& m) const {
  if (!torus_) throw UnsupportedK("K-weights of monomials need a torus K");
  Weight w(std::vector<int>(rank_, 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned k = 0; k < m[i]; ++k) w = w + weights_[i];
  return w;
}

RKElt HeckeAlgebra::absorb(const RKElt& s, const PBWMonomial& kpart) const {
  RKElt r;
  for (const auto& [tau, blk] : s.blocks) {
    if (torus_) {
      ExactScalar c = 1;
      for (std::size_t i = 0; i < rank_; ++i) c *= power(tau[i], kpart[i]);
      add_block(r, tau, scaled(blk, c));
    } else {
      SparseMatrix m = blk;
      for (std::size_t i = 0; i < 3; ++i) {
        const SparseMatrix x = sl2_irrep_matrix(tau[0], unit(3, i));
        for (unsigned k = 0; k < kpart[i]; ++k) m = m * x;
      }
      add_block(r, tau, m);
    }
  }
  return r;
}

RgKElt HeckeAlgebra::element(const RKElt& s, const UElt& u) const {
  RgKElt r;
  for (const auto& [m, c] : u.terms()) {
    PBWMonomial kpart(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(k_dim_));
    PBWMonomial cpart = m;
    std::fill(cpart.begin(), cpart.begin() + static_cast<std::ptrdiff_t>(k_dim_), 0u);
    add_term(r, cpart, absorb(s, kpart) * c);
  }
  return r;
}

std::vector<std::pair<Weight, UElt>> HeckeAlgebra::weight_components(const UElt& u) const {
  std::map<Weight, UElt> parts;
  for (const auto& [m, c] : u.terms()) {
    auto [it, inserted] = parts.try_emplace(weight(m), UElt(U_->dim()));
    it->second.add_term(m, c);
  }
  return {parts.begin(), parts.end()};
}

std::vector<UElt> HeckeAlgebra::orbit_span_basis(const UElt& xi) const {
  std::vector<UElt> out;
  if (torus_) {
    for (auto& [w, part] : weight_components(xi)) out.push_back(part);
    return out;
  }
  if (filtration_degree(xi) > 1) throw UnsupportedK("K = SL2 product formula needs xi in C + g");
  const PBWMonomial one(3, 0);
  if (xi.coefficient(one) != 0) out.push_back(U_->one());
  bool has_g = false;
  for (const auto& [m, c] : xi.terms()) has_g = has_g || total_degree(m) == 1;
  if (has_g)
    for (std::size_t i = 0; i < 3; ++i) out.push_back(U_->generator(i));
  return out;
}

namespace {

// Highest-weight decomposition of a finite-dimensional sl2-module given by
// the matrices of e, h, f. Each entry is (tau, images of v_0 .. v_tau) with
// v_{j+1} = f v_j.
std::vector<std::pair<int, std::vector<Vector>>> decompose_sl2(const std::array<SparseMatrix, 3>& rep) {
  const std::size_t n = rep[1].rows();
  std::vector<std::pair<int, std::vector<Vector>>> chains;
  std::size_t covered = 0;
  const int bound = static_cast<int>(2 * n);
  for (int mu = bound; mu >= 0; --mu) {
    SparseMatrix stacked(2 * n, n);
    for (const auto& [k, v] : rep[1].entries()) stacked.add(k.first, k.second, v);
    for (std::size_t i = 0; i < n; ++i) stacked.add(i, i, -mu);
    for (const auto& [k, v] : rep[0].entries()) stacked.add(n + k.first, k.second, v);
    for (Vector v : kernel_basis(stacked)) {
      std::vector<Vector> chain{v};
      for (int j = 0; j < mu; ++j) chain.push_back(rep[2].apply(chain.back()));
      covered += chain.size();
      chains.emplace_back(mu, std::move(chain));
    }
  }
  if (covered != n) throw std::logic_error("sl2-module is not completely decomposed");
  return chains;
}

}  // namespace

RgKElt HeckeAlgebra::product_formula(const RKElt& s, const UElt& xi, const RgKElt& b,
                                     const std::vector<UElt>& span_basis) const {
  // The basis must span exactly the span of Ad(K) xi.
  const std::vector<UElt> reference = orbit_span_basis(xi);
  if (span_basis.size() != reference.size()) throw std::invalid_argument("basis does not span Ad(K) xi");
  for (const auto& r : reference)
    if (!coordinates_in(span_basis, r)) throw std::invalid_argument("basis does not span Ad(K) xi");
  const std::size_t p = span_basis.size();
  RgKElt out;
  if (p == 0) return out;
  const Vector x = *coordinates_in(span_basis, xi);

  if (torus_) {
    // <xi_i^*, Ad(k)^-1 xi> = sum_w a_{w,i} k^{-w}, and k^{-w} e_m = e_{m+w}.
    std::vector<std::pair<Weight, Vector>> a;
    for (const auto& [w, part] : weight_components(xi)) a.emplace_back(w, *coordinates_in(span_basis, part));
    for (std::size_t i = 0; i < p; ++i)
      for (const auto& [eta, t] : b.terms) {
        RKElt ct;
        for (const auto& [w, coef] : a)
          if (coef[i] != 0)
            for (const auto& [m, blk] : t.blocks) add_block(ct, m + w, scaled(blk, coef[i]));
        const RKElt st = rk_mul(s, ct);
        if (st.is_zero()) continue;
        out = out + element(st, U_->mul(span_basis[i], U_->monomial(eta)));
      }
    return out;
  }

  // K = SL2: the span P is a K-module; c_i T at the sigma-block is read off
  // from the tau-isotypic part of V_sigma (x) P^*.
  std::array<SparseMatrix, 3> ad_p;
  for (std::size_t g = 0; g < 3; ++g) {
    ad_p[g] = SparseMatrix(p, p);
    for (std::size_t j = 0; j < p; ++j) {
      const auto col = coordinates_in(span_basis, U_->commutator(U_->generator(g), span_basis[j]));
      if (!col) throw std::logic_error("span of Ad(K) xi is not K-stable");
      for (std::size_t i = 0; i < p; ++i)
        if ((*col)[i] != 0) ad_p[g].set(i, j, (*col)[i]);
    }
  }
  for (const auto& [eta, t] : b.terms)
    for (const auto& [tau_w, tblk] : t.blocks) {
      const int tau = tau_w[0];
      for (int sigma = std::max(0, tau - 2); sigma <= tau + 2; ++sigma) {
        const std::size_t ds = static_cast<std::size_t>(sigma) + 1;
        const std::size_t dx = ds * p;
        auto idx = [p](std::size_t a, std::size_t l) { return a * p + l; };
        std::array<SparseMatrix, 3> rep;
        for (std::size_t g = 0; g < 3; ++g) {
          rep[g] = SparseMatrix(dx, dx);
          const SparseMatrix sg = sl2_irrep_matrix(sigma, unit(3, g));
          for (const auto& [k, v] : sg.entries())
            for (std::size_t l = 0; l < p; ++l) rep[g].add(idx(k.first, l), idx(k.second, l), v);
          // dual basis of P^*: x acts by -(ad x)^T
          for (const auto& [k, v] : ad_p[g].entries())
            for (std::size_t a = 0; a < ds; ++a) rep[g].add(idx(a, k.second), idx(a, k.first), -v);
        }
        const auto chains = decompose_sl2(rep);
        SparseMatrix iota(dx, dx);
        std::vector<std::pair<std::size_t, std::size_t>> copies;  // (first column, tau copy)
        std::size_t col = 0;
        for (const auto& [mu, chain] : chains) {
          if (mu == tau) copies.emplace_back(col, 0);
          for (const auto& v : chain) {
            for (std::size_t r = 0; r < dx; ++r)
              if (v[r] != 0) iota.set(r, col, v[r]);
            ++col;
          }
        }
        if (copies.empty()) continue;
        const SparseMatrix pi = inverse(iota);
        // Y = sum over copies of iota_c T pi_c
        SparseMatrix y(dx, dx);
        for (const auto& [first, unused] : copies) {
          SparseMatrix ic(dx, static_cast<std::size_t>(tau) + 1), pc(static_cast<std::size_t>(tau) + 1, dx);
          for (int j = 0; j <= tau; ++j) {
            for (std::size_t r = 0; r < dx; ++r) {
              const ExactScalar a = iota.get(r, first + j);
              if (a != 0) ic.set(r, j, a);
              const ExactScalar c = pi.get(first + j, r);
              if (c != 0) pc.set(j, r, c);
            }
          }
          y = sum(y, ic * tblk * pc);
        }
        for (std::size_t i = 0; i < p; ++i) {
          // (c_i T)_sigma [a, b] = sum_l x_l Y[(a, l), (b, i)]
          SparseMatrix ct(ds, ds);
          for (const auto& [k, v] : y.entries()) {
            if (k.second % p != i) continue;
            const std::size_t l = k.first % p;
            if (x[l] != 0) ct.add(k.first / p, k.second / p, x[l] * v);
          }
          if (ct.is_zero()) continue;
          RKElt cti;
          cti.blocks.emplace(Weight{sigma}, ct);
          const RKElt st = rk_mul(s, cti);
          if (st.is_zero()) continue;
          out = out + element(st, U_->mul(span_basis[i], U_->monomial(eta)));
        }
      }
    }
  return out;
}

RgKElt HeckeAlgebra::mul(const RgKElt& a, const RgKElt& b) const {
  RgKElt out;
  for (const auto& [m, s] : a.terms) {
    const UElt xi = U_->monomial(m);
    out = out + product_formula(s, xi, b, orbit_span_basis(xi));
  }
  return out;
}

RgKElt HeckeAlgebra::approx_identity(const Window& window) const {
  RKElt z;
  if (torus_) {
    if (window.rank() != rank_) throw std::invalid_argument("window rank differs from the rank of K");
    for (const auto& n : window.points()) z.blocks.emplace(n, SparseMatrix::identity(1));
  } else {
    for (int tau = std::max(0, window.lower.at(0)); tau <= window.upper.at(0); ++tau)
      z.blocks.emplace(Weight{tau}, SparseMatrix::identity(static_cast<std::size_t>(tau) + 1));
  }
  return element(z, U_->one());
}

bool HeckeAlgebra::supported_in(const RgKElt& x, const Window& window) const {
  for (const auto& [m, s] : x.terms)
    for (const auto& [tau, blk] : s.blocks) {
      if (!window.contains(tau)) return false;
      if (torus_ && !window.contains(tau - weight(m))) return false;
    }
  return true;
}

RgKElt rgk_mul(const HeckeAlgebra& R, const RgKElt& a, const RgKElt& b) { return R.mul(a, b); }

RgKElt approx_identity(const HeckeAlgebra& R, const Window& window) { return R.approx_identity(window); }

// ---------------------------------------------------------------------------
// Degree-0 oracle

namespace {

SparseRow to_row(const UElt& u, const std::map<PBWMonomial, std::size_t>& index) {
  SparseRow r;
  for (const auto& [m, c] : u.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::logic_error("relation leaves the truncation");
    r.emplace(it->second, c);
  }
  return r;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

GradedModule torus_oracle(const PairData& pair, const OneDimData& w, const Window& window,
                          const OracleOptions& opt) {
  const LieAlg& g = *pair.g;
  const std::size_t d = g.dim();
  const std::size_t r = pair.K.torus_rank();
  if (window.rank() != r) throw std::invalid_argument("window rank differs from the rank of K");
  if (opt.margin < 1) throw std::invalid_argument("margin must be at least 1");
  const UAlgebra U(pair.g);
  const auto& aw = pair.K.adjoint_weights;
  const auto& hb = pair.h.basis();

  // Torus coordinates whose generator lies in h: there the weight is pinned
  // to n_k - lambda(t_k) and the truncation must reach that distance.
  std::vector<std::size_t> pinned;
  std::vector<ExactScalar> omega(r, 0);
  for (std::size_t k = 0; k < r; ++k)
    if (auto c = pair.h.coordinates(pair.K.torus[k])) {
      pinned.push_back(k);
      for (std::size_t i = 0; i < c->size(); ++i) omega[k] += (*c)[i] * w.values[i];
    }
  std::vector<int> step(r, 0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < r; ++k)
      if (aw[j][k] != 0) step[k] = step[k] == 0 ? std::abs(aw[j][k]) : std::min(step[k], std::abs(aw[j][k]));
  for (std::size_t k : pinned)
    if (omega[k].get_den() != 1) throw std::logic_error("non-integral torus value on W");

  const auto points = window.points();
  auto pinned_ok = [&](const Weight& n, const Weight& wt) {
    for (std::size_t k : pinned)
      if (ExactScalar(wt[k]) != n[k] - omega[k]) return false;
    return true;
  };
  auto reach = [&](const Weight& n) {
    int deg = 0;
    for (std::size_t k : pinned) {
      const int dist = std::abs(n[k] - static_cast<int>(omega[k].get_num().get_si()));
      if (dist > 0 && step[k] == 0) return -1;
      if (dist > 0) deg += ceil_div(dist, step[k]);
    }
    return deg;
  };
  int nprime = 0;
  for (const auto& n : points) nprime = std::max(nprime, std::max(0, reach(n)));
  nprime += opt.margin;
  const int ntop = nprime + opt.margin;
  if (ntop > static_cast<int>(opt.max_degree)) throw WindowTooSmall("oracle truncation exceeds the degree bound");

  const auto monos = U.monomials_up_to(static_cast<unsigned>(ntop));
  const Weight zero(std::vector<int>(r, 0));
  std::map<PBWMonomial, std::size_t> index;
  std::vector<Weight> mono_weight;
  for (const auto& m : monos) {
    index.emplace(m, index.size());
    mono_weight.push_back(zero + monomial_weight(m, aw));
  }

  std::vector<UElt> hrel;
  for (std::size_t i = 0; i < hb.size(); ++i) hrel.push_back(U.from_lie(hb[i]) - U.one() * w.values[i]);
  // K-weights met by the terms of each h relation
  std::vector<std::set<Weight>> hrel_shifts;
  for (std::size_t i = 0; i < hb.size(); ++i) {
    std::set<Weight> sh{zero};
    for (std::size_t j = 0; j < d; ++j)
      if (hb[i][j] != 0) sh.insert(aw[j]);
    hrel_shifts.push_back(sh);
  }
  std::vector<UElt> tgen;
  for (const auto& t : pair.K.torus) tgen.push_back(U.from_lie(t));
  const bool parity = !pair.L.component_signs.empty();
  if (pair.L.component_signs.size() > 1) throw UnsupportedK("more than one component generator in L");
  const int eps = parity ? ((w.parity.value_or(0) % 2 == 0) ? 1 : -1) : 1;
  auto sign = [&](const Weight& n) { return pair.L.component_sign(0, n); };

  // u (h - lambda) and t u for every monomial u below the top degree, shared
  // by all weights.
  std::vector<std::optional<std::pair<std::vector<UElt>, std::vector<SparseRow>>>> cache(monos.size());
  auto products = [&](std::size_t a) -> const std::pair<std::vector<UElt>, std::vector<SparseRow>>& {
    if (!cache[a]) {
      const UElt um = U.monomial(monos[a]);
      std::pair<std::vector<UElt>, std::vector<SparseRow>> p;
      for (const auto& x : hrel) p.first.push_back(U.mul(um, x));
      for (const auto& t : tgen) p.second.push_back(to_row(U.mul(t, um), index));
      cache[a] = std::move(p);
    }
    return *cache[a];
  };

  struct Quotient {
    RowReducer reducer;
    std::vector<std::size_t> reps;  // monomial index of each basis vector
    std::vector<std::string> labels;
  };
  std::map<Weight, Quotient> quot;
  GradedModule out;
  out.acting = pair.g;
  out.adjoint_weights = aw;
  out.window = window;
  out.actions.resize(d);

  for (const auto& n : points) {
    Quotient q;
    if (reach(n) < 0) {
      quot.emplace(n, std::move(q));
      continue;
    }
    // A relation projected to the surviving pinned weight is again a
    // relation (h is stable under the pinned torus and lambda vanishes off
    // its zero weight), so rows are cut down to that weight class.
    auto projected = [&](const UElt& rel) {
      SparseRow row;
      for (const auto& [m, c] : rel.terms()) {
        const std::size_t col = index.at(m);
        if (pinned_ok(n, mono_weight[col])) row.emplace(col, c);
      }
      return row;
    };
    for (std::size_t a = 0; a < monos.size(); ++a) {
      const auto& u = monos[a];
      const bool low = total_degree(u) + 1 <= static_cast<unsigned>(ntop);
      if (pinned_ok(n, mono_weight[a]) && parity && sign(n) * sign(mono_weight[a]) != eps)
        q.reducer.insert(SparseRow{{a, ExactScalar(1)}});
      if (!low) continue;
      for (std::size_t i = 0; i < hrel.size(); ++i) {
        bool hit = false;
        for (const auto& sh : hrel_shifts[i]) hit = hit || pinned_ok(n, mono_weight[a] + sh);
        if (hit) q.reducer.insert(projected(products(a).first[i]));
      }
      if (!pinned_ok(n, mono_weight[a])) continue;
      for (std::size_t k = 0; k < r; ++k) {
        SparseRow row = products(a).second[k];
        if (n[k] != 0) {
          auto [it, inserted] = row.try_emplace(a, -n[k]);
          if (!inserted && (it->second -= n[k]) == 0) row.erase(it);
        }
        q.reducer.insert(std::move(row));
      }
    }
    // Monomials off the surviving pinned weight are zero in the quotient.
    for (std::size_t a = 0; a < monos.size(); ++a) {
      if (total_degree(monos[a]) > static_cast<unsigned>(nprime) || !pinned_ok(n, mono_weight[a])) continue;
      const std::size_t j = q.labels.size();
      if (q.reducer.insert(SparseRow{{a, ExactScalar(1)}}, SparseRow{{j, ExactScalar(1)}})) {
        q.reps.push_back(a);
        q.labels.push_back(U.to_string(U.monomial(monos[a])) + "*w");
      }
    }
    WeightSpace ws{q.labels.size(), q.labels, parity ? std::optional<int>(w.parity.value_or(0)) : std::nullopt};
    if (ws.dim > 0) out.spaces.emplace(n, ws);
    quot.emplace(n, std::move(q));
  }

  // Left multiplication by the basis of g, reduced in the target quotient.
  for (const auto& [n, q] : quot) {
    if (q.labels.empty()) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const Weight tgt = n + aw[i];
      if (!window.contains(tgt)) continue;
      const Quotient& qt = quot.at(tgt);
      SparseMatrix blk(qt.labels.size(), q.labels.size());
      for (std::size_t col = 0; col < q.reps.size(); ++col) {
        const UElt img = U.mul(U.generator(i), U.monomial(monos[q.reps[col]]));
        SparseRow row;
        for (const auto& [m, c] : img.terms())
          if (pinned_ok(tgt, zero + monomial_weight(m, aw))) row.emplace(index.at(m), c);
        auto [rem, tag] = qt.reducer.reduce(row);
        if (!rem.empty()) throw WindowTooSmall("oracle action does not close on the truncation at weight " + to_string(n));
        for (const auto& [j, c] : tag) blk.set(j, col, c);
      }
      if (!blk.is_zero()) out.actions[i][n] = blk;
    }
  }
  return out;
}

GradedModule sl2_oracle(const PairData& pair, const OneDimData& w, const Window& window) {
  if (!is_standard_sl2(pair)) throw UnsupportedK("K = SL2 is supported only as k = g = sl2 in the (e, h, f) basis");
  if (window.rank() != 1) throw std::invalid_argument("K-type window must have rank 1");
  GradedModule out;
  out.acting = pair.g;
  out.adjoint_weights = pair.K.adjoint_weights;
  out.window = window;
  out.ktype_graded = true;
  out.actions.resize(3);
  const auto& hb = pair.h.basis();
  for (int tau = std::max(0, window.lower[0]); tau <= window.upper[0]; ++tau) {
    // coinvariants of h on V_tau^* (x) W = dual of the lambda-eigenvectors of h in V_tau
    const std::size_t dt = static_cast<std::size_t>(tau) + 1;
    SparseMatrix stacked(dt * hb.size(), dt);
    for (std::size_t i = 0; i < hb.size(); ++i) {
      SparseMatrix m = sl2_irrep_matrix(tau, hb[i]);
      for (std::size_t a = 0; a < dt; ++a) m.add(a, a, -w.values[i]);
      for (const auto& [k, v] : m.entries()) stacked.set(i * dt + k.first, k.second, v);
    }
    const std::size_t dim = dt - rank(stacked);
    if (dim == 0) continue;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < dim; ++j) labels.push_back("V_" + std::to_string(tau) + "^*(x)w");
    out.spaces.emplace(Weight{tau}, WeightSpace{dim, labels, std::nullopt});
  }
  return out;
}

// One-dimensional factor module of a product pair.
GradedModule factor_module(const PairData& pair, const OneDimData& w, std::size_t f) {
  const PairData& fp = *pair.factors.at(f);
  Vector values(fp.h.dim(), 0);
  for (std::size_t i = 0; i < pair.h_origin.size(); ++i)
    if (pair.h_origin[i].first == f) values[pair.h_origin[i].second] = w.values[i];
  std::vector<int> lt;
  for (const auto& t : fp.L.torus) {
    const auto c = fp.h.coordinates(t);
    if (!c) throw InvalidPair("factor L torus outside h");
    ExactScalar s = 0;
    for (std::size_t i = 0; i < c->size(); ++i) s += (*c)[i] * values[i];
    lt.push_back(static_cast<int>(s.get_num().get_si()));
  }
  std::optional<int> parity;
  if (!fp.L.component_signs.empty()) parity = w.parity.value_or(0);
  return one_dim_module(fp, values, Weight(lt), parity);
}

GradedModule oracle_on_v(const PairData& pair, const GradedModule& V, const Window& window,
                         const OracleOptions& opt);

GradedModule product_oracle(const PairData& pair, const GradedModule& V, const Window& window,
                            const OracleOptions& opt) {
  if (window.rank() != 2) throw std::invalid_argument("product pairs need a rank-2 window");
  const OneDimData v = onedim_data(V);
  const GradedModule a = oracle_on_v(*pair.factors[0], factor_module(pair, v, 0),
                                     Window::interval(window.lower[0], window.upper[0]), opt);
  const GradedModule b = oracle_on_v(*pair.factors[1], factor_module(pair, v, 1),
                                     Window::interval(window.lower[1], window.upper[1]), opt);
  return external_product(a, b);
}

GradedModule oracle_on_v(const PairData& pair, const GradedModule& V, const Window& window,
                         const OracleOptions& opt) {
  if (!pair.factors.empty()) return product_oracle(pair, V, window, opt);
  const GradedModule W = tensor_onedim(V, lambda_top(pair, TopOf::GModH));
  const OneDimData w = onedim_data(W);
  if (pair.K.kind == KDescriptor::Kind::SL2) return sl2_oracle(pair, w, window);
  return torus_oracle(pair, w, window, opt);
}

}  // namespace

GradedModule p_deg0_oracle(const PairData& pair, const GradedModule& V, const Window& window,
                           const OracleOptions& options) {
  if (V.total_dim() == 0) {
    GradedModule out;
    out.acting = pair.g;
    out.adjoint_weights = pair.K.adjoint_weights;
    out.window = window;
    out.ktype_graded = pair.K.kind == KDescriptor::Kind::SL2;
    out.actions.resize(pair.g->dim());
    return out;
  }
  if (V.total_dim() != 1) throw std::invalid_argument("the oracle expects a one-dimensional (h, L)-module");
  return oracle_on_v(pair, V, window, options);
}

}  // namespace locind
