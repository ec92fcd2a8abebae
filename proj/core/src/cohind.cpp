#include "locind/cohind.hpp"

#include <algorithm>
#include <sstream>

namespace locind {

namespace {

std::optional<ExactScalar> ad_eigenvalue(const LieAlg& g, const Vector& t, const Vector& x) {
  const Vector br = g.bracket(t, x);
  std::optional<ExactScalar> ratio;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] == 0) {
      if (br[c] != 0) return std::nullopt;
      continue;
    }
    const ExactScalar r = br[c] / x[c];
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio ? ratio : ExactScalar(0);
}

int as_int(const ExactScalar& x) {
  if (x.get_den() != 1 || !x.get_num().fits_sint_p())
    throw std::invalid_argument("expected an integer, got " + x.get_str());
  return static_cast<int>(x.get_num().get_si());
}

std::size_t span_rank(const std::vector<Vector>& vs, std::size_t n) {
  SparseMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, vs[i][j]);
  return rank(m);
}

// Vectors from `candidates` extending span(base) greedily.
std::vector<Vector> extend(const std::vector<Vector>& base, const std::vector<Vector>& candidates, std::size_t n) {
  std::vector<Vector> acc = base, out;
  std::size_t r = span_rank(acc, n);
  for (const auto& v : candidates) {
    acc.push_back(v);
    const std::size_t r2 = span_rank(acc, n);
    if (r2 > r) {
      out.push_back(v);
      r = r2;
    } else {
      acc.pop_back();
    }
  }
  return out;
}

// L-torus weight of a g-vector, or throws when it is not a weight vector.
Weight l_weight(const PairData& pair, const Vector& x) {
  std::vector<int> c;
  for (const auto& t : pair.L.torus) {
    auto ev = ad_eigenvalue(*pair.g, t, x);
    if (!ev) throw InvalidPair("vector " + format_lie_element(*pair.g, x) + " is not an L-weight vector");
    c.push_back(as_int(*ev));
  }
  return Weight(c);
}

// Sign of the component generator of L acting on x through Ad.
int component_sign_of(const PairData& pair, const Vector& x) {
  if (pair.L.component_signs.empty()) return 1;
  std::optional<int> s;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    const int sj = pair.L.component_sign(0, pair.K.adjoint_weights[j]);
    if (s && *s != sj) throw InvalidPair("Ad of the component generator does not preserve the adapted basis");
    s = sj;
  }
  return s.value_or(1);
}

Weight zero_weight(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

Weight scaled(const Weight& w, unsigned k) {
  Weight r = w;
  for (auto& c : r.coords) c *= static_cast<int>(k);
  return r;
}

int l1(const Weight& w) {
  int s = 0;
  for (int c : w.coords) s += std::abs(c);
  return s;
}

// All exponent vectors of length `len` with total <= bound.
std::vector<std::vector<unsigned>> exponents_up_to(std::size_t len, unsigned bound) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(len, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned budget) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
      cur[pos] = e;
      self(self, pos + 1, budget - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

unsigned total(const std::vector<unsigned>& v) {
  unsigned t = 0;
  for (unsigned x : v) t += x;
  return t;
}

// Shared data for the boundary formula: the complement m of l in h, the
// character of W on h, and brackets in the (m, l) basis.
struct HData {
  std::size_t nm = 0, nl = 0;
  std::vector<Vector> m_vecs, l_vecs;
  std::shared_ptr<const LieAlg> hm;  // h in the ordered basis (m, l)
  std::unique_ptr<UAlgebra> uh;
  Vector lambda;                             // W's character in the (m, l) basis
  std::vector<std::vector<ExactScalar>> ev;  // ev[k][i] = eigenvalue of ad(l_k) on m_i
  std::vector<Weight> m_lweights;
  std::vector<std::string> m_labels;
};

HData make_hdata(const PairData& pair, const OneDimData& w) {
  HData d;
  d.nl = pair.l_dim;
  d.nm = pair.h.dim() - pair.l_dim;
  const auto& hb = pair.h.basis();
  for (std::size_t i = 0; i < d.nl; ++i) d.l_vecs.push_back(hb[i]);
  for (std::size_t i = d.nl; i < hb.size(); ++i) d.m_vecs.push_back(hb[i]);
  std::vector<Vector> ordered = d.m_vecs;
  ordered.insert(ordered.end(), d.l_vecs.begin(), d.l_vecs.end());
  std::vector<std::string> labels;
  for (const auto& v : ordered) labels.push_back(format_lie_element(*pair.g, v));
  d.m_labels.assign(labels.begin(), labels.begin() + static_cast<long>(d.nm));
  d.hm = std::make_shared<const LieAlg>(Subalg(pair.g, ordered).as_lie_algebra(labels));
  d.uh = std::make_unique<UAlgebra>(d.hm);
  d.lambda.assign(pair.h.dim(), 0);
  for (std::size_t i = 0; i < d.nm; ++i) d.lambda[i] = w.values[d.nl + i];
  for (std::size_t k = 0; k < d.nl; ++k) d.lambda[d.nm + k] = w.values[k];
  d.ev.assign(d.nl, std::vector<ExactScalar>(d.nm, 0));
  for (std::size_t k = 0; k < d.nl; ++k)
    for (std::size_t i = 0; i < d.nm; ++i) {
      auto e = ad_eigenvalue(*pair.g, d.l_vecs[k], d.m_vecs[i]);
      if (!e) throw InvalidPair("complement of l in h is not made of ad(l)-weight vectors");
      d.ev[k][i] = *e;
    }
  for (const auto& v : d.m_vecs) d.m_lweights.push_back(l_weight(pair, v));
  return d;
}

// Scalar by which l^delta acts on xi_I (x) w from the right.
ExactScalar l_scalar(const HData& d, const std::vector<unsigned>& delta, const std::vector<std::size_t>& wedge) {
  ExactScalar r = 1;
  for (std::size_t k = 0; k < d.nl; ++k) {
    if (delta[k] == 0) continue;
    ExactScalar s = d.lambda[d.nm + k];
    for (std::size_t i : wedge) s += d.ev[k][i];
    for (unsigned e = 0; e < delta[k]; ++e) r *= s;
  }
  return r;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& v, std::size_t pos) {
  std::vector<std::size_t> r = v;
  r.erase(r.begin() + static_cast<long>(pos));
  return r;
}

using Column = std::map<ChainKey, ExactScalar>;

void add_to(Column& col, const ChainKey& k, const ExactScalar& c) {
  if (c == 0) return;
  auto [it, inserted] = col.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) col.erase(it);
  }
}

// The bracket term of the boundary: sum_{p<q} (-1)^{p+q} D (x) [xi_p, xi_q]^ ^ ... (x) w.
void bracket_terms(const HData& d, const ChainKey& key, Column& col) {
  const auto& I = key.wedge;
  for (std::size_t p = 0; p < I.size(); ++p)
    for (std::size_t q = p + 1; q < I.size(); ++q) {
      const ExactScalar sign = ((p + q) % 2 == 0) ? 1 : -1;
      const Vector& br = d.hm->bracket_basis(I[p], I[q]);
      std::vector<std::size_t> rest;
      for (std::size_t r = 0; r < I.size(); ++r)
        if (r != p && r != q) rest.push_back(I[r]);
      for (std::size_t r = 0; r < d.nm; ++r) {
        if (br[r] == 0 || std::count(rest.begin(), rest.end(), r)) continue;
        std::size_t below = 0;
        for (std::size_t x : rest) below += (x < r);
        std::vector<std::size_t> wedge = rest;
        wedge.push_back(r);
        std::sort(wedge.begin(), wedge.end());
        ChainKey t = key;
        t.wedge = wedge;
        add_to(col, t, sign * br[r] * ((below % 2 == 0) ? 1 : -1));
      }
    }
}

SparseMatrix assemble(const std::vector<ChainKey>& src, const std::vector<ChainKey>& tgt,
                      const std::vector<Column>& columns, const Weight& n) {
  std::map<ChainKey, std::size_t> index;
  for (std::size_t i = 0; i < tgt.size(); ++i) index.emplace(tgt[i], i);
  SparseMatrix m(tgt.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [k, v] : columns[j]) {
      auto it = index.find(k);
      if (it == index.end())
        throw std::logic_error("boundary leaves the truncated complex at weight " + to_string(n));
      m.set(it->second, j, v);
    }
  return m;
}

// ---------------------------------------------------------------------------

StdComplex build_torus(const PairData& pair, const OneDimData& w, const Window& window, const ComplexOptions& opt) {
  const LieAlg& g = *pair.g;
  const std::size_t n_g = g.dim();
  HData d = make_hdata(pair, w);

  // Adapted basis: t' (torus complement of l), c (complement of t + h), m, l.
  std::vector<Vector> t_prime = extend(d.l_vecs, pair.K.torus, n_g);
  std::vector<Vector> th = pair.K.torus;
  th.insert(th.end(), pair.h.basis().begin(), pair.h.basis().end());
  std::vector<Vector> g_basis;
  for (std::size_t i = 0; i < n_g; ++i) g_basis.push_back(g.basis_vector(i));
  std::vector<Vector> c_vecs = extend(th, g_basis, n_g);
  if (t_prime.size() + c_vecs.size() + pair.h.dim() != n_g)
    throw InvalidPair("torus complement, weight complement and h do not span g");

  StdComplex cx;
  cx.family = pair.family;
  cx.top_degree = d.nm;
  cx.window = window;
  cx.margin = opt.margin;
  cx.m_labels = d.m_labels;
  for (const auto& v : c_vecs) cx.c_labels.push_back(format_lie_element(g, v));

  const std::size_t lrank = pair.L.torus_rank();
  std::vector<Weight> c_lw;
  for (const auto& v : c_vecs) {
    c_lw.push_back(l_weight(pair, v));
    if (l1(c_lw.back()) == 0)
      throw std::domain_error("complement direction " + format_lie_element(g, v) +
                              " has zero L-weight: isotypic components are infinite");
  }

  // Restriction of K-weights to l: L torus in K torus coordinates.
  SparseMatrix kcols(n_g, pair.K.torus.size());
  for (std::size_t j = 0; j < pair.K.torus.size(); ++j)
    for (std::size_t i = 0; i < n_g; ++i) kcols.set(i, j, pair.K.torus[j][i]);
  std::vector<Vector> restriction;
  for (const auto& t : pair.L.torus) {
    auto coords = solve(kcols, t);
    if (!coords) throw InvalidPair("L torus is not inside the K torus");
    restriction.push_back(*coords);
  }
  auto restrict_l = [&](const Weight& n) {
    std::vector<int> r;
    for (const auto& row : restriction) {
      ExactScalar s = 0;
      for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * n[j];
      r.push_back(as_int(s));
    }
    return Weight(r);
  };

  const bool parity = !pair.L.component_signs.empty();
  cx.parity_constrained = parity;
  if (parity) cx.parity = w.parity.value_or(0);
  std::vector<int> c_sign, m_sign;
  for (const auto& v : c_vecs) c_sign.push_back(component_sign_of(pair, v));
  for (const auto& v : d.m_vecs) m_sign.push_back(component_sign_of(pair, v));

  if (opt.margin < 1) throw std::invalid_argument("margin must be at least 1");
  const std::vector<Weight> points = window.points();
  const Weight omega_l = w.weight;
  unsigned depth_m = static_cast<unsigned>(d.nm) + static_cast<unsigned>(opt.margin);
  int need = 0;
  int max_m = 0;
  for (const auto& mw : d.m_lweights) max_m = std::max(max_m, l1(mw));
  for (const auto& n : points) need = std::max(need, l1(restrict_l(n) - omega_l));
  need += static_cast<int>(depth_m) * max_m;
  unsigned depth_c = 0;
  if (!c_vecs.empty()) {
    int min_c = l1(c_lw[0]);
    for (const auto& cw : c_lw) min_c = std::min(min_c, l1(cw));
    depth_c = static_cast<unsigned>(opt.margin + (need + min_c - 1) / min_c);
  }
  if (depth_c > opt.max_depth || depth_m > opt.max_depth)
    throw WindowTooSmall("dependency cone exceeds the maximal truncation depth");
  cx.depth_c = depth_c;
  cx.depth_m = depth_m;

  // beta grouped by L-weight
  std::map<Weight, std::vector<std::vector<unsigned>>> betas;
  for (auto& beta : exponents_up_to(c_vecs.size(), depth_c)) {
    Weight bw = zero_weight(lrank);
    for (std::size_t i = 0; i < beta.size(); ++i) bw = bw + scaled(c_lw[i], beta[i]);
    betas[bw].push_back(beta);
  }
  auto beta_sign = [&](const std::vector<unsigned>& beta) {
    int s = 1;
    for (std::size_t i = 0; i < beta.size(); ++i)
      if (beta[i] % 2) s *= c_sign[i];
    return s;
  };

  struct Shape {
    std::vector<unsigned> gamma;
    std::vector<std::size_t> wedge;
    Weight lw;
    int sign;
  };
  std::vector<std::vector<Shape>> shapes(d.nm + 1);
  const auto all_subsets = subsets(d.nm);
  for (auto& gamma : exponents_up_to(d.nm, depth_m))
    for (const auto& I : all_subsets) {
      if (total(gamma) + I.size() > depth_m) continue;
      Weight lw = zero_weight(lrank);
      int s = 1;
      for (std::size_t i = 0; i < d.nm; ++i) {
        lw = lw + scaled(d.m_lweights[i], gamma[i]);
        if (gamma[i] % 2) s *= m_sign[i];
      }
      for (std::size_t i : I) {
        lw = lw + d.m_lweights[i];
        s *= m_sign[i];
      }
      shapes[I.size()].push_back(Shape{gamma, I, lw, s});
    }

  const int eps = (parity && cx.parity.value_or(0) % 2) ? -1 : 1;
  for (const auto& n : points) {
    const Weight rn = restrict_l(n);
    const int sign_n = parity ? pair.L.component_sign(0, n) : 1;
    WeightBlock blk;
    blk.basis.resize(d.nm + 1);
    for (std::size_t deg = 0; deg <= d.nm; ++deg) {
      for (const auto& sh : shapes[deg]) {
        auto it = betas.find(rn - omega_l - sh.lw);
        if (it == betas.end()) continue;
        for (const auto& beta : it->second) {
          if (parity && sign_n * beta_sign(beta) * sh.sign != eps) continue;
          blk.basis[deg].push_back(ChainKey{beta, sh.gamma, sh.wedge});
        }
      }
      std::sort(blk.basis[deg].begin(), blk.basis[deg].end());
    }
    blk.boundary.push_back(SparseMatrix(0, blk.basis[0].size()));
    for (std::size_t deg = 1; deg <= d.nm; ++deg) {
      std::vector<Column> cols;
      for (const auto& key : blk.basis[deg]) {
        Column col;
        PBWMonomial mono(d.nm + d.nl, 0);
        for (std::size_t i = 0; i < d.nm; ++i) mono[i] = key.gamma[i];
        for (std::size_t p = 0; p < key.wedge.size(); ++p) {
          const ExactScalar s = (opt.corrupt_sign || p % 2 == 0) ? 1 : -1;
          const std::size_t xi = key.wedge[p];
          const auto rest = without(key.wedge, p);
          const UElt prod = d.uh->mul(d.uh->monomial(mono), d.uh->generator(xi));
          for (const auto& [pm, coef] : prod.terms()) {
            std::vector<unsigned> gamma(pm.begin(), pm.begin() + static_cast<long>(d.nm));
            std::vector<unsigned> delta(pm.begin() + static_cast<long>(d.nm), pm.end());
            add_to(col, ChainKey{key.beta, gamma, rest}, s * coef * l_scalar(d, delta, rest));
          }
          add_to(col, ChainKey{key.beta, key.gamma, rest}, -s * d.lambda[xi]);
        }
        bracket_terms(d, key, col);
        cols.push_back(std::move(col));
      }
      blk.boundary.push_back(assemble(blk.basis[deg], blk.basis[deg - 1], cols, n));
    }
    cx.blocks.emplace(n, std::move(blk));
  }
  return cx;
}

// Right action of a g-vector x = (a, b, c) on v_k^* in V_n^*, with the basis
// h v_j = (n-2j) v_j, f v_j = v_{j+1}, e v_j = j(n-j+1) v_{j-1}.
std::vector<std::pair<int, ExactScalar>> dual_right_action(int n, int k, const Vector& x) {
  std::vector<std::pair<int, ExactScalar>> out;
  if (x[0] != 0 && k + 1 <= n) out.emplace_back(k + 1, x[0] * (k + 1) * (n - k));
  if (x[1] != 0) out.emplace_back(k, x[1] * (n - 2 * k));
  if (x[2] != 0 && k >= 1) out.emplace_back(k - 1, x[2]);
  return out;
}

StdComplex build_sl2(const PairData& pair, const OneDimData& w, const Window& window, const ComplexOptions& opt) {
  if (pair.g->labels() != std::vector<std::string>{"e", "h", "f"})
    throw InvalidPair("K = SL2 requires g = sl2 in the (e, h, f) basis");
  if (pair.L.torus.size() != 1 || pair.L.torus[0] != Vector{0, 1, 0})
    throw InvalidPair("K = SL2 requires L = diagonal torus");
  if (window.rank() != 1) throw std::invalid_argument("K-type window must have rank 1");
  if (opt.margin < 1) throw std::invalid_argument("margin must be at least 1");
  HData d = make_hdata(pair, w);
  StdComplex cx;
  cx.family = pair.family;
  cx.top_degree = d.nm;
  cx.ktype_graded = true;
  cx.window = window;
  cx.margin = opt.margin;
  cx.m_labels = d.m_labels;
  const int omega = w.weight[0];
  const auto all_subsets = subsets(d.nm);
  for (int n = std::max(0, window.lower[0]); n <= window.upper[0]; ++n) {
    WeightBlock blk;
    blk.basis.resize(d.nm + 1);
    for (const auto& I : all_subsets) {
      int lw = omega;
      for (std::size_t i : I) lw += d.m_lweights[i][0];
      if ((n - lw) % 2 != 0) continue;
      const int k = (n - lw) / 2;
      if (k < 0 || k > n) continue;
      blk.basis[I.size()].push_back(ChainKey{{}, {static_cast<unsigned>(k)}, I});
    }
    for (auto& b : blk.basis) std::sort(b.begin(), b.end());
    blk.boundary.push_back(SparseMatrix(0, blk.basis[0].size()));
    for (std::size_t deg = 1; deg <= d.nm; ++deg) {
      std::vector<Column> cols;
      for (const auto& key : blk.basis[deg]) {
        Column col;
        const int k = static_cast<int>(key.gamma[0]);
        for (std::size_t p = 0; p < key.wedge.size(); ++p) {
          const ExactScalar s = (opt.corrupt_sign || p % 2 == 0) ? 1 : -1;
          const std::size_t xi = key.wedge[p];
          const auto rest = without(key.wedge, p);
          for (const auto& [k2, coef] : dual_right_action(n, k, d.m_vecs[xi]))
            add_to(col, ChainKey{{}, {static_cast<unsigned>(k2)}, rest}, s * coef);
          add_to(col, ChainKey{{}, key.gamma, rest}, -s * d.lambda[xi]);
        }
        bracket_terms(d, key, col);
        cols.push_back(std::move(col));
      }
      blk.boundary.push_back(assemble(blk.basis[deg], blk.basis[deg - 1], cols, Weight{n}));
    }
    cx.blocks.emplace(Weight{n}, std::move(blk));
  }
  return cx;
}

}  // namespace

// ---------------------------------------------------------------------------

Character StdComplex::term_character(std::size_t d) const {
  Character c;
  c.ktypes = ktype_graded;
  for (const auto& [w, blk] : blocks)
    if (d < blk.basis.size()) c.add(w, static_cast<long>(blk.basis[d].size()), parity);
  return c;
}

Character StdComplex::homology(std::size_t j) const {
  Character c;
  c.ktypes = ktype_graded;
  if (j > top_degree) return c;
  for (const auto& [w, blk] : blocks) {
    const SparseMatrix& out = blk.boundary[j];
    const SparseMatrix in = (j + 1 <= top_degree) ? blk.boundary[j + 1] : SparseMatrix(blk.basis[j].size(), 0);
    c.add(w, static_cast<long>(homology_dim(out, in)), parity);
  }
  return c;
}

std::optional<std::pair<Weight, std::size_t>> StdComplex::d_squared_failure() const {
  for (const auto& [w, blk] : blocks)
    for (std::size_t d = 2; d < blk.boundary.size(); ++d)
      if (!(blk.boundary[d - 1] * blk.boundary[d]).is_zero()) return std::make_pair(w, d);
  return std::nullopt;
}

std::string StdComplex::describe_key(const ChainKey& k) const {
  std::ostringstream os;
  if (ktype_graded) {
    os << "v" << k.gamma.at(0) << "*";
  } else {
    bool any = false;
    auto power = [&](const std::string& label, unsigned e) {
      if (e == 0) return;
      if (any) os << " ";
      os << label;
      if (e > 1) os << "^" << e;
      any = true;
    };
    for (std::size_t i = 0; i < k.beta.size(); ++i) power(c_labels[i], k.beta[i]);
    for (std::size_t i = 0; i < k.gamma.size(); ++i) power("(" + m_labels[i] + ")", k.gamma[i]);
    if (!any) os << "1";
  }
  os << " (x) ";
  if (k.wedge.empty()) os << "1";
  for (std::size_t i = 0; i < k.wedge.size(); ++i) os << (i ? "^" : "") << "[" << m_labels[k.wedge[i]] << "]";
  os << " (x) w";
  return os.str();
}

StdComplex build_standard_complex(const PairData& pair, const GradedModule& V, const Window& window,
                                  const ComplexOptions& options) {
  const GradedModule W = tensor_onedim(V, lambda_top(pair, TopOf::GModH));
  const OneDimData w = onedim_data(W);
  pair.check_character(w.values);
  if (pair.K.kind == KDescriptor::Kind::SL2) return build_sl2(pair, w, window, options);
  return build_torus(pair, w, window, options);
}

Character derived_p(const PairData& pair, const GradedModule& V, std::size_t j, const Window& window,
                    const ComplexOptions& options) {
  return build_standard_complex(pair, V, window, options).homology(j);
}

Character derived_i(const PairData& pair, const GradedModule& V, std::size_t j, const Window& window,
                    const ComplexOptions& options) {
  const Window dual_window = pair.K.kind == KDescriptor::Kind::SL2 ? window : window.negated();
  return negate_weights(derived_p(pair, dual_module(V), j, dual_window, options));
}

Character euler_characteristic(const StdComplex& c) {
  Character e;
  e.ktypes = c.ktype_graded;
  for (std::size_t d = 0; d <= c.top_degree; ++d) e = (d % 2 == 0) ? e + c.term_character(d) : e - c.term_character(d);
  return e;
}

Character homology_euler_characteristic(const StdComplex& c) {
  Character e;
  e.ktypes = c.ktype_graded;
  for (std::size_t j = 0; j <= c.top_degree; ++j) e = (j % 2 == 0) ? e + c.homology(j) : e - c.homology(j);
  return e;
}

bool homology_stable(const PairData& pair, const GradedModule& V, const Window& window,
                     const ComplexOptions& options) {
  ComplexOptions wider = options;
  wider.margin = options.margin + 1;
  const StdComplex a = build_standard_complex(pair, V, window, options);
  const StdComplex b = build_standard_complex(pair, V, window, wider);
  for (std::size_t j = 0; j <= a.top_degree; ++j)
    if (!(a.homology(j) == b.homology(j))) return false;
  return true;
}

}  // namespace locind
