#include "locind/gkmod.hpp"

#include "json.hpp"

#include <set>
#include <sstream>

namespace locind {

Window::Window(std::vector<int> lo, std::vector<int> hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) throw std::invalid_argument("window bounds have different ranks");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) throw std::invalid_argument("window lower bound exceeds upper bound");
}

Window Window::box(std::size_t rank, int lo, int hi) {
  return Window(std::vector<int>(rank, lo), std::vector<int>(rank, hi));
}

bool Window::contains(const Weight& w) const {
  if (w.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (w[i] < lower[i] || w[i] > upper[i]) return false;
  return true;
}

Window Window::expanded(int margin) const {
  Window r = *this;
  for (auto& l : r.lower) l -= margin;
  for (auto& u : r.upper) u += margin;
  return r;
}

Window Window::negated() const {
  Window r;
  for (std::size_t i = 0; i < rank(); ++i) {
    r.lower.push_back(-upper[i]);
    r.upper.push_back(-lower[i]);
  }
  return r;
}

Window Window::product(const Window& other) const {
  Window r = *this;
  r.lower.insert(r.lower.end(), other.lower.begin(), other.lower.end());
  r.upper.insert(r.upper.end(), other.upper.begin(), other.upper.end());
  return r;
}

std::vector<Weight> Window::points(int step, int residue) const {
  std::vector<Weight> out;
  std::vector<int> cur(rank());
  auto congruent = [&](int x) { return ((x - residue) % step + step) % step == 0; };
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == rank()) {
      out.emplace_back(cur);
      return;
    }
    for (int x = lower[pos]; x <= upper[pos]; ++x) {
      if (!congruent(x)) continue;
      cur[pos] = x;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::string to_string(const Window& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.rank(); ++i) os << (i ? " x " : "") << '[' << w.lower[i] << ':' << w.upper[i] << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

void Character::add(const Weight& w, long m, std::optional<int> parity) {
  if (m == 0) return;
  if (parity) parities[w] = *parity;
  auto [it, inserted] = multiplicities.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) {
      multiplicities.erase(it);
      parities.erase(w);
    }
  }
}

long Character::multiplicity(const Weight& w) const {
  auto it = multiplicities.find(w);
  return it == multiplicities.end() ? 0 : it->second;
}

long Character::total() const {
  long t = 0;
  for (const auto& [w, m] : multiplicities) t += m;
  return t;
}

Character Character::restricted(const Window& window) const {
  Character r;
  r.ktypes = ktypes;
  for (const auto& [w, m] : multiplicities)
    if (window.contains(w)) {
      r.multiplicities.emplace(w, m);
      if (auto it = parities.find(w); it != parities.end()) r.parities.emplace(w, it->second);
    }
  return r;
}

Character Character::operator+(const Character& o) const {
  Character r = *this;
  for (const auto& [w, m] : o.multiplicities) {
    auto it = o.parities.find(w);
    r.add(w, m, it == o.parities.end() ? std::nullopt : std::optional<int>(it->second));
  }
  // Drop labels of weights that cancelled.
  for (auto it = r.parities.begin(); it != r.parities.end();)
    it = r.multiplicities.count(it->first) ? std::next(it) : r.parities.erase(it);
  return r;
}

Character Character::operator-(const Character& o) const {
  Character neg = o;
  for (auto& [w, m] : neg.multiplicities) m = -m;
  return *this + neg;
}

Character negate_weights(const Character& c) {
  if (c.ktypes) return c;
  Character r;
  for (const auto& [w, m] : c.multiplicities) r.multiplicities.emplace(-w, m);
  for (const auto& [w, p] : c.parities) r.parities.emplace(-w, p);
  return r;
}

std::optional<Weight> first_difference(const Character& a, const Character& b) {
  auto ia = a.multiplicities.begin(), ib = b.multiplicities.begin();
  while (ia != a.multiplicities.end() || ib != b.multiplicities.end()) {
    if (ib == b.multiplicities.end() || (ia != a.multiplicities.end() && ia->first < ib->first))
      return ia->first;
    if (ia == a.multiplicities.end() || ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    auto pa = a.parities.find(ia->first), pb = b.parities.find(ib->first);
    const bool la = pa != a.parities.end(), lb = pb != b.parities.end();
    if (la && lb && pa->second != pb->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

Character peel_sl2(const Character& weights) {
  Character rest = weights;
  Character out;
  out.ktypes = true;
  while (!rest.empty()) {
    const auto [top, m] = *rest.multiplicities.rbegin();
    if (top.rank() != 1 || top[0] < 0)
      throw std::invalid_argument("character is not a sum of SL2 K-types (stray weight " + to_string(top) + ")");
    out.add(top, m);
    for (int w = top[0]; w >= -top[0]; w -= 2) rest.add(Weight{w}, -m);
  }
  return out;
}

Character expand_sl2(const Character& ktypes) {
  Character out;
  for (const auto& [n, m] : ktypes.multiplicities)
    for (int w = n[0]; w >= -n[0]; w -= 2) out.add(Weight{w}, m);
  return out;
}

std::string character_json(const Character& c) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [w, m] : c.multiplicities) {
    nlohmann::ordered_json e;
    e["weight"] = w.coords;
    e["multiplicity"] = m;
    if (auto it = c.parities.find(w); it != c.parities.end()) e["parity"] = it->second;
    arr.push_back(e);
  }
  return arr.dump();
}

// ---------------------------------------------------------------------------

std::size_t GradedModule::dim_at(const Weight& w) const {
  auto it = spaces.find(w);
  return it == spaces.end() ? 0 : it->second.dim;
}

SparseMatrix GradedModule::block(std::size_t i, const Weight& mu) const {
  const auto& blocks = actions.at(i);
  auto it = blocks.find(mu);
  if (it != blocks.end()) return it->second;
  return SparseMatrix(dim_at(mu + adjoint_weights.at(i)), dim_at(mu));
}

Vector GradedModule::act(std::size_t i, const Weight& mu, const Vector& v) const {
  return block(i, mu).apply(v);
}

std::size_t GradedModule::total_dim() const {
  std::size_t d = 0;
  for (const auto& [w, s] : spaces) d += s.dim;
  return d;
}

OneDimData onedim_data(const GradedModule& m) {
  if (m.spaces.size() != 1 || m.spaces.begin()->second.dim != 1)
    throw std::invalid_argument("module is not one-dimensional");
  OneDimData d;
  d.weight = m.spaces.begin()->first;
  d.parity = m.spaces.begin()->second.parity;
  d.values.assign(m.actions.size(), 0);
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    if (m.adjoint_weights[i].is_zero()) d.values[i] = m.block(i, d.weight).get(0, 0);
  return d;
}

namespace {

// Eigenvalue of ad(t) on x, or nullopt when x is not an eigenvector.
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

int to_int(const ExactScalar& x) {
  if (x.get_den() != 1 || !x.get_num().fits_sint_p())
    throw std::invalid_argument("expected an integer weight, got " + x.get_str());
  return static_cast<int>(x.get_num().get_si());
}

std::vector<std::string> h_labels(const PairData& pair) {
  std::vector<std::string> labels;
  for (const auto& v : pair.h.basis()) labels.push_back(format_lie_element(*pair.g, v));
  return labels;
}

// L-torus weights of the h basis vectors.
std::vector<Weight> h_weights(const PairData& pair) {
  std::vector<Weight> out;
  for (const auto& x : pair.h.basis()) {
    std::vector<int> c;
    for (const auto& t : pair.L.torus) {
      auto ev = ad_eigenvalue(*pair.g, t, x);
      if (!ev) throw InvalidPair("h basis vector is not an L-weight vector");
      c.push_back(to_int(*ev));
    }
    out.emplace_back(c);
  }
  return out;
}

// Complement of span(sub) inside span(ambient_basis), greedily from ambient_basis.
std::vector<Vector> complement(const std::vector<Vector>& sub, const std::vector<Vector>& ambient_basis,
                               std::size_t n) {
  std::vector<Vector> acc = sub, out;
  auto span_rank = [&](const std::vector<Vector>& vs) {
    SparseMatrix m(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, vs[i][j]);
    return rank(m);
  };
  std::size_t r = span_rank(acc);
  for (const auto& v : ambient_basis) {
    acc.push_back(v);
    const std::size_t r2 = span_rank(acc);
    if (r2 > r) {
      out.push_back(v);
      r = r2;
    } else {
      acc.pop_back();
    }
  }
  return out;
}

// Trace of ad(x) on span(sub + comp)/span(sub), where both sub and the full
// space are ad(x)-stable.
ExactScalar quotient_trace(const LieAlg& g, const Vector& x, const std::vector<Vector>& sub,
                           const std::vector<Vector>& comp) {
  const std::size_t n = g.dim();
  std::vector<Vector> basis = sub;
  basis.insert(basis.end(), comp.begin(), comp.end());
  SparseMatrix cols(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) cols.set(i, j, basis[j][i]);
  ExactScalar tr = 0;
  for (std::size_t a = 0; a < comp.size(); ++a) {
    auto coords = solve(cols, g.bracket(x, comp[a]));
    if (!coords) throw InvalidPair("quotient is not stable under the adjoint action");
    tr += (*coords)[sub.size() + a];
  }
  return tr;
}

// Sign (0 = +1, 1 = -1) of det Ad(m) on span(sub + comp)/span(sub), m being the
// order-two component generator acting diagonally on g's weight basis.
int quotient_parity(const PairData& pair, const std::vector<Vector>& sub, const std::vector<Vector>& comp) {
  if (pair.L.component_signs.empty()) return 0;
  const std::size_t n = pair.g->dim();
  auto sign_of = [&](std::size_t j) { return pair.L.component_sign(0, pair.K.adjoint_weights[j]); };
  auto minus_one_dim = [&](const std::vector<Vector>& vs) {
    // dim of the (-1)-eigenspace of Ad(m) on span(vs) = dim span - rank(A + I)|span.
    if (vs.empty()) return std::size_t{0};
    SparseMatrix img(vs.size(), n);
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t j = 0; j < n; ++j) img.set(a, j, vs[a][j] * (sign_of(j) + 1));
    return vs.size() - rank(img);
  };
  std::vector<Vector> all = sub;
  all.insert(all.end(), comp.begin(), comp.end());
  return static_cast<int>((minus_one_dim(all) - minus_one_dim(sub)) % 2);
}

std::optional<int> add_parity(std::optional<int> a, std::optional<int> b) {
  if (!a && !b) return std::nullopt;
  return (a.value_or(0) + b.value_or(0)) % 2;
}

Weight concat(const Weight& a, const Weight& b) {
  std::vector<int> c = a.coords;
  c.insert(c.end(), b.coords.begin(), b.coords.end());
  return Weight(c);
}

}  // namespace

GradedModule one_dim_module(const PairData& pair, const Vector& lambda, const Weight& ltype,
                            std::optional<int> parity) {
  pair.check_character(lambda);
  if (ltype.rank() != pair.L.torus_rank()) throw std::invalid_argument("L-type has wrong rank");
  for (std::size_t k = 0; k < pair.L.torus.size(); ++k) {
    auto coords = pair.h.coordinates(pair.L.torus[k]);
    if (!coords) throw InvalidPair("L torus is not inside h");
    ExactScalar v = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) v += lambda[i] * (*coords)[i];
    if (v != ltype[k])
      throw NonInvariantCharacter("the differential of the L-type does not match lambda on Lie(L)");
  }
  if (!pair.L.component_signs.empty() && !parity) parity = 0;
  if (pair.L.component_signs.empty()) parity.reset();

  GradedModule m;
  m.acting = std::make_shared<const LieAlg>(pair.h.as_lie_algebra(h_labels(pair)));
  m.adjoint_weights = h_weights(pair);
  m.window = Window(ltype.coords, ltype.coords);
  m.spaces[ltype] = WeightSpace{1, {"v"}, parity};
  m.actions.resize(pair.h.dim());
  for (std::size_t i = 0; i < pair.h.dim(); ++i)
    if (m.adjoint_weights[i].is_zero()) {
      SparseMatrix b(1, 1);
      b.set(0, 0, lambda[i]);
      m.actions[i].emplace(ltype, b);
    }
  return m;
}

GradedModule lambda_top(const PairData& pair, TopOf which) {
  const LieAlg& g = *pair.g;
  const std::size_t n = g.dim();
  std::vector<Vector> g_basis;
  for (std::size_t i = 0; i < n; ++i) g_basis.push_back(g.basis_vector(i));
  GradedModule m;
  std::vector<Vector> acting_basis, sub, comp;
  if (which == TopOf::GModH) {
    acting_basis = pair.h.basis();
    sub = pair.h.basis();
    comp = complement(sub, g_basis, n);
    m.acting = std::make_shared<const LieAlg>(pair.h.as_lie_algebra(h_labels(pair)));
    m.adjoint_weights = h_weights(pair);
  } else {
    acting_basis = pair.L.embedding;
    sub = pair.L.embedding;
    comp = complement(sub, pair.K.embedding, n);
    std::vector<std::string> labels;
    for (const auto& v : acting_basis) labels.push_back(format_lie_element(g, v));
    m.acting = std::make_shared<const LieAlg>(Subalg(pair.g, acting_basis).as_lie_algebra(labels));
    m.adjoint_weights.assign(acting_basis.size(), Weight(std::vector<int>(pair.L.torus_rank(), 0)));
  }
  std::vector<int> w;
  for (const auto& t : pair.L.torus) w.push_back(to_int(quotient_trace(g, t, sub, comp)));
  const Weight weight(w);
  std::optional<int> parity;
  if (!pair.L.component_signs.empty()) parity = quotient_parity(pair, sub, comp);
  m.window = Window(w, w);
  m.spaces[weight] = WeightSpace{1, {"top"}, parity};
  m.actions.resize(acting_basis.size());
  for (std::size_t i = 0; i < acting_basis.size(); ++i)
    if (m.adjoint_weights[i].is_zero()) {
      SparseMatrix b(1, 1);
      b.set(0, 0, quotient_trace(g, acting_basis[i], sub, comp));
      m.actions[i].emplace(weight, b);
    }
  return m;
}

GradedModule dual_module(const GradedModule& m) {
  GradedModule d;
  d.acting = m.acting;
  d.adjoint_weights = m.adjoint_weights;
  d.window = m.window.negated();
  d.ktype_graded = m.ktype_graded;
  for (const auto& [w, s] : m.spaces) {
    WeightSpace ds = s;
    for (auto& l : ds.labels) l += "*";
    d.spaces.emplace(m.ktype_graded ? w : -w, ds);
  }
  d.actions.resize(m.actions.size());
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    for (const auto& [mu, b] : m.actions[i]) d.actions[i].emplace(-(mu + m.adjoint_weights[i]), -b.transpose());
  return d;
}

GradedModule tensor_onedim(const GradedModule& m, const GradedModule& t) {
  const OneDimData od = onedim_data(t);
  if (t.actions.size() != m.actions.size())
    throw std::invalid_argument("tensor_onedim: modules are over different algebras");
  GradedModule r;
  r.acting = m.acting;
  r.adjoint_weights = m.adjoint_weights;
  r.ktype_graded = m.ktype_graded;
  r.window = m.window;
  if (od.weight.rank() == m.window.rank())
    for (std::size_t i = 0; i < od.weight.rank(); ++i) {
      r.window.lower[i] += od.weight[i];
      r.window.upper[i] += od.weight[i];
    }
  for (const auto& [w, s] : m.spaces) {
    WeightSpace ns = s;
    ns.parity = add_parity(s.parity, od.parity);
    r.spaces.emplace(w + od.weight, ns);
  }
  r.actions.resize(m.actions.size());
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    for (const auto& [mu, b] : m.actions[i]) r.actions[i].emplace(mu + od.weight, b);
    if (m.adjoint_weights[i].is_zero() && od.values[i] != 0)
      for (const auto& [w, s] : m.spaces) {
        const Weight nw = w + od.weight;
        SparseMatrix b = r.block(i, nw);
        for (std::size_t k = 0; k < s.dim; ++k) b.add(k, k, od.values[i]);
        r.actions[i][nw] = b;
      }
  }
  return r;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  if (a.actions.size() != b.actions.size()) throw std::invalid_argument("direct_sum: different algebras");
  GradedModule r;
  r.acting = a.acting;
  r.adjoint_weights = a.adjoint_weights;
  r.ktype_graded = a.ktype_graded;
  r.window = a.window;
  for (std::size_t i = 0; i < r.window.rank() && i < b.window.rank(); ++i) {
    r.window.lower[i] = std::min(a.window.lower[i], b.window.lower[i]);
    r.window.upper[i] = std::max(a.window.upper[i], b.window.upper[i]);
  }
  r.spaces = a.spaces;
  for (const auto& [w, s] : b.spaces) {
    auto [it, inserted] = r.spaces.try_emplace(w, s);
    if (!inserted) {
      it->second.dim += s.dim;
      it->second.labels.insert(it->second.labels.end(), s.labels.begin(), s.labels.end());
      if (it->second.parity != s.parity) it->second.parity.reset();
    }
  }
  r.actions.resize(a.actions.size());
  for (std::size_t i = 0; i < a.actions.size(); ++i) {
    std::set<Weight> sources;
    for (const auto& [mu, blk] : a.actions[i]) sources.insert(mu);
    for (const auto& [mu, blk] : b.actions[i]) sources.insert(mu);
    for (const auto& mu : sources) {
      const Weight tgt = mu + a.adjoint_weights[i];
      SparseMatrix out(r.dim_at(tgt), r.dim_at(mu));
      const SparseMatrix ab = a.block(i, mu), bb = b.block(i, mu);
      for (const auto& [k, v] : ab.entries()) out.set(k.first, k.second, v);
      for (const auto& [k, v] : bb.entries())
        out.set(a.dim_at(tgt) + k.first, a.dim_at(mu) + k.second, v);
      r.actions[i].emplace(mu, out);
    }
  }
  return r;
}

GradedModule external_product(const GradedModule& a, const GradedModule& b) {
  GradedModule r;
  r.acting = std::make_shared<const LieAlg>(direct_sum(*a.acting, *b.acting));
  const Weight za(std::vector<int>(a.window.rank(), 0)), zb(std::vector<int>(b.window.rank(), 0));
  for (const auto& w : a.adjoint_weights) r.adjoint_weights.push_back(concat(w, zb));
  for (const auto& w : b.adjoint_weights) r.adjoint_weights.push_back(concat(za, w));
  r.window = a.window.product(b.window);
  for (const auto& [wa, sa] : a.spaces)
    for (const auto& [wb, sb] : b.spaces) {
      WeightSpace s;
      s.dim = sa.dim * sb.dim;
      for (const auto& la : sa.labels)
        for (const auto& lb : sb.labels) s.labels.push_back(la + "(x)" + lb);
      s.parity = add_parity(sa.parity, sb.parity);
      r.spaces.emplace(concat(wa, wb), s);
    }
  r.actions.resize(a.actions.size() + b.actions.size());
  for (std::size_t i = 0; i < a.actions.size(); ++i)
    for (const auto& [mu, blk] : a.actions[i])
      for (const auto& [wb, sb] : b.spaces) {
        const Weight src = concat(mu, wb);
        SparseMatrix out(r.dim_at(src + r.adjoint_weights[i]), r.dim_at(src));
        for (const auto& [k, v] : blk.entries())
          for (std::size_t q = 0; q < sb.dim; ++q) out.set(k.first * sb.dim + q, k.second * sb.dim + q, v);
        r.actions[i].emplace(src, out);
      }
  for (std::size_t i = 0; i < b.actions.size(); ++i) {
    const std::size_t gi = a.actions.size() + i;
    for (const auto& [mu, blk] : b.actions[i])
      for (const auto& [wa, sa] : a.spaces) {
        const Weight src = concat(wa, mu);
        const std::size_t db_src = b.dim_at(mu), db_tgt = b.dim_at(mu + b.adjoint_weights[i]);
        SparseMatrix out(sa.dim * db_tgt, sa.dim * db_src);
        for (const auto& [k, v] : blk.entries())
          for (std::size_t p = 0; p < sa.dim; ++p) out.set(p * db_tgt + k.first, p * db_src + k.second, v);
        r.actions[gi].emplace(src, out);
      }
  }
  return r;
}

Character character_of(const GradedModule& m) {
  Character c;
  c.ktypes = m.ktype_graded;
  for (const auto& [w, s] : m.spaces)
    if (s.dim > 0) c.add(w, static_cast<long>(s.dim), s.parity);
  return c;
}

std::string BracketFailure::describe() const {
  std::ostringstream os;
  if (i == j)
    os << "action of basis element " << i << " violates the grading at weight " << to_string(weight);
  else
    os << "bracket relation fails for basis pair (" << i << ", " << j << ") at weight " << to_string(weight);
  return os.str();
}

std::optional<BracketFailure> check_bracket_invariant(const GradedModule& m) {
  if (m.ktype_graded) return std::nullopt;
  const LieAlg& g = *m.acting;
  const std::size_t n = m.actions.size();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [mu, blk] : m.actions[i]) {
      const Weight tgt = mu + m.adjoint_weights[i];
      if (!m.spaces.count(mu) || blk.cols() != m.dim_at(mu) || blk.rows() != m.dim_at(tgt) ||
          (!blk.is_zero() && !m.spaces.count(tgt)))
        return BracketFailure{i, i, mu};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Weight& wi = m.adjoint_weights[i];
      const Weight& wj = m.adjoint_weights[j];
      for (const auto& [mu, s] : m.spaces) {
        if (!m.window.contains(mu + wi) || !m.window.contains(mu + wj) || !m.window.contains(mu + wi + wj))
          continue;
        SparseMatrix lhs = m.block(i, mu + wj) * m.block(j, mu);
        const SparseMatrix other = m.block(j, mu + wi) * m.block(i, mu);
        for (const auto& [k, v] : other.entries()) lhs.add(k.first, k.second, -v);
        const Vector& br = g.bracket_basis(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (br[k] == 0) continue;
          const SparseMatrix bk = m.block(k, mu);
          if (bk.rows() != lhs.rows()) return BracketFailure{i, j, mu};
          for (const auto& [key, v] : bk.entries()) lhs.add(key.first, key.second, -br[k] * v);
        }
        if (!lhs.is_zero()) return BracketFailure{i, j, mu};
      }
    }
  return std::nullopt;
}

}  // namespace locind
