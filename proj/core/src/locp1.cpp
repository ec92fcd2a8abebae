#include "locind/locp1.hpp"

#include <sstream>

namespace locind {

namespace {

// c (c-1) ... (c-k+1)
ExactScalar falling(const ExactScalar& c, unsigned k) {
  ExactScalar r = 1;
  for (unsigned i = 0; i < k; ++i) r *= c - i;
  return r;
}

ExactScalar half(int n) {
  ExactScalar r(n, 2);
  r.canonicalize();
  return r;
}

ExactScalar binom(unsigned n, unsigned k) {
  ExactScalar r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

void add_section(Section& s, const ExactScalar& r, const ExactScalar& c) {
  if (c == 0) return;
  auto [it, inserted] = s.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

Section monomial(const ExactScalar& r, const ExactScalar& c = 1) {
  Section s;
  add_section(s, r, c);
  return s;
}

Section multiply(const Section& a, const Section& b) {
  Section r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_section(r, ea + eb, ca * cb);
  return r;
}

Section scale(const Section& a, const ExactScalar& c) {
  Section r;
  for (const auto& [e, x] : a) add_section(r, e, x * c);
  return r;
}

Section plus(const Section& a, const Section& b) {
  Section r = a;
  for (const auto& [e, x] : b) add_section(r, e, x);
  return r;
}

Chart other(Chart c) { return c == Chart::Z ? Chart::W : Chart::Z; }

const LieAlg& sl2_algebra() {
  static const LieAlg g = sl2();
  return g;
}

const std::vector<Weight>& sl2_adjoint_weights() {
  static const std::vector<Weight> w = {Weight{2}, Weight{0}, Weight{-2}};
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------

ChartOp ChartOp::coordinate(Chart chart, int power, const ExactScalar& c) {
  ChartOp op(chart);
  op.add_term(power, 0, c);
  return op;
}

ChartOp ChartOp::derivative(Chart chart, unsigned order) {
  ChartOp op(chart);
  op.add_term(0, order, 1);
  return op;
}

ChartOp ChartOp::scalar(Chart chart, const ExactScalar& c) { return coordinate(chart, 0, c); }

void ChartOp::add_term(int power, unsigned order, const ExactScalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{power, order}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned ChartOp::order() const {
  unsigned o = 0;
  for (const auto& [k, c] : terms_) o = std::max(o, k.second);
  return o;
}

ChartOp ChartOp::operator+(const ChartOp& o) const {
  if (!o.is_zero() && !is_zero() && o.chart_ != chart_) throw std::invalid_argument("operators on different charts");
  ChartOp r = *this;
  if (is_zero()) r.chart_ = o.chart_;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

ChartOp ChartOp::operator-(const ChartOp& o) const { return *this + o * ExactScalar(-1); }

ChartOp ChartOp::operator*(const ExactScalar& s) const {
  ChartOp r(chart_);
  for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
  return r;
}

ChartOp ChartOp::operator*(const ChartOp& o) const {
  if (!o.is_zero() && !is_zero() && o.chart_ != chart_) throw std::invalid_argument("operators on different charts");
  ChartOp r(chart_);
  // (x^a d^b)(x^c d^d) = sum_k C(b,k) (c)_k x^{a+c-k} d^{b+d-k}
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      const auto [a, b] = ka;
      const auto [c, d] = kb;
      for (unsigned k = 0; k <= b; ++k) {
        const ExactScalar coef = ca * cb * binom(b, k) * falling(c, k);
        r.add_term(a + c - static_cast<int>(k), b + d - k, coef);
      }
    }
  return r;
}

Section ChartOp::apply(const Section& s) const {
  Section out;
  for (const auto& [k, c] : terms_)
    for (const auto& [r, x] : s) add_section(out, r - k.second + k.first, c * x * falling(r, k.second));
  return out;
}

ChartOp ChartOp::in_other_chart() const {
  const Chart oc = other(chart_);
  // x = y^-1, d_x = -y^2 d_y
  const ChartOp dx = ChartOp::coordinate(oc, 2, -1) * ChartOp::derivative(oc);
  ChartOp r(oc);
  for (const auto& [k, c] : terms_) {
    ChartOp term = ChartOp::coordinate(oc, -k.first, c);
    for (unsigned j = 0; j < k.second; ++j) term = term * dx;
    r = r + term;
  }
  return r;
}

std::string ChartOp::to_string() const {
  if (terms_.empty()) return "0";
  const char* x = chart_ == Chart::Z ? "z" : "w";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [p, o] = it->first;
    const ExactScalar& c = it->second;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    const ExactScalar mag = abs(c);
    const bool bare = p == 0 && o == 0;
    if (mag != 1 || bare) os << mag.get_str();
    if (p != 0) os << x << (p != 1 ? "^" + std::to_string(p) : "");
    if (o != 0) os << "d" << (o != 1 ? "^" + std::to_string(o) : "");
  }
  return os.str();
}

ChartOp commutator(const ChartOp& a, const ChartOp& b) { return a * b - b * a; }

ChartOp vector_field(std::size_t xi, Chart chart) {
  if (chart == Chart::Z) {
    switch (xi) {
      case 0: return ChartOp::derivative(Chart::Z) * ExactScalar(-1);
      case 1: return ChartOp::coordinate(Chart::Z, 1, -2) * ChartOp::derivative(Chart::Z);
      case 2: return ChartOp::coordinate(Chart::Z, 2) * ChartOp::derivative(Chart::Z);
    }
  } else {
    switch (xi) {
      case 0: return ChartOp::coordinate(Chart::W, 2) * ChartOp::derivative(Chart::W);
      case 1: return ChartOp::coordinate(Chart::W, 1, 2) * ChartOp::derivative(Chart::W);
      case 2: return ChartOp::derivative(Chart::W) * ExactScalar(-1);
    }
  }
  throw std::out_of_range("sl2 basis index out of range");
}

TwistedRep twisted_rep(int lambda0, Chart chart) {
  TwistedRep rep;
  rep.lambda0 = lambda0;
  rep.chart = chart;
  for (std::size_t i = 0; i < 3; ++i) rep.rho[i] = vector_field(i, chart);
  if (chart == Chart::Z) {
    rep.rho[1] = rep.rho[1] + ChartOp::scalar(Chart::Z, lambda0);
    rep.rho[2] = rep.rho[2] + ChartOp::coordinate(Chart::Z, 1, -lambda0);
  } else {
    rep.rho[0] = rep.rho[0] + ChartOp::coordinate(Chart::W, 1, -lambda0);
    rep.rho[1] = rep.rho[1] + ChartOp::scalar(Chart::W, -lambda0);
  }
  return rep;
}

std::optional<std::pair<std::size_t, std::size_t>> bracket_failure(const TwistedRep& rep) {
  const LieAlg& g = sl2_algebra();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      ChartOp rhs(rep.chart);
      const Vector& br = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < 3; ++k)
        if (br[k] != 0) rhs = rhs + rep.rho[k] * br[k];
      if (!(commutator(rep.rho[i], rep.rho[j]) == rhs)) return std::make_pair(i, j);
    }
  return std::nullopt;
}

TwistedRep twist(const TwistedRep& rep, int b) {
  const TwistedRep tb = twisted_rep(b, rep.chart);
  TwistedRep r = rep;
  r.lambda0 += b;
  for (std::size_t i = 0; i < 3; ++i) r.rho[i] = rep.rho[i] + (tb.rho[i] - vector_field(i, rep.chart));
  return r;
}

TwistedRep transport_to_w(const TwistedRep& rep) {
  if (rep.chart != Chart::Z) throw std::invalid_argument("transport_to_w expects a z-chart realization");
  TwistedRep r;
  r.lambda0 = rep.lambda0;
  r.chart = Chart::W;
  const ChartOp up = ChartOp::coordinate(Chart::W, rep.lambda0);
  const ChartOp down = ChartOp::coordinate(Chart::W, -rep.lambda0);
  for (std::size_t i = 0; i < 3; ++i) r.rho[i] = up * rep.rho[i].in_other_chart() * down;
  return r;
}

// ---------------------------------------------------------------------------

std::optional<std::pair<int, ExactScalar>> delta_apply(int i, unsigned j, int n) {
  if (i < 0) throw std::domain_error("negative powers of the coordinate do not act on the delta module");
  const int m = n + static_cast<int>(j);
  if (i > m) return std::nullopt;
  ExactScalar c = (i % 2 == 0) ? 1 : -1;
  for (int k = 0; k < i; ++k) c *= m - k;
  return std::make_pair(m - i, c);
}

namespace {

// Delta-module image of an operator: map n -> coefficient per target index.
std::map<int, ExactScalar> apply_to_delta(const ChartOp& op, int n) {
  std::map<int, ExactScalar> out;
  for (const auto& [k, c] : op.terms())
    if (auto r = delta_apply(k.first, k.second, n)) {
      out[r->first] += c * r->second;
      if (out[r->first] == 0) out.erase(r->first);
    }
  return out;
}

int delta_weight(const TwistedRep& rep, int n) {
  const auto img = apply_to_delta(rep.rho[1], n);
  if (img.size() > 1 || (img.size() == 1 && img.begin()->first != n))
    throw std::logic_error("h does not act diagonally on the delta basis");
  const ExactScalar w = img.empty() ? ExactScalar(0) : img.begin()->second;
  if (w.get_den() != 1) throw std::logic_error("non-integral weight on the delta basis");
  return static_cast<int>(w.get_num().get_si());
}

GradedModule empty_sl2_module(const Window& window) {
  GradedModule m;
  m.acting = std::make_shared<const LieAlg>(sl2_algebra());
  m.adjoint_weights = sl2_adjoint_weights();
  m.window = window;
  m.actions.resize(3);
  return m;
}

}  // namespace

GradedModule delta_module(const TwistedRep& rep, const Window& window) {
  if (window.rank() != 1) throw std::invalid_argument("delta module window must have rank 1");
  GradedModule m = empty_sl2_module(window);
  const int w0 = delta_weight(rep, 0);
  const int step = delta_weight(rep, 1) - w0;
  if (step == 0) throw std::logic_error("delta basis weights do not move");
  std::map<int, Weight> weight_of;
  const int span = window.upper[0] - window.lower[0];
  const int reach = (std::max(std::abs(window.lower[0] - w0), std::abs(window.upper[0] - w0)) + span) / std::abs(step) + 1;
  for (int n = 0; n <= reach; ++n) {
    const int w = w0 + step * n;
    if (!window.contains(Weight{w})) continue;
    weight_of[n] = Weight{w};
    m.spaces[Weight{w}] = WeightSpace{1, {"delta_" + std::to_string(n)}, std::nullopt};
  }
  for (const auto& [n, w] : weight_of)
    for (std::size_t i = 0; i < 3; ++i) {
      const Weight tgt = w + m.adjoint_weights[i];
      for (const auto& [t, c] : apply_to_delta(rep.rho[i], n)) {
        if (t < 0 || Weight{w0 + step * t} != tgt) throw std::logic_error("delta action violates the grading");
        if (!window.contains(tgt)) continue;
        SparseMatrix b(1, 1);
        b.set(0, 0, c);
        m.actions[i][w] = b;
      }
    }
  return m;
}

GradedModule delta_module(int lambda0, const Window& window) {
  return delta_module(twisted_rep(lambda0, Chart::Z), window);
}

GradedModule laurent_module(int lambda0, int parity, const Window& window, Chart chart) {
  if (window.rank() != 1) throw std::invalid_argument("Laurent module window must have rank 1");
  const TwistedRep rep = twisted_rep(lambda0, chart);
  GradedModule m = empty_sl2_module(window);
  // Exponent of the weight-n section in this chart.
  auto exponent = [&](int n) {
    return chart == Chart::Z ? half(lambda0 - n) : half(n + lambda0);
  };
  for (const auto& w : window.points(2, parity)) {
    std::ostringstream label;
    label << (chart == Chart::Z ? "z^" : "w^") << exponent(w[0]).get_str();
    m.spaces[w] = WeightSpace{1, {label.str()}, parity};
  }
  for (const auto& [w, s] : m.spaces)
    for (std::size_t i = 0; i < 3; ++i) {
      const Section img = rep.rho[i].apply(monomial(exponent(w[0])));
      const Weight tgt = w + m.adjoint_weights[i];
      for (const auto& [r, c] : img)
        if (r != exponent(tgt[0])) throw std::logic_error("Laurent action violates the grading");
      if (img.empty() || !window.contains(tgt)) continue;
      SparseMatrix b(1, 1);
      b.set(0, 0, img.begin()->second);
      m.actions[i][w] = b;
    }
  return m;
}

std::pair<Character, Character> cech_cohomology_On(int n) {
  // C0 = C[z] + C[w], C1 = C[z, 1/z]; w^k restricts to z^(n-k).
  Character h0, h1;
  const int bound = std::abs(n) + 4;
  for (int mu = -bound; mu <= bound; ++mu) {
    if (((n - mu) % 2 + 2) % 2 != 0) continue;
    const int m = (n - mu) / 2;  // z^m has weight n - 2m
    const int k = (n + mu) / 2;  // w^k has weight 2k - n
    SparseMatrix d(1, 0);
    std::vector<ExactScalar> entries;
    if (m >= 0) entries.push_back(1);
    if (k >= 0) entries.push_back(-1);
    d = SparseMatrix(1, entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) d.set(0, j, entries[j]);
    const long r = static_cast<long>(rank(d));
    h0.add(Weight{mu}, static_cast<long>(entries.size()) - r);
    h1.add(Weight{mu}, 1 - r);
  }
  return {peel_sl2(h0), peel_sl2(h1)};
}

GradedModule global_sections_module(int n) {
  GradedModule m = empty_sl2_module(Window::interval(-std::abs(n), std::abs(n)));
  if (n < 0) return m;
  const TwistedRep rep = twisted_rep(n, Chart::Z);
  for (int k = 0; k <= n; ++k) m.spaces[Weight{n - 2 * k}] = WeightSpace{1, {"z^" + std::to_string(k)}, std::nullopt};
  for (int k = 0; k <= n; ++k)
    for (std::size_t i = 0; i < 3; ++i) {
      const Section img = rep.rho[i].apply(monomial(k));
      if (img.empty()) continue;
      const auto [r, c] = *img.begin();
      if (r < 0 || r > n) throw std::logic_error("global sections are not preserved");
      SparseMatrix b(1, 1);
      b.set(0, 0, c);
      m.actions[i][Weight{n - 2 * k}] = b;
    }
  return m;
}

SparseMatrix casimir_block(const GradedModule& m, const Weight& mu) {
  const SparseMatrix h = m.block(1, mu);
  const SparseMatrix c = m.block(0, mu + m.adjoint_weights[2]) * m.block(2, mu);
  const SparseMatrix h2 = h * h;
  SparseMatrix out(m.dim_at(mu), m.dim_at(mu));
  for (const auto& [k, v] : c.entries()) out.add(k.first, k.second, 2 * v);
  for (const auto& [k, v] : h.entries()) out.add(k.first, k.second, -v);
  for (const auto& [k, v] : h2.entries()) out.add(k.first, k.second, v / 2);
  return out;
}

// ---------------------------------------------------------------------------

FiltrationReport filtration_check(int lambda0, unsigned p, int depth) {
  FiltrationReport rep;
  if (depth <= static_cast<int>(p)) throw std::invalid_argument("filtration depth must exceed p");
  const std::size_t n = static_cast<std::size_t>(depth) + 1;
  auto z_power = [&](unsigned k) {
    SparseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      if (auto r = delta_apply(static_cast<int>(k), 0, static_cast<int>(j))) m.set(r->first, j, r->second);
    return m;
  };
  auto supported_below = [](const std::vector<Vector>& vs, std::size_t bound) {
    for (const auto& v : vs)
      for (std::size_t i = bound + 1; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
  };
  const auto fp = kernel_basis(z_power(p + 1));
  rep.kernels_match = fp.size() == p + 1 && supported_below(fp, p);
  rep.annihilated = true;
  for (unsigned j = 0; j <= p; ++j)
    if (delta_apply(static_cast<int>(p + 1), 0, static_cast<int>(j))) rep.annihilated = false;
  if (p == 0) {
    rep.injective = true;
  } else {
    const auto fprev = kernel_basis(z_power(p));
    SparseMatrix both(fp.size() + fprev.size(), n);
    for (std::size_t a = 0; a < fp.size(); ++a)
      for (std::size_t i = 0; i < n; ++i) both.set(a, i, fp[a][i]);
    for (std::size_t a = 0; a < fprev.size(); ++a)
      for (std::size_t i = 0; i < n; ++i) both.set(fp.size() + a, i, fprev[a][i]);
    rep.injective = fprev.size() == p && rank(both) == fp.size();
  }
  rep.exhaustive = true;
  for (int j = 0; j < depth; ++j)
    if (delta_apply(j + 1, 0, j)) rep.exhaustive = false;
  const TwistedRep rho = twisted_rep(lambda0, Chart::Z);
  rep.k_stable = true;
  for (unsigned j = 0; j <= p; ++j)
    for (const auto& [t, c] : apply_to_delta(rho.rho[1], static_cast<int>(j)))
      if (t > static_cast<int>(p)) rep.k_stable = false;
  const auto f0 = kernel_basis(z_power(1));
  rep.bottom_is_fiber = f0.size() == 1 && delta_weight(rho, 0) == lambda0 + 2;
  std::ostringstream os;
  os << "F_" << p << " has dimension " << fp.size() << "; bottom weight " << delta_weight(rho, 0);
  rep.detail = os.str();
  return rep;
}

// ---------------------------------------------------------------------------

JetModule::JetModule(Orbit orbit, int lambda0, unsigned p, int parity)
    : orbit_(orbit), lambda0_(lambda0), p_(p), parity_(parity), rep_(twisted_rep(lambda0, Chart::Z)) {
  if (p == 0) throw std::invalid_argument("truncation level must be at least 1");
}

Section JetModule::reduce(const Section& s) const {
  if (orbit_ == Orbit::Open) return s;
  Section r;
  for (const auto& [e, c] : s) {
    if (e < 0 || e.get_den() != 1) throw std::domain_error("section is not regular along the closed orbit");
    if (e < p_) r.emplace(e, c);
  }
  return r;
}

Vector JetModule::jets(const Section& s) const {
  if (orbit_ != Orbit::Closed) throw std::domain_error("jets are taken along the closed orbit");
  const Section r = reduce(s);
  Vector v(p_, 0);
  for (unsigned t = 0; t < p_; ++t) {
    auto it = r.find(ExactScalar(t));
    if (it == r.end()) continue;
    // ((-d)^t z^t)(0) = (-1)^t t!
    ExactScalar c = it->second * falling(t, t);
    v[t] = (t % 2 == 0) ? c : ExactScalar(-c);
  }
  return v;
}

Vector JetModule::act_function(const Section& f, const Vector& v) const {
  if (orbit_ != Orbit::Closed) throw std::domain_error("the Leibniz formula is along the closed orbit");
  const Vector fj = jets(f);
  Vector out(p_, 0);
  for (unsigned s = 0; s < p_; ++s)
    for (unsigned t = 0; t <= s; ++t) out[s] += binom(s, t) * fj[t] * v[s - t];
  return out;
}

Section JetModule::act(std::size_t xi, const Section& s) const {
  if (orbit_ == Orbit::Closed && xi == 0)
    throw std::domain_error("e moves the closed orbit and does not act on its truncations");
  return reduce(rep_.rho.at(xi).apply(reduce(s)));
}

ExactScalar JetModule::weight_of(const ExactScalar& r) const { return ExactScalar(lambda0_) - 2 * r; }

int JetModule::component_sign(const ExactScalar& r) const {
  const ExactScalar twice = 2 * r + lambda0_;
  if (twice.get_den() != 1) throw std::domain_error("exponent is not a section of the orbit bundle");
  return (twice.get_num() % 2 == 0) ? 1 : -1;
}

ExactScalar JetModule::iota(const Section& s) const {
  const Section r = reduce(s);
  if (orbit_ == Orbit::Closed) {
    auto it = r.find(ExactScalar(0));
    return it == r.end() ? ExactScalar(0) : it->second;
  }
  ExactScalar v = 0;
  for (const auto& [e, c] : r) v += c;
  return v;
}

JetReport check_associated(const JetModule& j, int depth) {
  JetReport rep;
  std::ostringstream detail;
  const int l0 = j.lambda0();
  auto eq = [](const Section& a, const Section& b) { return a == b; };

  if (j.orbit() == JetModule::Orbit::Closed) {
    const unsigned p = j.level();
    std::vector<Section> basis;
    for (unsigned t = 0; t < p; ++t) basis.push_back(monomial(t));
    // (1) the canonical map to level p-1 commutes with the isotropy action
    rep.quotient_equivariant = true;
    if (p >= 2) {
      const JetModule lower(JetModule::Orbit::Closed, l0, p - 1);
      for (const auto& s : basis)
        for (std::size_t xi : {1u, 2u})
          if (!eq(lower.reduce(j.act(xi, s)), lower.act(xi, lower.reduce(s)))) rep.quotient_equivariant = false;
    }
    // (2) free of rank one over C[z]/(z^p), generated by the constant section
    {
      SparseMatrix m(p, p);
      for (unsigned t = 0; t < p; ++t) {
        const Vector v = j.jets(monomial(t));
        for (unsigned s = 0; s < p; ++s) m.set(s, t, v[s]);
      }
      rep.free = rank(m) == p && j.reduce(monomial(p)).empty();
    }
    // (3) action map O x V -> V is equivariant: xi(f v) = xi_X(f) v + f xi(v)
    rep.action_equivariant = true;
    for (unsigned a = 0; a < p; ++a)
      for (const auto& s : basis)
        for (std::size_t xi : {1u, 2u}) {
          const Section f = monomial(a);
          const Section lhs = j.act(xi, multiply(f, s));
          const Section rhs = j.reduce(plus(multiply(vector_field(xi).apply(f), s), multiply(f, j.act(xi, s))));
          if (!eq(lhs, rhs)) rep.action_equivariant = false;
        }
    // (4) k = span{h} acts by the weight grading
    rep.k_compatible = true;
    for (unsigned t = 0; t < p; ++t)
      if (!eq(j.act(1, monomial(t)), scale(monomial(t), j.weight_of(t)))) rep.k_compatible = false;
    // (5) fiber map commutes with the isotropy algebra {h, f} acting by (lambda0, 0)
    rep.fiber_iso = true;
    const JetModule fiber(JetModule::Orbit::Closed, l0, 1);
    for (const auto& s : basis) {
      if (fiber.iota(fiber.act(1, s)) != l0 * fiber.iota(s)) rep.fiber_iso = false;
      if (fiber.iota(fiber.act(2, s)) != 0) rep.fiber_iso = false;
    }
    if (j.weight_of(0) != l0) rep.fiber_iso = false;
    // Leibniz formula along the normal direction
    rep.leibniz = true;
    for (unsigned a = 0; a < p; ++a)
      for (const auto& s : basis) {
        const Section f = plus(monomial(a), monomial(0, 3));
        if (j.jets(multiply(f, s)) != j.act_function(f, j.jets(s))) rep.leibniz = false;
      }
    detail << "closed orbit, p = " << p;
  } else {
    std::vector<Section> basis;
    const ExactScalar r0 = half(l0 - j.parity());
    for (int k = -depth; k <= depth; ++k) basis.push_back(monomial(r0 + k));
    rep.quotient_equivariant = true;
    for (const auto& s : basis)
      if (!eq(j.reduce(s), s)) rep.quotient_equivariant = false;
    // (2) multiplication by z is invertible and z^k z^r0 runs through the basis
    rep.free = true;
    for (const auto& s : basis) {
      const Section down = multiply(monomial(-1), multiply(monomial(1), s));
      if (!eq(down, s)) rep.free = false;
      const ExactScalar k = s.begin()->first - r0;
      if (k.get_den() != 1) rep.free = false;
    }
    rep.action_equivariant = true;
    for (const auto& s : basis)
      for (int a : {-1, 1})
        for (std::size_t xi = 0; xi < 3; ++xi) {
          const Section f = monomial(a);
          const Section lhs = j.act(xi, multiply(f, s));
          const Section rhs = plus(multiply(vector_field(xi).apply(f), s), multiply(f, j.act(xi, s)));
          if (!eq(lhs, rhs)) rep.action_equivariant = false;
        }
    rep.k_compatible = true;
    for (const auto& s : basis) {
      const ExactScalar r = s.begin()->first;
      if (!eq(j.act(1, s), scale(s, j.weight_of(r)))) rep.k_compatible = false;
    }
    // (5) at z = 1 the isotropy algebra {h - 2e, -e + h + f} acts by (lambda0, 0),
    // and M acts on every section by the parity of the fiber.
    rep.fiber_iso = true;
    for (const auto& s : basis) {
      const Section cartan = plus(j.act(1, s), scale(j.act(0, s), -2));
      const Section nil = plus(plus(scale(j.act(0, s), -1), j.act(1, s)), j.act(2, s));
      if (j.iota(cartan) != l0 * j.iota(s) || j.iota(nil) != 0) rep.fiber_iso = false;
      if (j.component_sign(s.begin()->first) != (j.parity() % 2 == 0 ? 1 : -1)) rep.fiber_iso = false;
    }
    rep.leibniz = true;
    detail << "open orbit, sections z^(r0 + k), |k| <= " << depth;
  }
  rep.detail = detail.str();
  return rep;
}

// ---------------------------------------------------------------------------

std::pair<Character, Character> cech_direct_image(JetModule::Orbit orbit, int lambda0, int parity,
                                                  const Window& window, Chart chart) {
  Character h0, h1;
  if (orbit == JetModule::Orbit::Closed) {
    // supported on the base chart only: C0 = M(U_base), C1 = M(U_z cap U_w) = 0
    const GradedModule m = delta_module(twisted_rep(lambda0, chart), window);
    for (const auto& [w, s] : m.spaces) {
      const SparseMatrix d(0, s.dim);
      h0.add(w, static_cast<long>(s.dim - rank(d)));
    }
    return {h0, h1};
  }
  // C0 = M(U_z) + M(U_w), C1 = M(U_z cap U_w); the w-frame section w^s is
  // z^(lambda0 - s) in the z-frame.
  const GradedModule mz = laurent_module(lambda0, parity, window, Chart::Z);
  const GradedModule mw = laurent_module(lambda0, parity, window, Chart::W);
  for (const auto& w : window.points(2, ((parity % 2) + 2) % 2)) {
    const std::size_t dz = mz.dim_at(w), dw = mw.dim_at(w);
    const ExactScalar r = ExactScalar(lambda0 - w[0]) / 2, s = ExactScalar(w[0] + lambda0) / 2;
    if (s != lambda0 - r) throw std::logic_error("chart transition does not match the frames");
    SparseMatrix d(dz, dz + dw);
    for (std::size_t i = 0; i < dz; ++i) d.set(i, i, 1);
    for (std::size_t i = 0; i < dw && i < dz; ++i) d.set(i, dz + i, -1);
    const std::size_t rk = rank(d);
    h0.add(w, static_cast<long>(dz + dw - rk), parity);
    h1.add(w, static_cast<long>(dz - rk), parity);
  }
  return {h0, h1};
}

}  // namespace locind
