/// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "locind/cohind.hpp"
#include "locind/harness.hpp"
#include "locind/hecke.hpp"

using namespace locind;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

long sl2_dim(const Character& c) {
  long d = 0;
  for (const auto& [w, m] : c.multiplicities) d += m * (w[0] + 1);
  return d;
}

const Character& degree(const std::vector<DegreeCharacter>& side, std::size_t d) {
  static const Character empty;
  for (const auto& dc : side)
    if (dc.degree == d) return dc.character;
  return empty;
}

VerificationCase single(Family f, std::vector<int> lambda, std::optional<int> parity = std::nullopt) {
  VerificationCase c;
  c.family = f;
  c.lambda = std::move(lambda);
  c.parity = parity;
  std::ostringstream id;
  id << family_name(f) << ":" << c.lambda[0];
  c.id = id.str();
  if (f == Family::C) c.lo = 0, c.hi = 12;
  return c;
}

std::vector<VerificationCase> every_case() {
  std::vector<VerificationCase> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (const auto& c : default_grid(f)) out.push_back(c);
  return out;
}

PairData pair_of(const VerificationCase& c) { return family_pair(c.family, c.second); }

/// V for a case, rebuilt the same way the harness does (lambda on the first h
/// vector of each factor, zero elsewhere).
GradedModule module_of(const VerificationCase& c, const PairData& pair) {
  if (c.family == Family::A || c.family == Family::C)
    return one_dim_module(pair, {c.lambda[0], 0}, Weight{c.lambda[0]});
  if (c.family == Family::B) return one_dim_module(pair, {c.lambda[0], 0}, Weight{}, c.parity.value_or(0));
  Vector values(pair.h.dim(), 0);
  for (std::size_t i = 0; i < pair.h_origin.size(); ++i)
    if (pair.h_origin[i].second == 0) values[i] = c.lambda[pair.h_origin[i].first];
  if (c.second == Family::B) return one_dim_module(pair, values, Weight{c.lambda[0]}, c.parity.value_or(0));
  return one_dim_module(pair, values, Weight{c.lambda[0], c.lambda[1]});
}

// 1 -------------------------------------------------------------------------
Outcome closed_orbit() {
  Outcome o;
  double worst = 0;
  for (int l = -2; l >= -8; --l) {
    const auto t0 = Clock::now();
    const Report r = run_case(single(Family::A, {l}));
    worst = std::max(worst, seconds_since(t0));
    if (!r.match) o.fail("lambda0 = " + std::to_string(l) + ": " + r.mismatch_detail);
    if (!degree(r.side_a, 1).empty()) o.fail("(P)_1 != 0 at lambda0 = " + std::to_string(l));
    if (!degree(r.side_b, 1).empty()) o.fail("H^1 != 0 at lambda0 = " + std::to_string(l));
    if (degree(r.side_b, 0).empty()) o.fail("empty H^0 at lambda0 = " + std::to_string(l));
  }
  if (worst >= 5.0) o.fail("slowest case took " + std::to_string(worst) + " s");
  if (o.pass) o.detail = "7 cases on [-30, 30], slowest " + std::to_string(worst).substr(0, 5) + " s";
  return o;
}

// 2 -------------------------------------------------------------------------
Outcome open_orbit() {
  Outcome o;
  for (int l = 0; l <= 2; ++l)
    for (int p = 0; p <= 1; ++p) {
      const Report r = run_case(single(Family::B, {l}, p));
      const std::string at = "lambda0 = " + std::to_string(l) + ", parity " + std::to_string(p);
      if (!r.match) o.fail(at + ": " + r.mismatch_detail);
      const Character& h0 = degree(r.side_b, 0);
      if (h0.parities.size() != h0.multiplicities.size()) o.fail(at + ": unlabelled parity");
      for (const auto& [w, par] : h0.parities)
        if (par != p) o.fail(at + ": wrong parity label at " + to_string(w));
    }
  if (o.pass) o.detail = "6 cases on [-30, 30], parity labels agree";
  return o;
}

// 3 -------------------------------------------------------------------------
Outcome borel_weil_bott() {
  Outcome o;
  for (int n = 0; n <= 5; ++n) {
    const Report r = run_case(single(Family::C, {n}));
    if (!r.match) o.fail("n = " + std::to_string(n) + ": " + r.mismatch_detail);
    if (sl2_dim(degree(r.side_b, 0)) != n + 1 || sl2_dim(degree(r.side_a, 1)) != n + 1)
      o.fail("dim H^0(O(" + std::to_string(n) + ")) != n + 1");
    const Report s = run_case(single(Family::C, {-n - 2}));
    if (!s.match) o.fail("n = " + std::to_string(-n - 2) + ": " + s.mismatch_detail);
    if (sl2_dim(degree(s.side_b, 1)) != n + 1 || sl2_dim(degree(s.side_a, 0)) != n + 1)
      o.fail("dim H^1(O(" + std::to_string(-n - 2) + ")) != n + 1");
  }
  VerificationCase wall = single(Family::C, {-1});
  wall.fixture = true;
  const Report w = run_case(wall);
  bool vanish = w.match;
  for (const auto& dc : w.side_a) vanish = vanish && dc.character.empty();
  for (const auto& dc : w.side_b) vanish = vanish && dc.character.empty();
  if (!vanish) o.fail("wall n = -1 does not vanish on both sides");
  if (o.pass) o.detail = "n = 0..5 and -n-2 match with the expected dimensions; wall n = -1 recorded";
  return o;
}

// 4 -------------------------------------------------------------------------
Outcome oracle_equivalence() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& c : every_case()) {
    const PairData pair = pair_of(c);
    const GradedModule V = module_of(c, pair);
    if (!(character_of(p_deg0_oracle(pair, V, c.window())) == derived_p(pair, V, 0, c.window())))
      o.fail(c.id);
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " cases over families A-D";
  return o;
}

// 5 -------------------------------------------------------------------------
Outcome square_zero() {
  Outcome o;
  std::size_t blocks = 0;
  for (const auto& c : every_case()) {
    const PairData pair = pair_of(c);
    const StdComplex cx = build_standard_complex(pair, module_of(c, pair), c.window());
    blocks += cx.blocks.size();
    if (auto f = cx.d_squared_failure())
      o.fail(c.id + " at " + to_string(f->first) + ", degree " + std::to_string(f->second));
    if (c.family == Family::D && cx.top_degree < 2) o.fail(c.id + ": D complex has fewer than three terms");
  }
  if (o.pass) o.detail = std::to_string(blocks) + " weight blocks, all families";
  return o;
}

// 6 -------------------------------------------------------------------------
RgKElt random_element(const HeckeAlgebra& R, std::mt19937& rng) {
  std::uniform_int_distribution<int> n(-4, 4), e(0, 2), coef(-3, 3), terms(1, 3);
  RgKElt x;
  for (int t = terms(rng); t > 0; --t) {
    PBWMonomial m(R.U().dim(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<unsigned>(e(rng));
    x = x + R.element(rk_idempotent(Weight{n(rng)}), R.U().monomial(m, coef(rng)));
  }
  return x;
}

Outcome hecke_suite() {
  Outcome o;
  const HeckeAlgebra R(closed_orbit_pair());
  const Window w = Window::interval(-8, 8);
  std::mt19937 rng(6);
  int triples = 0, units = 0;
  while (triples < 120) {
    const RgKElt a = random_element(R, rng), b = random_element(R, rng), c = random_element(R, rng);
    if (!R.supported_in(a, w) || !R.supported_in(b, w) || !R.supported_in(c, w)) continue;
    ++triples;
    if (!(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)))) o.fail("non-associative triple " + std::to_string(triples));
    const RgKElt z = R.approx_identity(w);
    if (!(R.mul(z, a) == a) || !(R.mul(a, z) == a)) o.fail("approx identity is not a unit");
    ++units;
  }
  const UElt e = R.from_ambient({1, 0, 0}), f = R.from_ambient({0, 0, 1});
  for (int k = 0; k < 30; ++k) {
    const RgKElt b = random_element(R, rng);
    const RKElt s = rk_idempotent(Weight{k % 5 - 2}) + rk_idempotent(Weight{k % 3}) * ExactScalar(2);
    const UElt xi = e * ExactScalar(k % 3 - 1) + f * ExactScalar(k % 4 + 1);
    const auto basis = R.orbit_span_basis(xi);
    std::vector<UElt> other;
    for (std::size_t i = 0; i < basis.size(); ++i)
      other.push_back(basis[i] * ExactScalar(i + 2) + (i + 1 < basis.size() ? basis[i + 1] : basis[0] * 0));
    const RgKElt via = R.product_formula(s, xi, b, basis);
    if (!(via == R.product_formula(s, xi, b, other))) o.fail("torus product depends on the basis of span Ad(K) xi");
    if (!(via == R.mul(R.element(s, xi), b))) o.fail("product formula disagrees with the plain product");
  }
  const HeckeAlgebra C(borel_weil_bott_pair());
  for (int tau = 0; tau <= 4; ++tau) {
    RKElt S, T;
    for (int s = 0; s <= tau + 2; ++s) S.blocks.emplace(Weight{s}, SparseMatrix::identity(s + 1));
    SparseMatrix tm(tau + 1, tau + 1);
    for (int a = 0; a <= tau; ++a)
      for (int c = 0; c <= tau; ++c) tm.set(a, c, (a * 3 + c * 5) % 7 - 3);
    T.blocks.emplace(Weight{tau}, tm);
    const Vector xv = {1, -2, 3};
    const UElt xi = C.from_ambient(xv);
    const RgKElt tb = C.element(T, C.U().one());
    RKElt direct;
    direct.blocks.emplace(Weight{tau}, sl2_irrep_matrix(tau, xv) * tm);
    const std::vector<UElt> rotated = {C.U().generator(0) + C.U().generator(2), C.U().generator(1) * ExactScalar(3),
                                       C.U().generator(0) - C.U().generator(2)};
    if (!(C.product_formula(S, xi, tb, C.orbit_span_basis(xi)) == C.element(direct, C.U().one())) ||
        !(C.product_formula(S, xi, tb, rotated) == C.element(direct, C.U().one())))
      o.fail("SL2 product formula depends on the basis at tau = " + std::to_string(tau));
  }
  if (o.pass)
    o.detail = std::to_string(triples) + " window-supported triples, " + std::to_string(units) +
               " unit checks, basis independence for torus and SL2 K";
  return o;
}

// 7 -------------------------------------------------------------------------
Outcome twisted_operators() {
  Outcome o;
  for (int l = -10; l <= 10; ++l)
    for (Chart ch : {Chart::Z, Chart::W})
      if (auto f = bracket_failure(twisted_rep(l, ch)))
        o.fail("lambda0 = " + std::to_string(l) + ", basis pair (" + std::to_string(f->first) + ", " +
               std::to_string(f->second) + ")");
  if (o.pass) o.detail = "lambda0 in [-10, 10], all basis pairs, both charts";
  return o;
}

// 8 -------------------------------------------------------------------------
Outcome conformance() {
  Outcome o;
  std::size_t n = 0;
  for (int l = -8; l <= -2; ++l)
    for (unsigned p = 1; p <= 4; ++p, ++n) {
      const JetReport r = check_associated(JetModule(JetModule::Orbit::Closed, l, p));
      if (!r.ok()) o.fail("family A lambda0 = " + std::to_string(l) + ", p = " + std::to_string(p) + ": " + r.detail);
    }
  for (int l = 0; l <= 2; ++l)
    for (int par = 0; par <= 1; ++par)
      for (unsigned p = 1; p <= 4; ++p, ++n) {
        const JetReport r = check_associated(JetModule(JetModule::Orbit::Open, l, p, par));
        if (!r.ok()) o.fail("family B lambda0 = " + std::to_string(l) + ", p = " + std::to_string(p) + ": " + r.detail);
      }
  if (o.pass) o.detail = std::to_string(n) + " truncations, p <= 4, every conformance condition";
  return o;
}

// 9 -------------------------------------------------------------------------
Outcome duality() {
  Outcome o;
  for (Family f : {Family::A, Family::B})
    for (const auto& c : default_grid(f)) {
      const PairData pair = pair_of(c);
      const GradedModule V = module_of(c, pair);
      for (std::size_t j = 0; j <= 1; ++j)
        if (!(derived_i(pair, dual_module(V), j, c.window()) == negate_weights(derived_p(pair, V, j, c.window()))))
          o.fail(c.id + ", j = " + std::to_string(j));
    }
  if (o.pass) o.detail = "families A and B, j = 0, 1";
  return o;
}

// 10 ------------------------------------------------------------------------
Outcome stability() {
  Outcome o;
  std::size_t n = 0;
  for (auto c : every_case()) {
    c.check_stability = true;
    const Report r = run_case(c);
    ++n;
    if (!r.match) o.fail(c.id + ": " + r.mismatch_detail);
  }
  if (o.pass) o.detail = std::to_string(n) + " cases, margin + 1 and chart swap";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed-orbit instance (family A)", closed_orbit},
      {"open-orbit instance with parity (family B)", open_orbit},
      {"Borel-Weil-Bott instance (family C)", borel_weil_bott},
      {"oracle equivalence", oracle_equivalence},
      {"boundary squares to zero", square_zero},
      {"Hecke algebra suite", hecke_suite},
      {"twisted operators are a representation", twisted_operators},
      {"associated-module conformance", conformance},
      {"duality character check", duality},
      {"stability under margin and chart swap", stability},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << o.detail << "; " << std::to_string(seconds_since(t0)).substr(0, 5) << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
