#include "locind/harness.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "locind/cohind.hpp"
#include "locind/hecke.hpp"

namespace locind {

using ordered_json = nlohmann::ordered_json;

Family parse_family(const std::string& name) {
  if (name == "A" || name == "a" || name == "closed-orbit") return Family::A;
  if (name == "B" || name == "b" || name == "open-orbit") return Family::B;
  if (name == "C" || name == "c" || name == "borel-weil-bott") return Family::C;
  if (name == "D" || name == "d" || name == "product") return Family::D;
  throw std::invalid_argument("unknown family '" + name + "' (expected A, B, C, D or a pair family name)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Window VerificationCase::window() const {
  if (lo > hi) throw std::invalid_argument("window lower bound exceeds upper bound");
  switch (family) {
    case Family::C: return Window::interval(std::max(0, lo), hi);
    case Family::D: return Window::box(2, lo, hi);
    default: return Window::interval(lo, hi);
  }
}

PairData family_pair(Family f, Family second) {
  switch (f) {
    case Family::A: return closed_orbit_pair();
    case Family::B: return open_orbit_pair();
    case Family::C: return borel_weil_bott_pair();
    case Family::D:
      if (second != Family::A && second != Family::B) throw std::invalid_argument("D factors must be A or B");
      return product_pair(closed_orbit_pair(), second == Family::B ? open_orbit_pair() : closed_orbit_pair());
  }
  throw std::invalid_argument("unknown family");
}

namespace {

Ledger ledger_for(Family f) {
  Ledger l;
  if (f == Family::C) l.canonical_Y = -2;
  return l;
}

void check_case(const VerificationCase& c) {
  const std::size_t want = c.family == Family::D ? 2 : 1;
  if (c.lambda.size() != want)
    throw std::invalid_argument("family " + family_name(c.family) + " needs " + std::to_string(want) + " lambda value(s)");
  if (c.margin < 4) throw std::invalid_argument("margin must be at least 4");
  const bool needs_parity = c.family == Family::B || (c.family == Family::D && c.second == Family::B);
  if (c.parity && !needs_parity) throw std::invalid_argument("parity applies only to family B or a D product with a B factor");
  if (c.parity && *c.parity != 0 && *c.parity != 1) throw std::invalid_argument("parity must be 0 or 1");
}

int parity_of(const VerificationCase& c) { return c.parity.value_or(0); }

// Character values of V on the h basis, and the L-type.
GradedModule module_for(const VerificationCase& c, const PairData& pair) {
  switch (c.family) {
    case Family::A:
    case Family::C: return one_dim_module(pair, {c.lambda[0], 0}, Weight{c.lambda[0]});
    case Family::B: return one_dim_module(pair, {c.lambda[0], 0}, Weight{}, parity_of(c));
    case Family::D: {
      // each factor has V = (lambda, 0) on its own h basis
      Vector values(pair.h.dim(), 0);
      for (std::size_t i = 0; i < pair.h_origin.size(); ++i)
        if (pair.h_origin[i].second == 0) values[i] = c.lambda[pair.h_origin[i].first];
      std::vector<int> lt;
      for (const auto& t : pair.L.torus) {
        const auto co = pair.h.coordinates(t);
        ExactScalar s = 0;
        for (std::size_t i = 0; i < co->size(); ++i) s += (*co)[i] * values[i];
        lt.push_back(static_cast<int>(s.get_num().get_si()));
      }
      std::optional<int> p;
      if (!pair.L.component_signs.empty()) p = parity_of(c);
      return one_dim_module(pair, values, Weight(lt), p);
    }
  }
  throw std::invalid_argument("unknown family");
}

// External product of characters (Kunneth on the product of two P^1's).
Character product_character(const Character& a, const Character& b) {
  Character r;
  for (const auto& [wa, ma] : a.multiplicities)
    for (const auto& [wb, mb] : b.multiplicities) {
      std::vector<int> w = wa.coords;
      w.insert(w.end(), wb.coords.begin(), wb.coords.end());
      std::optional<int> p;
      if (auto it = a.parities.find(wa); it != a.parities.end()) p = it->second;
      if (auto it = b.parities.find(wb); it != b.parities.end()) p = it->second;
      r.add(Weight(w), ma * mb, p);
    }
  return r;
}

std::pair<Character, Character> factor_cohomology(Family f, int lambda0, int parity, const Window& w, Chart chart) {
  if (f == Family::A) return cech_direct_image(JetModule::Orbit::Closed, lambda0, 0, w, chart);
  return cech_direct_image(JetModule::Orbit::Open, lambda0, parity, w, chart);
}

ordered_json character_entries(const std::vector<DegreeCharacter>& side) {
  ordered_json arr = ordered_json::array();
  for (const auto& dc : side)
    for (const auto& [w, m] : dc.character.multiplicities) {
      ordered_json e;
      e["degree"] = dc.degree;
      e["weight"] = w.coords;
      e["mult"] = m;
      if (auto it = dc.character.parities.find(w); it != dc.character.parities.end()) e["parity"] = it->second;
      arr.push_back(e);
    }
  return arr;
}

const Character* find_degree(const std::vector<DegreeCharacter>& side, std::size_t d) {
  for (const auto& dc : side)
    if (dc.degree == d) return &dc.character;
  return nullptr;
}

}  // namespace

std::vector<DegreeCharacter> algebraic_side(const VerificationCase& c) {
  check_case(c);
  const PairData pair = family_pair(c.family, c.second);
  const GradedModule V = module_for(c, pair);
  ComplexOptions opts;
  opts.margin = c.margin;
  const StdComplex cx = build_standard_complex(pair, V, c.window(), opts);
  std::vector<DegreeCharacter> out;
  for (std::size_t j = 0; j <= cx.top_degree; ++j) out.push_back({j, cx.homology(j)});
  return out;
}

std::vector<DegreeCharacter> geometric_side(const VerificationCase& c, Chart chart) {
  check_case(c);
  const Ledger led = ledger_for(c.family);
  const Window w = c.window();
  std::pair<Character, Character> h;
  switch (c.family) {
    case Family::A: h = factor_cohomology(Family::A, c.lambda[0] + led.kl_twist + led.canonical_Y, 0, w, chart); break;
    case Family::B:
      h = factor_cohomology(Family::B, c.lambda[0] + led.kl_twist + led.canonical_Y, parity_of(c), w, chart);
      break;
    case Family::C: {
      const int n = c.lambda[0] + led.kl_twist + led.canonical_Y + led.anticanonical_X;
      auto [h0, h1] = cech_cohomology_On(n);
      h = {h0.restricted(w), h1.restricted(w)};
      break;
    }
    case Family::D: {
      const Window w1 = Window::interval(c.lo, c.hi);
      const auto a = factor_cohomology(Family::A, c.lambda[0], 0, w1, chart);
      const auto b = factor_cohomology(c.second, c.lambda[1], parity_of(c), w1, chart);
      h.first = product_character(a.first, b.first);
      h.second = product_character(a.first, b.second) + product_character(a.second, b.first);
      break;
    }
  }
  return {{0, h.first}, {1, h.second}};
}

Report run_case(const VerificationCase& c) {
  check_case(c);
  Report r;
  r.input = c;
  r.ledger = ledger_for(c.family);
  const PairData pair = family_pair(c.family, c.second);
  r.side_a = algebraic_side(c);
  r.side_b = geometric_side(c);
  const std::size_t u = pair.u_dim;
  for (std::size_t s = 0; s <= u; ++s) r.pairs.emplace_back(s, u - s);

  r.match = true;
  auto fail = [&](const Weight& w, const std::string& what) {
    if (!r.match) return;
    r.match = false;
    r.counterexample = w;
    r.mismatch_detail = what;
  };
  for (const auto& [s, j] : r.pairs) {
    const Character* b = find_degree(r.side_b, s);
    const Character* a = find_degree(r.side_a, j);
    const Character empty;
    if (auto d = first_difference(b ? *b : empty, a ? *a : empty))
      fail(*d, "H^" + std::to_string(s) + " differs from (P)_" + std::to_string(j) + " at weight " + to_string(*d));
  }
  for (const auto& dc : r.side_a)
    if (dc.degree > u && !dc.character.empty())
      fail(dc.character.multiplicities.begin()->first, "(P)_" + std::to_string(dc.degree) + " does not vanish");
  for (const auto& dc : r.side_b)
    if (dc.degree > u && !dc.character.empty())
      fail(dc.character.multiplicities.begin()->first, "H^" + std::to_string(dc.degree) + " does not vanish");

  if (c.family == Family::B || (c.family == Family::D && c.second == Family::B))
    r.notes.push_back("L = {+-1} balancing enforced as a parity constraint; every weight carries the M-type parity");
  if (c.family == Family::C) {
    const Character* h0 = find_degree(r.side_b, 0);
    const Character* h1 = find_degree(r.side_b, 1);
    auto dim = [](const Character* ch) {
      long d = 0;
      for (const auto& [w, m] : ch->multiplicities) d += m * (w[0] + 1);
      return d;
    };
    r.notes.push_back("dim H^0 = " + std::to_string(dim(h0)) + ", dim H^1 = " + std::to_string(dim(h1)));
    if (h0->empty() && h1->empty()) r.notes.push_back("wall: both cohomologies vanish");
  }
  if (c.fixture) r.notes.push_back("recorded fixture");

  if (c.check_stability) {
    VerificationCase wider = c;
    wider.margin = c.margin + 1;
    bool stable = true;
    const auto a2 = algebraic_side(wider);
    for (std::size_t i = 0; i < a2.size() && i < r.side_a.size(); ++i)
      stable = stable && a2[i].character == r.side_a[i].character;
    r.notes.push_back(std::string("margin + 1: ") + (stable ? "unchanged" : "CHANGED"));
    // The other chart sees the weight-negated mirror (K-types are self-dual).
    bool mirror = true;
    if (c.family != Family::C) {
      VerificationCase neg = c;
      neg.lo = -c.hi;
      neg.hi = -c.lo;
      const auto bw = geometric_side(neg, Chart::W);
      for (std::size_t i = 0; i < bw.size(); ++i)
        mirror = mirror && negate_weights(bw[i].character) == r.side_b[i].character;
    }
    r.notes.push_back(std::string("chart swap: ") + (mirror ? "weight-negated mirror" : "NOT a mirror"));
    if (!stable || !mirror) r.match = false, r.mismatch_detail = "stability check failed";
  }
  return r;
}

std::string report_json(const Report& r, int indent) {
  ordered_json j;
  j["case"] = r.input.id;
  j["family"] = family_name(r.input.family);
  if (r.input.family == Family::D) {
    j["lambda"] = r.input.lambda;
    j["second_factor"] = family_name(r.input.second);
  } else {
    j["lambda"] = r.input.lambda.at(0);
  }
  if (r.input.parity) j["parity"] = *r.input.parity;
  j["window"] = {r.input.lo, r.input.hi};
  j["side_a"] = character_entries(r.side_a);
  j["side_b"] = character_entries(r.side_b);
  ordered_json pairs = ordered_json::array();
  for (const auto& [s, jj] : r.pairs) pairs.push_back(ordered_json{{"s", s}, {"j", jj}});
  j["pairs_compared"] = pairs;
  j["verdict"] = r.match ? "exact-match" : "mismatch";
  if (r.counterexample) j["counterexample"] = {{"weight", r.counterexample->coords}, {"detail", r.mismatch_detail}};
  j["ledger"] = {{"kl_twist", r.ledger.kl_twist},
                 {"canonical_Y", r.ledger.canonical_Y},
                 {"anticanonical_X", r.ledger.anticanonical_X}};
  j["notes"] = r.notes;
  return j.dump(indent);
}

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "case,side,degree,weight,multiplicity,parity\n";
  auto emit = [&](const char* side, const std::vector<DegreeCharacter>& dcs) {
    for (const auto& dc : dcs)
      for (const auto& [w, m] : dc.character.multiplicities) {
        os << r.input.id << ',' << side << ',' << dc.degree << ',';
        for (std::size_t i = 0; i < w.rank(); ++i) os << (i ? ";" : "") << w[i];
        os << ',' << m << ',';
        if (auto it = dc.character.parities.find(w); it != dc.character.parities.end()) os << it->second;
        os << '\n';
      }
  };
  emit("a", r.side_a);
  emit("b", r.side_b);
  return os.str();
}

std::vector<VerificationCase> default_grid(Family f) {
  std::vector<VerificationCase> out;
  switch (f) {
    case Family::A:
      for (int l = -2; l >= -8; --l) {
        VerificationCase c;
        c.id = "A:l=" + std::to_string(l);
        c.family = f;
        c.lambda = {l};
        out.push_back(c);
      }
      break;
    case Family::B:
      for (int l = 0; l <= 2; ++l)
        for (int p = 0; p <= 1; ++p) {
          VerificationCase c;
          c.id = "B:l=" + std::to_string(l) + ":p=" + std::to_string(p);
          c.family = f;
          c.lambda = {l};
          c.parity = p;
          out.push_back(c);
        }
      break;
    case Family::C:
      for (int n = 0; n <= 5; ++n) {
        VerificationCase c;
        c.id = "C:n=" + std::to_string(n);
        c.family = f;
        c.lambda = {n};
        c.lo = 0;
        c.hi = 12;
        out.push_back(c);
      }
      {
        VerificationCase c;
        c.id = "C:n=-1";
        c.family = f;
        c.lambda = {-1};
        c.lo = 0;
        c.hi = 12;
        c.fixture = true;
        out.push_back(c);
      }
      break;
    case Family::D: {
      const std::vector<std::pair<int, int>> aa = {{-2, -3}, {-4, -2}};
      for (auto [a, b] : aa) {
        VerificationCase c;
        c.id = "D:AxA:l=" + std::to_string(a) + "," + std::to_string(b);
        c.family = f;
        c.lambda = {a, b};
        c.lo = -8;
        c.hi = 8;
        out.push_back(c);
      }
      for (int p = 0; p <= 1; ++p) {
        VerificationCase c;
        c.id = "D:AxB:l=-3,1:p=" + std::to_string(p);
        c.family = f;
        c.second = Family::B;
        c.lambda = {-3, 1};
        c.parity = p;
        c.lo = -8;
        c.hi = 8;
        out.push_back(c);
      }
      break;
    }
  }
  return out;
}

std::string describe_family(Family f) {
  const PairData pair = family_pair(f, f == Family::D ? Family::B : Family::A);
  std::ostringstream os;
  os << "family " << family_name(f) << ": " << pair.family << "\n";
  os << "  g basis: ";
  for (std::size_t i = 0; i < pair.g->dim(); ++i) os << (i ? ", " : "") << pair.g->label(i);
  os << "\n  K: " << pair.K.name << (pair.K.kind == KDescriptor::Kind::SL2 ? " (SL2)" : " (torus)") << "\n";
  os << "  h basis: ";
  for (std::size_t i = 0; i < pair.h.dim(); ++i) os << (i ? ", " : "") << format_lie_element(*pair.g, pair.h.basis()[i]);
  os << "\n  L: " << pair.L.name << ", dim l = " << pair.l_dim << ", u = dim U = " << pair.u_dim << "\n";
  os << "  lambda: " << pair.lambda_domain << "\n";
  const Ledger l = ledger_for(f);
  os << "  ledger: kl_twist = " << l.kl_twist << ", canonical_Y = " << l.canonical_Y
     << ", anticanonical_X = " << l.anticanonical_X << "\n";
  switch (f) {
    case Family::A: os << "  geometric side: delta-function module at 0, H^0 only\n"; break;
    case Family::B: os << "  geometric side: Laurent sections on the open orbit with M-type parity\n"; break;
    case Family::C: os << "  geometric side: Cech cohomology of O(n) on P^1; H^s <-> (P)_{1-s}\n"; break;
    case Family::D: os << "  geometric side: Kunneth product of the factor localizations (A x A or A x B)\n"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// selftest

namespace {

struct Suite {
  std::vector<SelfTestResult> results;

  void run(const std::string& name, const std::function<std::string()>& body) {
    SelfTestResult r;
    r.name = name;
    try {
      const std::string failure = body();
      r.passed = failure.empty();
      r.detail = failure;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

RgKElt random_torus_element(const HeckeAlgebra& R, std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> n(lo, hi), e(0, 2), c(-3, 3), terms(1, 3);
  RgKElt x;
  const std::size_t d = R.U().dim();
  for (int t = terms(rng); t > 0; --t) {
    PBWMonomial m(d, 0);
    for (std::size_t i = R.k_dim(); i < d; ++i) m[i] = static_cast<unsigned>(e(rng));
    const int coef = c(rng);
    if (coef == 0) continue;
    x = x + R.element(rk_idempotent(Weight{n(rng)}), R.U().monomial(m, coef));
  }
  return x;
}

std::string all_ok(const std::vector<std::string>& failures) {
  if (failures.empty()) return "";
  std::string s = failures.front();
  if (failures.size() > 1) s += " (+" + std::to_string(failures.size() - 1) + " more)";
  return s;
}

std::vector<VerificationCase> all_cases() {
  std::vector<VerificationCase> cs;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (auto& c : default_grid(f)) cs.push_back(c);
  return cs;
}

}  // namespace

std::vector<SelfTestResult> selftest() {
  Suite suite;

  suite.run("hecke.associativity", [] {
    const HeckeAlgebra R(closed_orbit_pair());
    std::mt19937 rng(20261016);
    for (int i = 0; i < 100; ++i) {
      const RgKElt a = random_torus_element(R, rng, -3, 3), b = random_torus_element(R, rng, -3, 3),
                   c = random_torus_element(R, rng, -3, 3);
      if (!(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)))) return "triple " + std::to_string(i) + " not associative";
    }
    return std::string();
  });

  suite.run("hecke.approx_identity", [] {
    const HeckeAlgebra R(closed_orbit_pair());
    const Window w = Window::interval(-6, 6);
    const RgKElt z = R.approx_identity(w);
    if (!(R.mul(z, z) == z)) return std::string("z * z != z");
    std::mt19937 rng(7);
    int tested = 0;
    while (tested < 50) {
      const RgKElt x = random_torus_element(R, rng, -2, 2);
      if (!R.supported_in(x, w)) continue;
      ++tested;
      if (!(R.mul(z, x) == x) || !(R.mul(x, z) == x)) return std::string("z is not a unit on a window element");
    }
    const RgKElt outside = R.element(rk_idempotent(Weight{5}), R.U().one());
    if (R.mul(R.approx_identity(Window::interval(0, 1)), outside) == outside)
      return std::string("unit acts on an element outside its window");
    return std::string();
  });

  suite.run("hecke.basis_independence", [] {
    std::vector<std::string> fails;
    const HeckeAlgebra R(closed_orbit_pair());
    const UElt e = R.from_ambient({1, 0, 0}), f = R.from_ambient({0, 0, 1});
    const RKElt S = rk_idempotent(Weight{-1}) + rk_idempotent(Weight{1}) + rk_idempotent(Weight{3}) * ExactScalar(2);
    const RgKElt b = R.element(rk_idempotent(Weight{1}), f) + R.element(rk_idempotent(Weight{-1}), e * ExactScalar(3));
    if (!(R.product_formula(S, e + f, b, {e, f}) == R.product_formula(S, e + f, b, {e + f, e - f})))
      fails.push_back("torus product depends on the basis of span Ad(K) xi");
    const HeckeAlgebra C(borel_weil_bott_pair());
    const auto& U = C.U();
    for (int tau = 0; tau <= 4; ++tau)
      for (std::size_t g = 0; g < 3; ++g) {
        Vector xv(3, 0);
        xv[g] = 1;
        xv[(g + 1) % 3] = -2;
        SparseMatrix tm(tau + 1, tau + 1);
        for (int a = 0; a <= tau; ++a)
          for (int c = 0; c <= tau; ++c) tm.set(a, c, (a * 3 + c * 5) % 7 - 3);
        RKElt T;
        if (!tm.is_zero()) T.blocks.emplace(Weight{tau}, tm);
        RKElt SS;
        for (int s = 0; s <= tau + 2; ++s) SS.blocks.emplace(Weight{s}, SparseMatrix::identity(s + 1));
        const UElt xi = C.from_ambient(xv);
        const RgKElt tb = C.element(T, U.one());
        RKElt direct;
        if (!T.is_zero()) direct.blocks.emplace(Weight{tau}, sl2_irrep_matrix(tau, xv) * tm);
        const RgKElt expect = C.element(direct, U.one());
        const RgKElt viaStd = C.product_formula(SS, xi, tb, C.orbit_span_basis(xi));
        const RgKElt viaRot = C.product_formula(
            SS, xi, tb, {U.generator(0) + U.generator(2), U.generator(1) * ExactScalar(3), U.generator(0) - U.generator(2)});
        if (!(viaStd == expect) || !(viaRot == expect))
          fails.push_back("SL2 product formula disagrees at tau = " + std::to_string(tau));
      }
    return all_ok(fails);
  });

  suite.run("complex.d_squared", [] {
    std::vector<std::string> fails;
    for (const auto& c : all_cases()) {
      const PairData pair = family_pair(c.family, c.second);
      const StdComplex cx = build_standard_complex(pair, module_for(c, pair), c.window());
      if (auto f = cx.d_squared_failure())
        fails.push_back(c.id + ": d'^2 != 0 at " + to_string(f->first) + " degree " + std::to_string(f->second));
    }
    return all_ok(fails);
  });

  suite.run("negative.corrupt_sign", [] {
    const PairData pair = product_pair(closed_orbit_pair(), closed_orbit_pair());
    ComplexOptions o;
    o.corrupt_sign = true;
    const StdComplex cx =
        build_standard_complex(pair, one_dim_module(pair, {-2, -3, 0, 0}, Weight{-2, -3}), Window::box(2, -6, 6), o);
    if (!cx.d_squared_failure()) return std::string("corrupted sign not detected");
    return std::string();
  });

  suite.run("negative.jacobi", [] {
    LieAlg::Constants c(3, std::vector<Vector>(3, Vector(3, 0)));
    c[1][0] = {3, 0, 0};  // [h, e] = 3e (corrupted)
    c[0][1] = {-3, 0, 0};
    c[1][2] = {0, 0, -2};
    c[2][1] = {0, 0, 2};
    c[0][2] = {0, 1, 0};
    c[2][0] = {0, -1, 0};
    const LieAlg bad = LieAlg::unchecked({"e", "h", "f"}, c);
    const auto f = bad.find_structure_failure();
    if (!f || f->kind != "jacobi") return std::string("corrupted structure constant not detected");
    try {
      LieAlg checked({"e", "h", "f"}, c);
      return std::string("constructor accepted a non-Lie bracket");
    } catch (const InvalidLieAlgebra&) {
    }
    return std::string();
  });

  suite.run("twisted.bracket", [] {
    std::vector<std::string> fails;
    for (int l = -10; l <= 10; ++l) {
      for (Chart ch : {Chart::Z, Chart::W})
        if (auto f = bracket_failure(twisted_rep(l, ch)))
          fails.push_back("lambda0 = " + std::to_string(l) + ": pair " + std::to_string(f->first) + "," +
                          std::to_string(f->second));
      const TwistedRep t = transport_to_w(twisted_rep(l)), w = twisted_rep(l, Chart::W);
      if (!(t.rho == w.rho)) fails.push_back("chart transition fails at lambda0 = " + std::to_string(l));
      const TwistedRep tw = twist(twisted_rep(l), 3), d = twisted_rep(l + 3);
      if (!(tw.rho == d.rho)) fails.push_back("twist fails at lambda0 = " + std::to_string(l));
    }
    return all_ok(fails);
  });

  suite.run("modules.bracket", [] {
    std::vector<std::string> fails;
    const Window w = Window::interval(-16, 16);
    for (int l = -6; l <= 3; ++l) {
      if (auto f = check_bracket_invariant(delta_module(l, w))) fails.push_back("delta: " + f->describe());
      for (int p = 0; p <= 1; ++p)
        for (Chart ch : {Chart::Z, Chart::W})
          if (auto f = check_bracket_invariant(laurent_module(l, p, w, ch))) fails.push_back("Laurent: " + f->describe());
      if (auto f = check_bracket_invariant(global_sections_module(std::abs(l)))) fails.push_back("O(n): " + f->describe());
    }
    for (const auto& c : all_cases()) {
      if (c.family == Family::C) continue;
      const PairData pair = family_pair(c.family, c.second);
      if (auto f = check_bracket_invariant(p_deg0_oracle(pair, module_for(c, pair), c.window())))
        fails.push_back(c.id + " oracle: " + f->describe());
    }
    return all_ok(fails);
  });

  suite.run("jets.conformance", [] {
    std::vector<std::string> fails;
    for (int l = -8; l <= 2; ++l)
      for (unsigned p = 1; p <= 4; ++p) {
        const JetReport r = check_associated(JetModule(JetModule::Orbit::Closed, l, p));
        if (!r.ok()) fails.push_back("closed orbit: " + r.detail);
        if (!filtration_check(l, p, 10).ok()) fails.push_back("filtration at lambda0 = " + std::to_string(l));
      }
    for (int l = 0; l <= 2; ++l)
      for (int par = 0; par <= 1; ++par)
        for (unsigned p = 1; p <= 4; ++p) {
          const JetReport r = check_associated(JetModule(JetModule::Orbit::Open, l, p, par));
          if (!r.ok()) fails.push_back("open orbit: " + r.detail);
        }
    return all_ok(fails);
  });

  suite.run("oracle.equivalence", [] {
    std::vector<std::string> fails;
    for (const auto& c : all_cases()) {
      const PairData pair = family_pair(c.family, c.second);
      const GradedModule V = module_for(c, pair);
      if (!(character_of(p_deg0_oracle(pair, V, c.window())) == derived_p(pair, V, 0, c.window())))
        fails.push_back(c.id);
    }
    return all_ok(fails);
  });

  suite.run("duality", [] {
    std::vector<std::string> fails;
    for (Family f : {Family::A, Family::B})
      for (const auto& c : default_grid(f)) {
        const PairData pair = family_pair(c.family);
        const GradedModule V = module_for(c, pair);
        for (std::size_t j = 0; j <= 1; ++j)
          if (!(derived_i(pair, dual_module(V), j, c.window()) == negate_weights(derived_p(pair, V, j, c.window()))))
            fails.push_back(c.id + " j = " + std::to_string(j));
      }
    return all_ok(fails);
  });

  suite.run("complex.euler", [] {
    std::vector<std::string> fails;
    for (const auto& c : all_cases()) {
      const PairData pair = family_pair(c.family, c.second);
      const StdComplex cx = build_standard_complex(pair, module_for(c, pair), c.window());
      if (!(euler_characteristic(cx) == homology_euler_characteristic(cx))) fails.push_back(c.id);
    }
    return all_ok(fails);
  });

  suite.run("verify.grid", [] {
    std::vector<std::string> fails;
    for (auto c : all_cases()) {
      c.check_stability = true;
      const Report r = run_case(c);
      if (!r.match) fails.push_back(c.id + ": " + r.mismatch_detail);
    }
    return all_ok(fails);
  });

  return suite.results;
}

}  // namespace locind
