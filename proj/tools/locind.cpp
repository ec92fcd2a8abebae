#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "locind/harness.hpp"

using namespace locind;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CaseArgs {
  std::string family;
  std::vector<int> lambda;
  std::optional<int> parity;
  std::string window;
  std::optional<std::string> second;
  int margin = 4;
  bool stability = false;
};

void add_case_options(CLI::App* cmd, CaseArgs& a, bool family_required) {
  auto* fam = cmd->add_option("--family", a.family, "Pair family: A, B, C, D (or closed-orbit, open-orbit, borel-weil-bott, product)");
  if (family_required) fam->required();
  cmd->add_option("--lambda", a.lambda, "lambda0; for D one value per factor (--lambda -2 --lambda -3 or -2,-3)")
      ->delimiter(',')
      ->allow_extra_args(false);
  cmd->add_option("--parity", a.parity, "M-type parity for family B or a B factor of D")->check(CLI::Range(0, 1));
  cmd->add_option("--window", a.window, "Per-coordinate weight window lo:hi (K-types for C)");
  cmd->add_option("--second", a.second, "Second factor of a D product: A or B");
  cmd->add_option("--margin", a.margin, "Truncation margin (>= 4)");
  cmd->add_flag("--stability", a.stability, "Also check margin + 1 and the chart swap");
}

std::pair<int, int> parse_window(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--window expects lo:hi, got '" + s + "'");
  try {
    std::size_t p1 = 0, p2 = 0;
    const int lo = std::stoi(s.substr(0, colon), &p1);
    const int hi = std::stoi(s.substr(colon + 1), &p2);
    if (p1 != colon || p2 != s.size() - colon - 1) throw std::invalid_argument("trailing characters");
    if (lo > hi) throw UsageError("--window lower bound exceeds upper bound");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--window expects integers lo:hi, got '" + s + "'");
  }
}

/// The explicit case, or the default grid of the family when --lambda is absent.
std::vector<VerificationCase> cases_from(const CaseArgs& a) {
  const Family f = parse_family(a.family);
  std::vector<VerificationCase> cs;
  if (a.lambda.empty()) {
    cs = default_grid(f);
    if (a.second) {
      const Family s = parse_family(*a.second);
      std::erase_if(cs, [&](const VerificationCase& c) { return c.family == Family::D && c.second != s; });
    }
    for (auto& c : cs) {
      if (a.parity && c.parity) c.parity = a.parity;
      if (!a.window.empty()) std::tie(c.lo, c.hi) = parse_window(a.window);
    }
    if (a.parity) {
      std::erase_if(cs, [&](const VerificationCase& c) { return c.parity && c.id.find(":p=" + std::to_string(*a.parity)) == std::string::npos; });
    }
  } else {
    VerificationCase c;
    c.family = f;
    c.lambda = a.lambda;
    c.parity = a.parity;
    c.second = parse_family(a.second.value_or("A"));
    if (f == Family::C) c.lo = 0, c.hi = 12;
    if (f == Family::D) c.lo = -8, c.hi = 8;
    if (!a.window.empty()) std::tie(c.lo, c.hi) = parse_window(a.window);
    if ((f == Family::B || (f == Family::D && c.second == Family::B)) && !c.parity) c.parity = 0;
    std::ostringstream id;
    id << family_name(f);
    if (f == Family::D) id << ":" << family_name(Family::A) << "x" << family_name(c.second);
    id << (f == Family::C ? ":n=" : ":l=");
    for (std::size_t i = 0; i < c.lambda.size(); ++i) id << (i ? "," : "") << c.lambda[i];
    if (c.parity) id << ":p=" << *c.parity;
    c.id = id.str();
    cs.push_back(c);
  }
  for (auto& c : cs) {
    c.margin = a.margin;
    c.check_stability = a.stability;
  }
  return cs;
}

/// Runs the cases concurrently; results come back in case-id order.
template <class F>
auto run_all(const std::vector<VerificationCase>& cs, F f) {
  using R = decltype(f(cs.front()));
  std::vector<std::pair<std::string, std::future<R>>> jobs;
  for (const auto& c : cs) jobs.emplace_back(c.id, std::async(std::launch::async, f, c));
  std::vector<std::pair<std::string, R>> out;
  for (auto& [id, fut] : jobs) out.emplace_back(id, fut.get());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

void write_to(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw UsageError("cannot write '" + path + "'");
  os << text;
}

ordered_json side_json(const std::vector<DegreeCharacter>& side) {
  ordered_json arr = ordered_json::array();
  for (const auto& dc : side)
    for (const auto& [w, m] : dc.character.multiplicities) {
      ordered_json e{{"degree", dc.degree}, {"weight", w.coords}, {"mult", m}};
      if (auto it = dc.character.parities.find(w); it != dc.character.parities.end()) e["parity"] = it->second;
      arr.push_back(e);
    }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locind: cohomological induction vs. localization on sl2 instances"};
  app.require_subcommand(1);

  CaseArgs verify_args, induce_args, localize_args;
  std::string json_out = "-", csv_out, chart = "z", describe_family_name;

  auto* verify = app.add_subcommand("verify", "Run both sides and compare characters exactly");
  add_case_options(verify, verify_args, true);
  verify->add_option("--json", json_out, "Write the JSON report(s) here ('-' for stdout)");
  verify->add_option("--csv", csv_out, "Also write the character table as CSV");

  auto* induce = app.add_subcommand("induce", "Algebraic side only: (P)_j for every j");
  add_case_options(induce, induce_args, true);

  auto* localize = app.add_subcommand("localize", "Geometric side only: Cech H^0 and H^1");
  add_case_options(localize, localize_args, true);
  localize->add_option("--chart", chart, "Base chart: z or w")->check(CLI::IsMember({"z", "w"}));

  auto* st = app.add_subcommand("selftest", "Run the invariant suite with negative controls");

  auto* describe = app.add_subcommand("describe", "Describe the pair behind a family");
  describe->add_option("--family", describe_family_name, "Pair family")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      const auto cs = cases_from(verify_args);
      const auto results = run_all(cs, [](const VerificationCase& c) { return run_case(c); });
      bool all = true;
      std::string json, csv;
      if (results.size() == 1) {
        json = report_json(results.front().second) + "\n";
      } else {
        json = "[\n";
        for (std::size_t i = 0; i < results.size(); ++i)
          json += report_json(results[i].second) + (i + 1 < results.size() ? ",\n" : "\n");
        json += "]\n";
      }
      for (const auto& [id, r] : results) {
        all = all && r.match;
        std::cerr << (r.match ? "MATCH    " : "MISMATCH ") << id;
        if (!r.match) std::cerr << "  " << r.mismatch_detail;
        std::cerr << "\n";
        csv += csv.empty() ? report_csv(r) : report_csv(r).substr(report_csv(r).find('\n') + 1);
      }
      write_to(json_out, json);
      if (!csv_out.empty()) write_to(csv_out, csv);
      return all ? 0 : 1;
    }
    if (*induce || *localize) {
      const bool alg = induce->parsed();
      const auto cs = cases_from(alg ? induce_args : localize_args);
      const Chart ch = chart == "w" ? Chart::W : Chart::Z;
      const auto results = run_all(cs, [&](const VerificationCase& c) {
        return alg ? algebraic_side(c) : geometric_side(c, ch);
      });
      ordered_json arr = ordered_json::array();
      for (const auto& [id, side] : results)
        arr.push_back(ordered_json{{"case", id}, {alg ? "side_a" : "side_b", side_json(side)}});
      std::cout << (arr.size() == 1 ? arr.front() : arr).dump(2) << "\n";
      return 0;
    }
    if (*st) {
      bool all = true;
      for (const auto& r : selftest()) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
      }
      return all ? 0 : 1;
    }
    if (*describe) {
      std::cout << describe_family(parse_family(describe_family_name));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const WindowTooSmall& e) {
    std::cerr << "window too small: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
