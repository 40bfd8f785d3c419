#include "polyvol/andreev.hpp"
#include "polyvol/bounds.hpp"
#include "polyvol/canonical.hpp"
#include "polyvol/decompose.hpp"
#include "polyvol/generators.hpp"
#include "polyvol/io.hpp"
#include "polyvol/numerics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

using namespace polyvol;
using nlohmann::json;

namespace {

enum exit_code { ok = 0, rejected = 1, malformed = 2 };

// thrown for bad CLI arguments that CLI11 itself cannot catch
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool structured = false;

labeled_polyhedron load(const std::string& path) {
  if (path.empty() || path == "-") return read_polyhedron(std::cin);
  std::ifstream in(path);
  if (!in) throw format_error("cannot open " + path);
  return read_polyhedron(in);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string fmt(double x, int digits = 9) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void print_lines(const char* head, const std::vector<std::string>& xs) {
  for (const auto& x : xs) std::cout << head << x << "\n";
}

// p/q meaning pi*p/q
double pi_times(const std::string& text) {
  try {
    return parse_pi_fraction(text).radians();
  } catch (const std::exception& e) {
    throw usage_error("expected p/q, got '" + text + "': " + e.what());
  }
}

int run_validate(const std::string& path, bool generalized) {
  auto p = load(path);
  realizability_report r;
  try {
    r = generalized ? check_generalized(p) : check_andreev(p);
  } catch (const andreev_error& e) {
    if (structured)
      emit({{"realizable", false}, {"error", e.what()}});
    else
      std::cout << "not realizable: " << e.what() << "\n";
    return rejected;
  }
  if (structured) {
    emit(to_json(r));
  } else {
    std::cout << (r.realizable ? "realizable" : "not realizable");
    if (r.realizable) std::cout << (r.finite_volume ? ", finite volume" : ", infinite volume");
    std::cout << "\n";
    for (const auto& v : r.violated) std::cout << "  violates " << v.condition << ": " << v.witness << "\n";
    std::map<std::string, int> kinds;
    for (auto k : r.vertex_types) ++kinds[to_string(k)];
    for (const auto& [k, c] : kinds) std::cout << "  " << c << " " << k << " vertices\n";
    print_lines("  note: ", r.flags);
  }
  return r.realizable ? ok : rejected;
}

std::vector<std::vector<std::int64_t>> at_codes(const decomposition_result& r) {
  std::vector<std::vector<std::int64_t>> codes;
  for (const auto& q : r.atoroidal) codes.push_back(canonical_code(q));
  std::sort(codes.begin(), codes.end());
  return codes;
}

int run_decompose(const std::string& path, int trials) {
  auto p = load(path);
  decomposition_result r;
  bool canonical = true;
  try {
    r = decompose(p);
    auto base = at_codes(r);
    for (int t = 1; t <= trials; ++t)
      if (at_codes(decompose(p, {.seed = static_cast<std::uint64_t>(t)})) != base) canonical = false;
  } catch (const decompose_error& e) {
    if (structured)
      emit({{"error", e.what()}});
    else
      std::cout << "cannot decompose: " << e.what() << "\n";
    return rejected;
  }
  if (structured) {
    json j = to_json(r);
    if (trials > 0) j["canonicity"] = {{"trials", trials}, {"identical", canonical}};
    emit(j);
  } else {
    std::cout << r.seifert_fibered.size() << " Seifert fibered, " << r.atoroidal.size() << " atoroidal\n";
    for (const auto& q : r.seifert_fibered)
      std::cout << "  SF: " << q.vertex_count() << " vertices, " << q.face_count() << " faces\n";
    for (const auto& q : r.atoroidal)
      std::cout << "  AT: " << q.vertex_count() << " vertices, " << q.face_count() << " faces\n";
    std::cout << "  " << r.spherical_splits.size() << " spherical and " << r.euclidean3_splits.size()
              << " euclidean 3-circuit splits, " << r.splits.size() << " 4-circuit splits\n";
    for (const auto& s : r.splits)
      std::cout << "  step " << s.step << (s.nontrivial ? " nontrivial" : " trivial") << " c " << s.c_before
                << " -> " << s.c_after << "\n";
    if (trials > 0)
      std::cout << "  atoroidal multiset over " << trials << " random orders: "
                << (canonical ? "identical" : "DIFFERS") << "\n";
    print_lines("  note: ", r.flags);
  }
  return ok;
}

int run_bounds(const std::string& path) {
  auto p = load(path);
  bound_report r;
  try {
    r = estimate(p);
  } catch (const bounds_error& e) {
    if (structured)
      emit({{"error", e.what()}, {"code", to_string(e.code())}});
    else
      std::cout << "no bound: " << e.what() << "\n";
    return rejected;
  }
  if (structured) {
    emit(to_json(r));
    return ok;
  }
  std::cout << "lower " << fmt(r.lower) << " (" << r.lower_route << ")\n";
  for (const auto& c : r.breakdown)
    std::cout << "  " << c.component << ": " << c.theorem << " " << to_string(c.expr) << " = " << fmt(c.value)
              << "\n";
  std::cout << "upper " << fmt(r.upper) << "\n";
  for (const auto& c : r.upper_breakdown)
    std::cout << "  " << c.theorem << " " << to_string(c.expr) << " = " << fmt(c.value) << "\n";
  print_lines("  note: ", r.flags);
  return ok;
}

int run_cube(const std::string& family, const std::string& mu_text) {
  double mu = pi_times(mu_text);
  cube_family f = family == "c2" ? cube_family::c2 : cube_family::c1;
  double v = f == cube_family::c1 ? c1_volume(mu) : c2_volume(mu);
  if (structured)
    emit({{"family", family}, {"mu", sig9(mu)}, {"volume", sig9(v)}});
  else
    std::cout << fmt(v) << "\n";
  return ok;
}

int run_lobachevsky(const std::string& theta_text) {
  double t = pi_times(theta_text);
  double v = lobachevsky(t);
  if (structured)
    emit({{"theta", sig9(t)}, {"value", sig9(v)}});
  else
    std::cout << fmt(v) << "\n";
  return ok;
}

int run_prism_gen(int n, const std::string& pattern, const std::string& vertical) {
  json notes = json::object();
  prism_labels labels;
  try {
    if (pattern == "alternating") {
      labels = alternating_labels(n);
    } else if (pattern == "right-horizontal") {
      labels = right_horizontal_labels(n, parse_pi_fraction(vertical));
    } else if (pattern.rfind("basic:", 0) == 0) {
      int r = 0, s = 0;
      char comma = 0;
      std::istringstream in(pattern.substr(6));
      if (!(in >> r >> comma >> s) || comma != ',' || !in.eof()) throw usage_error("pattern basic:r,s");
      labels = basic_prism_labels(n, r, s);
      auto sol = solve_basic_prism(r, s);
      if (sol.mu) notes["mu"] = sig9(*sol.mu);
      if (sol.nu) notes["nu"] = sig9(*sol.nu);
      notes["volume"] = sig9(basic_prism_volume(r, s));
    } else {
      throw usage_error("unknown pattern '" + pattern + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  json doc = to_json(make_prism(n, labels));
  if (!notes.empty()) doc["notes"] = notes;
  // fixtures are always files, whatever --format says
  emit(doc);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic Coxeter polyhedra: realizability, decomposition, volume bounds"};
  app.require_subcommand(1, 1);
  std::string format = "human";
  app.add_option("--format", format, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();

  std::string path;
  bool generalized = false;
  auto* validate = app.add_subcommand("validate", "check the realizability conditions");
  validate->add_option("file", path, "polyhedron file, - for stdin");
  validate->add_flag("--generalized", generalized, "allow hyperideal vertices");

  int trials = 0;
  auto* dec = app.add_subcommand("decompose", "split along prismatic 3- and 4-circuits");
  dec->add_option("file", path, "polyhedron file, - for stdin");
  dec->add_option("--trials", trials, "random choice orders to compare")->check(CLI::NonNegativeNumber);

  auto* bnd = app.add_subcommand("bounds", "lower and upper volume bounds");
  bnd->add_option("file", path, "polyhedron file, - for stdin");

  std::string family = "c1", mu = "0";
  auto* cube = app.add_subcommand("cube-volume", "volume of a Lambert cube family member");
  cube->add_option("--family", family)->check(CLI::IsMember({"c1", "c2"}))->capture_default_str();
  cube->add_option("--mu", mu, "determining angle as p/q of pi")->required();

  std::string theta;
  auto* lob = app.add_subcommand("lobachevsky", "Lobachevsky function");
  lob->add_option("--theta", theta, "argument as p/q of pi")->required();

  int n = 0;
  std::string pattern, vertical = "1/2";
  auto* gen = app.add_subcommand("prism-gen", "write a labeled prism file");
  gen->add_option("--n", n, "number of lateral faces")->required()->check(CLI::Range(3, 1000));
  gen->add_option("--pattern", pattern, "alternating | basic:r,s | right-horizontal")->required();
  gen->add_option("--vertical", vertical, "vertical label for right-horizontal, p/q of pi")->capture_default_str();

  for (auto* sub : {validate, dec, bnd, cube, lob, gen})
    sub->add_option("--format", format, "human or structured")->check(CLI::IsMember({"human", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : malformed;
  }
  structured = format == "structured";

  try {
    if (*validate) return run_validate(path, generalized);
    if (*dec) return run_decompose(path, trials);
    if (*bnd) return run_bounds(path);
    if (*cube) return run_cube(family, mu);
    if (*lob) return run_lobachevsky(theta);
    if (*gen) return run_prism_gen(n, pattern, vertical);
  } catch (const format_error& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return malformed;
  } catch (const polyhedron_error& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return malformed;
  } catch (const usage_error& e) {
    std::cerr << "bad arguments: " << e.what() << "\n";
    return malformed;
  } catch (const std::domain_error& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return rejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rejected;
  }
  return ok;
}
