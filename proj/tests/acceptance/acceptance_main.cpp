// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only if
// all of them pass. Accepts --seed for the random corpora and --cli for the
// command-line tool used by the exit-code checks.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "support/test_support.hpp"
#include "toric/chern.hpp"
#include "toric/curves.hpp"
#include "toric/examples.hpp"
#include "toric/report.hpp"

namespace toric::testing {
std::uint64_t& seed() {
  static std::uint64_t value = 20261016;
  return value;
}
}  // namespace toric::testing

using namespace toric;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed checks for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string show(std::int64_t v) { return std::to_string(v); }

std::vector<int> monomial_exponents(const Monomial& m, std::size_t s) {
  std::vector<int> e(s, 0);
  for (auto j : m) ++e[j];
  return e;
}

// Random split bundles for the split-bundle and Newton criteria.
struct Corpus {
  std::vector<std::pair<std::string, RowModelBundle>> items;
};

Corpus make_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> fans{"P2", "P1xP1", "F1"};
  Corpus c;
  for (int i = 0; i < 200; ++i) {
    const auto& name = fans[static_cast<std::size_t>(i) % fans.size()];
    const auto s = builtin_fan(name).ray_count();
    c.items.emplace_back(name, testing::random_bundle(rng, s, 4, -3, 3));
  }
  return c;
}

void chow_fixtures(Outcome& out) {
  struct Fixture {
    std::string fan;
    std::vector<std::pair<std::string, std::int64_t>> degrees;
    bool check_dims;
  };
  const std::vector<Fixture> fixtures{
      {"P2", {{"x1*x2", 1}, {"x1^2", 1}}, true},
      {"P1xP1", {{"x1*x3", 1}, {"x1^2", 0}}, false},
      {"F1", {{"x2^2", -1}}, false},
      {"P3", {{"x1*x2*x3", 1}}, false},
  };
  for (const auto& f : fixtures) {
    const auto start = Clock::now();
    const ChowRing ring(builtin_fan(f.fan));
    if (f.check_dims)
      for (int k = 0; k <= 2; ++k)
        out.expect(ring.graded_dimension(k) == 1, f.fan + " dim A^" + std::to_string(k) + " = " +
                                                      std::to_string(ring.graded_dimension(k)));
    for (const auto& [text, want] : f.degrees) {
      const auto m = parse_monomial(text, ring.ray_count());
      const auto got = ring.degree(ChowClass(static_cast<int>(m.size()), {{m, 1}}));
      out.expect(got == want, f.fan + " degree(" + text + ") = " + show(got) + ", expected " + show(want));
    }
    const double t = seconds_since(start);
    out.expect(t < 1.0, f.fan + " took " + std::to_string(t) + " s");
  }
}

void split_oracle(Outcome& out, const Corpus& corpus) {
  const auto start = Clock::now();
  std::map<std::string, ChowRing> rings;
  for (const auto& name : {"P2", "P1xP1", "F1"}) rings.emplace(name, ChowRing(builtin_fan(name)));
  for (std::size_t i = 0; i < corpus.items.size(); ++i) {
    const auto& [name, e] = corpus.items[i];
    const auto& ring = rings.at(name);
    const auto report = chern_classes(ring, e, 2);
    const auto oracle = testing::split_product_expansion(e, 2);
    for (int k = 0; k <= 2; ++k)
      out.expect(ring.equal_classes(report.chern[static_cast<std::size_t>(k)], oracle[static_cast<std::size_t>(k)]),
                 "bundle " + std::to_string(i) + " on " + name + ": c_" + std::to_string(k) + " differs");
  }
  const double t = seconds_since(start);
  out.expect(t < 10.0, "took " + std::to_string(t) + " s");
}

void newton_identities(Outcome& out, const Corpus& corpus) {
  std::map<std::string, ChowRing> rings;
  for (const auto& name : {"P2", "P1xP1", "F1"}) rings.emplace(name, ChowRing(builtin_fan(name)));
  for (std::size_t i = 0; i < corpus.items.size(); ++i) {
    const auto& [name, e] = corpus.items[i];
    const auto& ring = rings.at(name);
    const auto tag = "bundle " + std::to_string(i) + " on " + name;
    const auto c = chern_classes(ring, e, 2);
    const auto n1 = newton_class(ring, e, 1);
    const auto n2 = newton_class(ring, e, 2);
    out.expect(ring.equal_classes(n1, c.chern[1]), tag + ": N_1 != c_1");
    const auto rhs = ring.multiply(c.chern[1], c.chern[1]) - c.chern[2] * std::int64_t{2};
    out.expect(ring.equal_classes(n2, rhs), tag + ": N_2 != c_1^2 - 2 c_2");
    try {
      const auto via_newton = chern_from_newton(ring, {n1, n2}, 2);
      for (int k = 0; k <= 2; ++k)
        out.expect(ring.equal_classes(via_newton[static_cast<std::size_t>(k)], c.chern[static_cast<std::size_t>(k)]),
                   tag + ": Newton recursion differs at c_" + std::to_string(k));
    } catch (const std::exception& ex) {
      out.expect(false, tag + ": Newton recursion failed: " + ex.what());
    }
  }
}

void dtable_paths(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-2, 2);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 3);
  for (const auto& name : {"P2", "P1xP1", "F1"}) {
    const ChowRing ring(builtin_fan(name));
    const auto s = ring.ray_count();
    for (int trial = 0; trial < 20; ++trial) {
      std::set<std::vector<std::int64_t>> chars;
      const auto r = rank_dist(rng);
      while (chars.size() < r) chars.insert({coord(rng), coord(rng)});
      DTableBundle table{r, {}, std::vector<std::vector<std::int64_t>>(s, std::vector<std::int64_t>(r, 1))};
      for (const auto& c : chars) table.characters.emplace_back(c);
      const auto cmp = compare_dtable_paths(ring, table, 2);
      const auto tag = std::string(name) + " table " + std::to_string(trial);
      out.expect(!cmp.diverges(), tag + " diverges");
      for (const auto& g : cmp.newton)
        out.expect(g.formal_agree && g.reduced_agree, tag + ": N_" + std::to_string(g.p) + " differs");
      for (std::size_t k = 0; k < cmp.chern_agree.size(); ++k)
        out.expect(cmp.chern_agree[k], tag + ": c_" + std::to_string(k) + " differs");
    }
  }

  // One character, multiplicity two at every ray of P2.
  const ChowRing p2(builtin_fan("P2"));
  const DTableBundle fixture{2, {Character{1, 0}}, {{2}, {2}, {2}}};
  const auto cmp = compare_dtable_paths(p2, fixture, 2);
  const ChowClass root(1, {{Monomial{0}, 1}, {Monomial{2}, -1}});
  const auto root_sq = formal_product(root, root);
  out.expect(cmp.diverges(), "divergence fixture not flagged");
  out.expect(cmp.newton.size() == 2, "divergence fixture: expected grades 1 and 2");
  if (cmp.newton.size() == 2) {
    out.expect(cmp.newton[1].literal_formal == root_sq * std::int64_t{4},
               "literal N_2 = " + format_class(cmp.newton[1].literal_formal) + ", expected 4*(x1 - x3)^2");
    out.expect(cmp.newton[1].row_formal == root_sq * std::int64_t{2},
               "row-model N_2 = " + format_class(cmp.newton[1].row_formal) + ", expected 2*(x1 - x3)^2");
  }
  const auto text = report::dtable_comparison_text(cmp);
  out.expect(text.find("DIVERGE") != std::string::npos, "divergence missing from the report");
  out.expect(text.find("N_2 literal = " + format_class(root_sq * std::int64_t{4})) != std::string::npos,
             "report does not show the literal N_2");
}

void residues(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (const auto& name : builtin_fan_names()) {
    const Fan fan = builtin_fan(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto e = testing::random_bundle(rng, fan.ray_count(), 4, -3, 3);
      for (std::size_t j = 0; j < fan.ray_count(); ++j) {
        const auto m = residue_matrix(e, static_cast<RayIndex>(j));
        for (std::size_t i = 0; i < e.rank(); ++i)
          out.expect(m.diagonal[i] == -e.rows()[i][j], name + ": residue entry differs from -pairing");
      }
    }
  }
  const ChowRing p2(builtin_fan("P2"));
  for (int trial = 0; trial < 30; ++trial) {
    const auto e = testing::random_bundle(rng, 3, 4, -3, 3);
    for (int p = 1; p <= 2; ++p) {
      // Direct multinomial sum of (-1)^p * p!/alpha! * trace(alpha) x^alpha.
      ChowClass direct(p);
      std::vector<Monomial> monomials{{}};
      for (int step = 0; step < p; ++step) {
        std::vector<Monomial> next;
        for (const auto& m : monomials)
          for (RayIndex j = 0; j < 3; ++j)
            if (m.empty() || j >= m.back()) {
              auto up = m;
              up.push_back(j);
              next.push_back(up);
            }
        monomials = std::move(next);
      }
      for (const auto& m : monomials) {
        const auto alpha = monomial_exponents(m, 3);
        std::int64_t coeff = 1;
        for (int k = 2; k <= p; ++k) coeff *= k;
        for (int a : alpha)
          for (int k = 2; k <= a; ++k) coeff /= k;
        if (p % 2 == 1) coeff = -coeff;
        direct.add_term(m, coeff * residue_trace(e, alpha));
      }
      out.expect(p2.equal_classes(direct, newton_class(p2, e, p)),
                 "residue traces do not reproduce N_" + std::to_string(p));
      out.expect(p2.equal_classes(newton_class_from_residues(p2, e, p), newton_class(p2, e, p)),
                 "newton_class_from_residues differs at N_" + std::to_string(p));
    }
  }
}

void verdicts(Outcome& out, std::uint64_t seed) {
  const ChowRing p2(builtin_fan("P2"));
  const auto a = semistability_verdict(p2, RowModelBundle(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  out.expect(a.semistable, "O(1)^3 not semistable");
  out.expect(a.common_line_class.has_value() && p2.equal_classes(*a.common_line_class, p2.divisor_class(0)),
             "O(1)^3 common class is not H");
  const auto b = semistability_verdict(p2, RowModelBundle(3, {{1, 0, 0}, {2, 0, 0}}));
  out.expect(!b.semistable, "O(1)+O(2) reported semistable");
  out.expect(b.witness.has_value(), "O(1)+O(2) has no witness wall");
  if (b.witness) out.expect(b.witness->row_degrees == std::vector<std::int64_t>{1, 2}, "witness degrees are not (1, 2)");
  std::mt19937_64 rng(seed);
  for (const auto& name : builtin_fan_names()) {
    const ChowRing ring(builtin_fan(name));
    for (int trial = 0; trial < 10; ++trial)
      out.expect(semistability_verdict(ring, testing::random_bundle(rng, ring.ray_count(), 1, -3, 3)).semistable,
                 name + ": line bundle not semistable");
  }
}

int run_cli(const std::string& cli, const std::string& args) {
  const std::string command = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void validation(Outcome& out, const std::string& cli, const std::string& fixtures) {
  out.expect(validate(builtin_fan("P2")).ok(), "P2 reported invalid");

  const auto missing = validate(Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{{0, 1}}, {{0, 2}}}));
  std::vector<std::vector<RayIndex>> walls;
  bool only_incomplete = true;
  for (const auto& v : missing.violations) {
    only_incomplete = only_incomplete && v.kind == ViolationKind::incomplete;
    walls.push_back(v.rays);
  }
  out.expect(only_incomplete && walls == std::vector<std::vector<RayIndex>>{{1}, {2}},
             "P2 minus a cone: expected completeness violations on walls {2},{3}");

  const auto det2 = validate(Fan(2, {{1, 0}, {1, 2}}, {{{0, 1}}}));
  bool found = false;
  for (const auto& v : det2.violations)
    found = found || (v.kind == ViolationKind::not_smooth && v.cones == std::vector<std::size_t>{0});
  out.expect(found, "det-2 cone: no smoothness violation on cone 0");

  const auto expect_exit = [&](const std::string& args, int want) {
    const int got = run_cli(cli, args);
    out.expect(got == want, "`" + args + "` exited " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  expect_exit("validate --fan " + fixtures + "/P2.json", 0);
  expect_exit("validate --fan " + fixtures + "/P2_missing_cone.json", 1);
  expect_exit("validate --fan " + fixtures + "/det2.json", 1);
  expect_exit("validate --fan " + fixtures + "/malformed.json", 2);
  expect_exit("validate --fan " + fixtures + "/does_not_exist.json", 2);
  expect_exit("chern --fan " + fixtures + "/P2.json --bundle " + fixtures + "/O1plusO2.json", 0);
  expect_exit("chern --fan " + fixtures + "/P2_missing_cone.json --bundle " + fixtures + "/O1plusO2.json", 1);
  expect_exit("example P2", 0);
  expect_exit("example P9", 2);
}

void scale(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto start = Clock::now();
  const ChowRing ring(testing::ten_ray_fourfold());
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  std::vector<std::vector<std::int64_t>> rows(6, std::vector<std::int64_t>(ring.ray_count()));
  for (auto& row : rows)
    for (auto& a : row) a = entry(rng);
  const RowModelBundle e(ring.ray_count(), rows);
  const auto report = chern_classes(ring, e, 4);
  out.expect(report.crosscheck.ok(), "cross-check failed: " + report.crosscheck.detail);
  const auto oracle = testing::split_product_expansion(e, 4);
  for (int k = 0; k <= 4; ++k)
    out.expect(ring.equal_classes(report.chern[static_cast<std::size_t>(k)], oracle[static_cast<std::size_t>(k)]),
               "c_" + std::to_string(k) + " differs from the product expansion");
  const double t = seconds_since(start);
  out.expect(t < 60.0, "took " + std::to_string(t) + " s");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks for the toric bundle library"};
  std::uint64_t seed = testing::seed();
  std::string cli = TORIC_CLI_PATH;
  std::string fixtures = TORIC_FIXTURE_DIR;
  app.add_option("--seed", seed, "seed for the random corpora");
  app.add_option("--cli", cli, "path to the toricbundle executable");
  app.add_option("--fixtures", fixtures, "directory holding the JSON fixtures");
  CLI11_PARSE(app, argc, argv);
  testing::seed() = seed;
  std::cout << "[seed " << seed << "]\n";

  const Corpus corpus = make_corpus(seed);
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"Chow ring fixtures", [](Outcome& o) { chow_fixtures(o); }},
      {"split-bundle product oracle", [&](Outcome& o) { split_oracle(o, corpus); }},
      {"Newton identities", [&](Outcome& o) { newton_identities(o, corpus); }},
      {"d-table literal vs row model", [&](Outcome& o) { dtable_paths(o, seed); }},
      {"residues", [&](Outcome& o) { residues(o, seed); }},
      {"semistability verdicts", [&](Outcome& o) { verdicts(o, seed); }},
      {"validation and exit codes", [&](Outcome& o) { validation(o, cli, fixtures); }},
      {"scale envelope", [&](Outcome& o) { scale(o, seed); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      criteria[i].second(outcome);
    } catch (const std::exception& ex) {
      outcome.failures.push_back(std::string("exception: ") + ex.what());
    }
    const bool ok = outcome.failures.empty();
    all = all && ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << ' ' << i + 1 << ": " << criteria[i].first << " (" << seconds_since(start)
         << " s)";
    std::cout << line.str() << '\n';
    for (std::size_t f = 0; f < outcome.failures.size() && f < 10; ++f) std::cout << "    " << outcome.failures[f] << '\n';
    if (outcome.failures.size() > 10) std::cout << "    ... " << outcome.failures.size() - 10 << " more\n";
  }
  return all ? 0 : 1;
}
