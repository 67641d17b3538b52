// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: eleven exact criteria, one PASS/FAIL line each. Exit status
// is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ogl/harness.hpp"

namespace {

using ogl::harness::Campaign;
using ogl::harness::VerificationReport;
using ogl::io::Json;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Campaign subspaces(const std::string& id, std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed) {
  Campaign c;
  c.lemma_id = id;
  c.n = n;
  c.k = k;
  c.trials = trials;
  c.seed = seed;
  return c;
}

Campaign operators(const std::string& id, std::vector<mpq_class> sigma, std::vector<std::size_t> d,
                   std::size_t trials, std::uint64_t seed) {
  Campaign c;
  c.lemma_id = id;
  c.sigma = std::move(sigma);
  c.d = std::move(d);
  c.trials = trials;
  c.seed = seed;
  return c;
}

/// Runs the campaign and folds its verdict into `o`.
VerificationReport run(const Campaign& c, Outcome& o) {
  VerificationReport r = ogl::harness::run_campaign(c);
  for (const auto& t : r.trials) {
    if (t.pass) continue;
    std::string why = t.error ? t.error->first + ": " + t.error->second
                              : (t.failures.empty() ? std::string("?") : t.failures.front());
    o.require(false, r.command + ": trial " + std::to_string(t.index) + ": " + why);
    break;
  }
  return r;
}

template <typename T>
std::set<T> observed(const VerificationReport& r, const char* key) {
  std::set<T> out;
  for (const auto& t : r.trials)
    if (t.counts.contains(key)) out.insert(t.counts[key].get<T>());
  return out;
}

Outcome geodesic_count() {
  Outcome o;
  const auto r = run(subspaces("geodesic-count-dim4", 4, 2, 500, 7), o);
  o.require(r.passed == 500, "pass rate below 500/500");
  for (const auto& t : r.trials)
    o.require(t.counts["middles"] == "two" && t.counts["orthogonal"] == true, "trial without two orthogonal middles");
  o.detail = o.pass ? "500/500 exactly two middles, orthogonal" : o.detail;
  return o;
}

Outcome clique_sizes() {
  Outcome o;
  std::size_t campaigns = 0;
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      const auto r = run(subspaces("clique-sizes", n, k, 20, 100 + 10 * n + k), o);
      o.require(r.trials.size() == 20, "wrong trial count");
      o.require(observed<std::size_t>(r, "star") == std::set<std::size_t>{n - k + 1}, "ortho-star size");
      o.require(observed<std::size_t>(r, "top") == std::set<std::size_t>{k + 1}, "ortho-top size");
      ++campaigns;
    }
  if (o.pass) o.detail = std::to_string(campaigns) + " (n,k) shapes x 20 bases";
  return o;
}

Outcome clique_intersections() {
  Outcome o;
  const auto r = run(subspaces("clique-intersections", 6, 3, 30, 2026), o);
  const std::set<std::size_t> all3{0, 1, 2};
  const auto same = observed<std::size_t>(r, "star_star_same");
  const auto distinct = observed<std::size_t>(r, "star_star_distinct");
  const auto star_top = observed<std::size_t>(r, "star_top");
  o.require(same == all3, "same-S star intersections do not realise exactly {0,1,2}");
  o.require(std::includes(all3.begin(), all3.end(), distinct.begin(), distinct.end()) && !distinct.count(2),
            "distinct-S star intersections outside {0,1}");
  o.require(star_top == all3, "star/top intersections do not realise exactly {0,1,2}");
  if (o.pass) o.detail = "same-S {0,1,2}, distinct-S within {0,1}, star/top {0,1,2}";
  return o;
}

Outcome two_extensions() {
  Outcome o;
  std::size_t total = 0;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 2}, {6, 3}, {8, 3}}) {
    const auto r = run(subspaces("two-extensions", n, k, 100, 300 + n), o);
    o.require(observed<std::size_t>(r, "exhaustive") == std::set<std::size_t>{2}, "exhaustion did not find exactly 2");
    total += r.passed;
  }
  o.require(total == 300, "pass rate below 300/300");
  if (o.pass) o.detail = "300/300 with exactly two extensions";
  return o;
}

Outcome unique_partner() {
  Outcome o;
  std::size_t total = 0;
  for (std::size_t k : {2, 3}) {
    const auto r = run(subspaces("unique-partner", k + 3, k, 100, 400 + k), o);
    o.require(observed<bool>(r, "type2_adjacent_to_z") == std::set<bool>{false}, "Type2 candidate adjacent to Z");
    total += r.passed;
  }
  o.require(total == 200, "pass rate below 200/200");
  if (o.pass) o.detail = "200/200 for k in {2,3}";
  return o;
}

Outcome compat_geodesics() {
  Outcome o;
  Campaign c;
  c.lemma_id = "compat-geodesics";
  c.trials = 500;
  c.seed = 500;
  const auto r = run(c, o);
  std::size_t compatible = 0, witnessed = 0;
  for (const auto& t : r.trials) {
    o.require(t.counts["n"].get<std::size_t>() <= 8, "ambient dimension above 8");
    if (t.counts["compatible"] == true)
      ++compatible;
    else if (t.counts["witness_length"].get<std::size_t>() > 0)
      ++witnessed;
  }
  o.require(r.passed == 500, "pass rate below 500/500");
  o.require(compatible > 0 && witnessed == 500 - compatible, "a non-compatible pair lacks a witness");
  o.require(observed<std::size_t>(r, "m").size() >= 3, "too few intersection dimensions exercised");
  if (o.pass) o.detail = std::to_string(compatible) + " compatible, " + std::to_string(witnessed) + " witnessed";
  return o;
}

Outcome distance_formula() {
  Outcome o;
  for (auto [n, k, pairs] : {std::tuple<std::size_t, std::size_t, std::size_t>{6, 3, 190}, {5, 2, 45}}) {
    // Trial 0 is the standard basis, i.e. the Johnson graph itself.
    const auto r = run(subspaces("distance-formula", n, k, 1, 7), o);
    o.require(r.trials.at(0).counts["pairs"] == 2 * pairs, "not every pair was checked in both graphs");
  }
  if (o.pass) o.detail = "J(6,3): 190 pairs, J(5,2): 45 pairs";
  return o;
}

Outcome dim4_exceptional() {
  Outcome o;
  const auto r = run(subspaces("dim4-exceptional", 4, 2, 10, 800), o);
  for (const auto& t : r.trials) {
    o.require(t.counts["pairs"] == 200 && t.counts["violations"] == 0, "violations found");
    o.require(t.counts["breaking_pair_found"] == true, "no adjacency-breaking pair");
  }
  o.require(r.passed == 10, "pass rate below 10/10");
  if (o.pass) o.detail = "10 families x 200 pairs, 0 violations";
  return o;
}

Outcome ops_adjacency() {
  Outcome o;
  const auto r = run(operators("ops-adjacency-equiv", {0, 1, 2}, {3, 3, 2}, 300, 900), o);
  // Four differing eigenspaces need four eigenvalues; checked on a second class.
  const auto r4 = run(operators("ops-adjacency-equiv", {0, 1, 2, 3}, {2, 2, 2, 2}, 60, 901), o);
  auto differing = observed<std::size_t>(r, "differing");
  const auto differing4 = observed<std::size_t>(r4, "differing");
  differing.insert(differing4.begin(), differing4.end());
  o.require(differing.count(2) && differing.count(3) && differing.count(4), "2-, 3- and 4-index cases not all seen");
  o.require(observed<bool>(r, "operator_level") == std::set<bool>{false, true}, "no non-adjacent controls");
  o.require(r.passed == 300 && r4.passed == 60, "routes disagree");
  if (o.pass) o.detail = "300 pairs on d={3,3,2} + 60 on d={2,2,2,2}, routes agree";
  return o;
}

Outcome six_bound() {
  Outcome o;
  const auto r3 = run(operators("ops-six-bound", {0, 1, 2}, {3, 3, 2}, 100, 1000), o);
  const auto r4 = run(operators("ops-six-bound", {0, 1, 2, 3}, {2, 2, 2, 2}, 100, 1001), o);
  std::size_t most = 0;
  for (const auto* r : {&r3, &r4})
    for (const auto& t : r->trials) most = std::max(most, t.counts.value("neighbors", std::size_t{0}));
  o.require(most <= 6, "more than six neighbours");
  o.require(observed<std::size_t>(r4, "differing") == std::set<std::size_t>{3, 4}, "4-index pairs missing");
  o.require(r3.passed + r4.passed == 200, "pass rate below 200/200");
  if (o.pass) o.detail = "200 pairs, at most " + std::to_string(most) + " neighbours";
  return o;
}

Outcome spectrum_swap() {
  Outcome o;
  const auto r = run(operators("spectrum-swap", {0, 1, 2}, {3, 3, 2}, 200, 1100), o);
  std::size_t midpoints = 0;
  for (const auto& t : r.trials)
    if (t.counts["noncommuting_adjacent"] == true) {
      o.require(t.counts["midpoint_verified"] == true, "midpoint failed");
      ++midpoints;
    }
  o.require(midpoints > 0, "no non-commuting adjacent pairs sampled");
  o.require(r.passed == 200, "pass rate below 200/200");
  if (o.pass) o.detail = "200 pairs, " + std::to_string(midpoints) + " midpoints verified";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"dim-4 geodesic count", geodesic_count},
      {"clique sizes", clique_sizes},
      {"clique intersections", clique_intersections},
      {"two extensions", two_extensions},
      {"unique partner", unique_partner},
      {"compatibility by geodesics", compat_geodesics},
      {"distance formula", distance_formula},
      {"dim-4 exceptional map", dim4_exceptional},
      {"operator adjacency equivalence", ops_adjacency},
      {"six-neighbour bound", six_bound},
      {"spectrum swap and midpoint", spectrum_swap},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2zu] %-32s %s  (%s; %.1fs)\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1fs\n", criteria.size() - failed, criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
