#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "path_basis.hpp"
#include "spline.hpp"

using namespace splinez;
namespace fx = splinez::fixtures;

TEST_CASE("default window bound") {
  CHECK(default_window_bound(fx::p2_smallest()) == 42);
  CHECK(default_window_bound(fx::p3_ex()) == 360);
  CHECK(default_window_bound(fx::p2_equality()) == 6);  // equality edges do not enter
}

TEST_CASE("enumerate_splines on the two-vertex example") {
  EdgeLabeledGraph g = fx::p2_smallest();
  std::vector<Spline> all = enumerate_splines(g, EnumerationWindow::defaults(g));
  auto contains = [&](const Spline& f) {
    return std::find(all.begin(), all.end(), f) != all.end();
  };
  CHECK(contains({3, 10}));
  CHECK(contains({6, 20}));
  CHECK(contains({21, 0}));
  CHECK(contains({0, 14}));
  CHECK(contains({42, 42}));
  CHECK(contains({6, 6}));
  for (const Spline& f : all) CHECK(is_spline(g, f));
  CHECK(std::is_sorted(all.begin(), all.end()));  // lexicographic emission
}

TEST_CASE("enumerate_splines on a single vertex") {
  EdgeLabeledGraph g = EdgeLabeledGraph::make({3}, {});
  EnumerationWindow w = EnumerationWindow::uniform(g, 9);
  CHECK(enumerate_splines(g, w) == std::vector<Spline>{{0}, {3}, {6}, {9}});
}

TEST_CASE("enumerate_splines with an equality edge") {
  EdgeLabeledGraph g = fx::p2_equality();
  std::vector<Spline> all = enumerate_splines(g, EnumerationWindow::defaults(g));
  CHECK(all == std::vector<Spline>{{0, 0}, {6, 6}});
}

TEST_CASE("constructed splines appear in the window") {
  EdgeLabeledGraph g = fx::p3_ex();
  std::vector<Spline> all = enumerate_splines(g, EnumerationWindow::defaults(g));
  for (const Spline& f : {Spline{36, 96, 0}, Spline{0, 120, 0}, Spline{0, 0, 8}, Spline{180, 0, 0}})
    CHECK(std::find(all.begin(), all.end(), f) != all.end());
}

TEST_CASE("minimal_leading") {
  EdgeLabeledGraph g = fx::p3_ex();
  EnumerationWindow w = EnumerationWindow::defaults(g);
  CHECK(minimal_leading(g, 0, w) == 36);
  CHECK(minimal_leading(g, 1, w) == 120);
  CHECK(minimal_leading(g, 2, w) == 8);

  CHECK(minimal_leading(fx::p2_smallest(), 0, EnumerationWindow::defaults(fx::p2_smallest())) == 3);

  EdgeLabeledGraph t9 = fx::t9();
  CHECK(minimal_leading(t9, 6, EnumerationWindow::defaults(t9)) == 6);
}

TEST_CASE("minimal_leading reports an empty window") {
  EdgeLabeledGraph g = fx::p2_smallest();
  try {
    minimal_leading(g, 0, EnumerationWindow::uniform(g, 1));
    FAIL("expected no_flowup_found");
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_flowup_found);
  }
  // Equality edge pins the second entry to the first: no second flow-up.
  EdgeLabeledGraph eq = fx::p2_equality();
  CHECK_THROWS_AS(minimal_leading(eq, 1, EnumerationWindow::defaults(eq)), Error);
}

TEST_CASE("candidate budget raises size_exceeded") {
  EdgeLabeledGraph g = fx::p3_ex();
  OracleLimits tiny;
  tiny.max_candidates = 10;
  try {
    enumerate_splines(g, EnumerationWindow::defaults(g), tiny);
    FAIL("expected size_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == errc::size_exceeded);
  }
}

TEST_CASE("validate_all on the worked path") {
  ValidationReport r = validate_all(fx::p3_ex());
  CHECK(r.ok);
  CHECK(r.window_bound == 360);
  CHECK(r.checks.size() == 6);
  for (const CheckOutcome& c : r.checks) CHECK(c.ok);
}

TEST_CASE("validate_all on the zero-trail counterexample graph") {
  EdgeLabeledGraph g = fx::p3_trail();
  ValidationReport r = validate_all(g);
  CHECK(r.ok);
  // The minimal second flow-up class (0, 35, 0) is in the window.
  std::vector<Spline> all = enumerate_splines(g, EnumerationWindow::defaults(g));
  CHECK(std::find(all.begin(), all.end(), Spline{0, 35, 0}) != all.end());
  CHECK(minimal_leading(g, 1, EnumerationWindow::defaults(g)) == 35);
}

TEST_CASE("corrupted basis is caught") {
  EdgeLabeledGraph g = fx::p3_ex();
  FlowUpBasis bad = make_flowup_basis({{72, 192, 0}, {0, 120, 0}, {0, 0, 8}});
  CriterionResult res = verify_basis_criterion(g, bad, default_window_bound(g));
  CHECK(!res.ok);
  CHECK(res.counterexample.has_value());
}

TEST_CASE("validate_all handles a degenerate equality configuration") {
  // P2 with an equality edge: rank drops to 1, the basis checks are skipped,
  // the remaining checks still hold.
  ValidationReport r = validate_all(fx::p2_equality());
  CHECK(r.ok);
}
