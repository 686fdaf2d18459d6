#include <doctest.h>

#include <optional>
#include <vector>

#include "dijoins/dicut.hpp"
#include "dijoins/errors.hpp"
#include "dijoins/generators.hpp"
#include "dijoins/graph.hpp"
#include "dijoins/packing.hpp"

using namespace dijoins;

namespace {

// v -> x, v -> y, x -> y, all unit; v's star is a dicut
WeightedDigraph unit_star() {
  WeightedDigraph g;
  for (NodeId v = 0; v < 3; ++v) g.add_node(v);
  g.add_arc(0, 1, 1);  // v -> x
  g.add_arc(0, 2, 1);  // v -> y
  g.add_arc(1, 2, 1);  // x -> y
  return g;
}

WeightedDigraph unit_triangle() {
  WeightedDigraph g;
  for (NodeId v = 0; v < 3; ++v) g.add_node(v);
  g.add_arc(0, 1, 1);
  g.add_arc(1, 2, 1);
  g.add_arc(0, 2, 1);
  return g;
}

}  // namespace

TEST_SUITE("packing") {
  TEST_CASE("balance keeps totals and zeroes the window") {
    BalancedWeights b = balance_weights(std::vector<Weight>{1, 1, 1, 1, 1}, 2);
    CHECK(b.pivot == 2);
    CHECK(b.values == std::vector<Weight>{1, 1, 0, 1, 1});

    BalancedWeights all_out = balance_weights(std::vector<Weight>{2, 3}, 0);
    CHECK(all_out.pivot == 1);
    CHECK(all_out.values == std::vector<Weight>{0, 0});

    BalancedWeights all_in = balance_weights(std::vector<Weight>{0, 0}, 2);
    CHECK(all_in.pivot == 2);
    CHECK(all_in.values == std::vector<Weight>{0, 0});

    BalancedWeights tight = balance_weights(std::vector<Weight>{2, 1, 1}, 1);
    // suffix after index 1 is 1 <= 2, so the pivot is the split itself
    CHECK(tight.pivot == 1);
    CHECK(tight.values == std::vector<Weight>{2, 1, 1});
  }

  TEST_CASE("balance rejects bad inputs") {
    CHECK_THROWS_AS(balance_weights(std::vector<Weight>{1, 2}, -1),
                    invalid_input);
    CHECK_THROWS_AS(balance_weights(std::vector<Weight>{1, 2}, 3),
                    invalid_input);
    CHECK_THROWS_AS(balance_weights(std::vector<Weight>{-1, 2}, 1),
                    invalid_input);
    CHECK_THROWS_AS(balance_weights(std::vector<Weight>{3, 1}, 1),
                    invalid_input);
  }

  TEST_CASE("greedy matching fills northwest first") {
    std::vector<MatchingEntry> m =
        greedy_matching(std::vector<Weight>{1, 1, 0, 1, 1}, 2);
    REQUIRE(m.size() == 2);
    CHECK(m[0].row == 0);
    CHECK(m[0].col == 3);
    CHECK(m[0].amount == 1);
    CHECK(m[1].row == 1);
    CHECK(m[1].col == 4);
    CHECK(m[1].amount == 1);

    std::vector<MatchingEntry> staircase =
        greedy_matching(std::vector<Weight>{2, 1, 1, 2}, 2);
    REQUIRE(staircase.size() == 3);
    CHECK(staircase[0].row == 0);
    CHECK(staircase[0].col == 2);
    CHECK(staircase[0].amount == 1);
    CHECK(staircase[1].row == 0);
    CHECK(staircase[1].col == 3);
    CHECK(staircase[1].amount == 1);
    CHECK(staircase[2].row == 1);
    CHECK(staircase[2].col == 3);
    CHECK(staircase[2].amount == 1);

    CHECK_THROWS_AS(greedy_matching(std::vector<Weight>{1, 0}, 1),
                    invalid_input);
  }

  TEST_CASE("tournament order around a source") {
    WeightedDigraph g = unit_star();
    TournamentOrder t = tournament_order(g, 0);
    CHECK(t.vertex == 0);
    CHECK(t.order == std::vector<NodeId>{1, 2});
    CHECK(t.split == 0);
    CHECK(t.weights == std::vector<Weight>{1, 1});
    CHECK(t.arcs == std::vector<ArcId>{0, 1});
  }

  TEST_CASE("tournament order rejects non-simplicial or doubled stars") {
    WeightedDigraph fork;  // x <- v -> y with x, y unrelated
    for (NodeId v = 0; v < 3; ++v) fork.add_node(v);
    fork.add_arc(0, 1, 1);
    fork.add_arc(0, 2, 1);
    CHECK_THROWS_AS(tournament_order(fork, 0), invalid_input);

    WeightedDigraph doubled = unit_star();
    doubled.add_arc(0, 1, 2);  // second arc between v and x
    CHECK_THROWS_AS(tournament_order(doubled, 0), invalid_input);
  }

  TEST_CASE("elimination step at a dicut star") {
    WeightedDigraph g = unit_star();
    EliminationStep step = make_elimination_step(g, 0, false);
    CHECK(step.vertex_star_is_dicut);
    CHECK_FALSE(step.reversed);
    CHECK(step.pivot == 1);
    CHECK(step.balanced == std::vector<Weight>{0, 0});
    CHECK(step.matching.empty());
    REQUIRE(step.adjustments.size() == 1);
    CHECK(step.adjustments[0].row == 0);
    CHECK(step.adjustments[0].col == 1);
    CHECK(step.adjustments[0].arc == 2);
    CHECK(step.adjustments[0].base == 1);
    CHECK(step.adjustments[0].delta == 1);
    REQUIRE(step.first_row.size() == 1);
    CHECK(step.first_row[0].col == 1);
    CHECK(step.first_row[0].arc == 2);
    CHECK(step.first_row[0].base == 1);

    WeightedDigraph reduced = delete_vertex(g, 0);
    transfer_weights(reduced, step);
    CHECK(reduced.weight(2) == 2);

    // stale bases are detected
    WeightedDigraph stale = delete_vertex(g, 0);
    stale.set_weight(2, 5);
    CHECK_THROWS_AS(transfer_weights(stale, step), invalid_input);
  }

  TEST_CASE("sink elimination requires reversing first") {
    WeightedDigraph g = unit_triangle();
    // node 2 is a sink: in-side sum 2 exceeds out-side sum 0
    CHECK_THROWS_AS(make_elimination_step(g, 2, false), invalid_input);
    WeightedDigraph r = reverse(g);
    EliminationStep step = make_elimination_step(r, 2, true);
    CHECK(step.reversed);
    CHECK(step.vertex_star_is_dicut);
  }

  TEST_CASE("mapping back threads the deleted star") {
    WeightedDigraph g = unit_star();
    EliminationStep step = make_elimination_step(g, 0, false);
    Packing reduced;
    reduced.tau = 2;
    reduced.entries.push_back(PackingEntry{{2}, 2});
    Packing lifted = mapping_back(reduced, step);
    REQUIRE(lifted.entries.size() == 2);
    CHECK(lifted.entries[0].arcs == std::vector<ArcId>{0, 2});
    CHECK(lifted.entries[0].multiplicity == 1);
    CHECK(lifted.entries[1].arcs == std::vector<ArcId>{1});
    CHECK(lifted.entries[1].multiplicity == 1);
    CHECK(lifted.total_multiplicity() == 2);
  }

  TEST_CASE("packing the unit triangle") {
    Packing p = pack_dijoins(unit_triangle());
    REQUIRE(p.tau.has_value());
    CHECK(*p.tau == 2);
    REQUIRE(p.entries.size() == 2);
    CHECK(p.entries[0].arcs == std::vector<ArcId>{0, 1});
    CHECK(p.entries[0].multiplicity == 1);
    CHECK(p.entries[1].arcs == std::vector<ArcId>{2});
    CHECK(p.entries[1].multiplicity == 1);
    CHECK(validate_packing(unit_triangle(), p).ok());
  }

  TEST_CASE("packing a weighted path reuses one dijoin") {
    WeightedDigraph g;
    for (NodeId v = 0; v < 3; ++v) g.add_node(v);
    g.add_arc(0, 1, 2);
    g.add_arc(1, 2, 2);
    Packing p = pack_dijoins(g);
    CHECK(*p.tau == 2);
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0].arcs == std::vector<ArcId>{0, 1});
    CHECK(p.entries[0].multiplicity == 2);
  }

  TEST_CASE("packing the unit star splits around the dicut star") {
    Packing p = pack_dijoins(unit_star());
    CHECK(*p.tau == 2);
    REQUIRE(p.entries.size() == 2);
    CHECK(p.entries[0].arcs == std::vector<ArcId>{0, 2});
    CHECK(p.entries[1].arcs == std::vector<ArcId>{1});
  }

  TEST_CASE("single arc packs its weight") {
    WeightedDigraph g;
    g.add_node(0);
    g.add_node(1);
    g.add_arc(0, 1, 3);
    Packing p = pack_dijoins(g);
    CHECK(*p.tau == 3);
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0].arcs == std::vector<ArcId>{0});
    CHECK(p.entries[0].multiplicity == 3);
  }

  TEST_CASE("degenerate inputs") {
    WeightedDigraph empty;
    Packing p0 = pack_dijoins(empty);
    CHECK_FALSE(p0.tau.has_value());
    CHECK(p0.entries.empty());

    WeightedDigraph point;
    point.add_node(5);
    Packing p1 = pack_dijoins(point);
    CHECK_FALSE(p1.tau.has_value());

    WeightedDigraph two_cycle;
    two_cycle.add_node(0);
    two_cycle.add_node(1);
    two_cycle.add_arc(0, 1, 1);
    two_cycle.add_arc(1, 0, 1);
    Packing p2 = pack_dijoins(two_cycle);
    CHECK_FALSE(p2.tau.has_value());
    CHECK(p2.entries.empty());
    CHECK(validate_packing(two_cycle, p2).ok());

    WeightedDigraph zero;
    zero.add_node(0);
    zero.add_node(1);
    zero.add_arc(0, 1, 0);
    Packing p3 = pack_dijoins(zero);
    REQUIRE(p3.tau.has_value());
    CHECK(*p3.tau == 0);
    CHECK(p3.entries.empty());
    CHECK(validate_packing(zero, p3).ok());
  }

  TEST_CASE("parallel arcs are split when lifting through the condensation") {
    WeightedDigraph g;
    g.add_node(0);
    g.add_node(1);
    g.add_arc(0, 1, 1);
    g.add_arc(0, 1, 1);
    Packing p = pack_dijoins(g);
    CHECK(*p.tau == 2);
    REQUIRE(p.entries.size() == 2);
    CHECK(p.entries[0].arcs == std::vector<ArcId>{0});
    CHECK(p.entries[1].arcs == std::vector<ArcId>{1});
    CHECK(validate_packing(g, p).ok());
  }

  TEST_CASE("cycles collapse before packing") {
    WeightedDigraph g;
    for (NodeId v = 0; v < 3; ++v) g.add_node(v);
    g.add_arc(0, 1, 1);
    g.add_arc(1, 0, 1);
    g.add_arc(1, 2, 7);
    Packing p = pack_dijoins(g);
    CHECK(*p.tau == 7);
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0].arcs == std::vector<ArcId>{2});
    CHECK(p.entries[0].multiplicity == 7);
    CHECK(validate_packing(g, p).ok());
  }

  TEST_CASE("step verification holds on random chordal instances") {
    PackOptions options;
    options.verify_steps = true;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      ChordalParams params;
      params.n = 2 + static_cast<int>(seed % 9);
      params.density = 0.2 + 0.2 * static_cast<double>(seed % 4);
      params.max_weight = 4;
      params.seed = seed + 1000;
      WeightedDigraph g = random_chordal_digraph(params);
      PackStats stats;
      Packing p = pack_dijoins(g, options, &stats);
      CHECK(validate_packing(g, p).ok());
      CHECK(stats.steps_verified == stats.elimination_steps);
      if (p.tau && *p.tau > 0)
        CHECK(stats.support_condensed <=
              stats.condensed_arcs - stats.condensed_nodes + 2);
    }
  }

  TEST_CASE("validator flags each broken invariant") {
    WeightedDigraph tri = unit_triangle();
    Packing good = pack_dijoins(tri);
    CHECK(validate_packing(tri, good).ok());

    Packing wrong_tau = good;
    wrong_tau.tau = 3;
    PackingInvariantReport r1 = validate_packing(tri, wrong_tau);
    CHECK_FALSE(r1.tau_matches_min_dicut);
    // the sum is checked against the true minimum, which the entries match
    CHECK(r1.multiplicities_sum_to_tau);
    CHECK_FALSE(r1.ok());
    CHECK_FALSE(r1.detail.empty());

    Packing missing;
    missing.tau = 2;
    missing.entries.push_back(PackingEntry{{2}, 1});
    PackingInvariantReport r2 = validate_packing(tri, missing);
    CHECK(r2.tau_matches_min_dicut);
    CHECK_FALSE(r2.multiplicities_sum_to_tau);
    CHECK(r2.all_entries_are_dijoins);

    Packing duplicated;
    duplicated.tau = 2;
    duplicated.entries.push_back(PackingEntry{{2}, 1});
    duplicated.entries.push_back(PackingEntry{{2}, 1});
    PackingInvariantReport r3 = validate_packing(tri, duplicated);
    CHECK_FALSE(r3.entries_distinct);

    Packing not_dijoin;
    not_dijoin.tau = 2;
    not_dijoin.entries.push_back(PackingEntry{{0}, 2});
    PackingInvariantReport r4 = validate_packing(tri, not_dijoin);
    CHECK_FALSE(r4.all_entries_are_dijoins);

    Packing overloaded;
    overloaded.tau = 2;
    overloaded.entries.push_back(PackingEntry{{0, 1}, 2});
    PackingInvariantReport r5 = validate_packing(tri, overloaded);
    CHECK_FALSE(r5.capacities_respected);
    CHECK(r5.all_entries_are_dijoins);

    Packing unknown;
    unknown.tau = 2;
    unknown.entries.push_back(PackingEntry{{99}, 2});
    CHECK_THROWS_AS(validate_packing(tri, unknown), invalid_input);

    Packing nonpositive;
    nonpositive.tau = 2;
    nonpositive.entries.push_back(PackingEntry{{2}, 0});
    CHECK_THROWS_AS(validate_packing(tri, nonpositive), invalid_input);

    WeightedDigraph single;
    single.add_node(0);
    single.add_node(1);
    single.add_arc(0, 1, 3);
    Packing padded;
    padded.tau = 3;
    padded.entries.push_back(PackingEntry{{}, 1});
    padded.entries.push_back(PackingEntry{{0}, 2});
    PackingInvariantReport r6 = validate_packing(single, padded);
    CHECK_FALSE(r6.support_within_bound);  // two entries, bound is one
    CHECK_FALSE(r6.all_entries_are_dijoins);

    Packing no_dicut_claim;  // claiming no dicut where one exists
    PackingInvariantReport r7 = validate_packing(tri, no_dicut_claim);
    CHECK_FALSE(r7.tau_matches_min_dicut);
  }
}
