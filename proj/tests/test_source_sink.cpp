#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "sosi/oracle.hpp"
#include "sosi/source_sink.hpp"

using namespace sosi;

namespace {

void check_certificate(const Digraph& d, const WeightPair& w, const SoSiCertificate& cert) {
  CHECK(cert.checks.all(w.integral()));
  CHECK(cert.value == pair_weight(w, cert.sources, cert.sinks));
  CHECK(cert.value == cert.cover.cost);
  CHECK(cert.value == cert.objective);
  CHECK(is_so_si_witness(d, cert.sources, cert.sinks, cert.witness));
  NodeSet both;
  std::set_intersection(cert.sources.begin(), cert.sources.end(), cert.sinks.begin(), cert.sinks.end(),
                        std::back_inserter(both));
  CHECK(both.empty());
  CHECK(is_circular_cover(BiDigraph(d), w, cert.cover));
}

}  // namespace

TEST_CASE("auxiliary network shape") {
  const AuxNetwork one(fixtures::single_arc().digraph, fixtures::uniform_pair(2, 1));
  CHECK(one.instance().digraph.node_count() == 6);
  CHECK(one.instance().digraph.arc_count() == 10);

  const auto g = fixtures::fig2();
  const AuxNetwork aux(g.digraph, WeightPair::zero(7));
  CHECK(aux.instance().digraph.node_count() == 21);
  CHECK(aux.instance().digraph.arc_count() == 62);
  for (auto x : aux.instance().lower) CHECK(x == 0);

  const auto& inst = aux.instance();
  for (ArcId a = 0; a < inst.digraph.arc_count(); ++a) {
    const AuxArcOrigin& o = aux.origin(a);
    const bool vertical = o.kind == AuxArcKind::kSinkVertical || o.kind == AuxArcKind::kSourceVertical;
    CHECK(inst.cost[a] == (!vertical && aux.bidigraph().is_original(o.index) ? 1 : 0));
  }
  for (NodeId v = 0; v < 7; ++v) {
    CHECK(inst.digraph.arc(aux.sink_vertical(v)) == Arc{aux.sink_copy(v), aux.middle(v)});
    CHECK(inst.digraph.arc(aux.source_vertical(v)) == Arc{aux.middle(v), aux.source_copy(v)});
  }
  CHECK_THROWS_AS(AuxNetwork(g.digraph, {fixtures::constant(7, 1), std::vector<Rational>(7, Rational(1, 2))}),
                  InputError);
}

TEST_CASE("max_so_si fixed examples") {
  SUBCASE("single arc") {
    const auto one = fixtures::single_arc();
    const auto w = fixtures::uniform_pair(2, 1);
    const auto cert = max_so_si(one.digraph, w);
    CHECK(cert.value == 2);
    // Either orientation of the arc is optimal.
    const bool forward = cert.sources == one.set({"u"}) && cert.sinks == one.set({"v"});
    const bool backward = cert.sources == one.set({"v"}) && cert.sinks == one.set({"u"});
    CHECK((forward || backward));
    CHECK(cert.cover.cost == 2);
    CHECK(oracle::brute_max_so_si(one.digraph, w).value == 2);
    check_certificate(one.digraph, w, cert);
  }
  SUBCASE("2-cycle") {
    const auto c = fixtures::two_cycle();
    const auto w = fixtures::uniform_pair(2, 1);
    const auto cert = max_so_si(c.digraph, w);
    CHECK(cert.value == 0);
    CHECK(cert.sources.empty());
    CHECK(cert.sinks.empty());
    // Only the zero-cost reverse copies carry the cover.
    for (ArcId a = 0; a < 2; ++a) {
      CHECK(cert.cover.out_part[a] == 0);
      CHECK(cert.cover.in_part[a] == 0);
    }
    check_certificate(c.digraph, w, cert);
  }
  SUBCASE("zero weights") {
    const auto g = fixtures::fig2();
    const auto cert = max_so_si(g.digraph, WeightPair::zero(7));
    CHECK(cert.value == 0);
    CHECK(cert.sources.empty());
    CHECK(cert.sinks.empty());
  }
  SUBCASE("two-circuit digraph with the indicator of {a1, b1, x}") {
    const auto g = fixtures::fig2();
    const auto u = g.indicator({"a1", "b1", "x"});
    const WeightPair w{u, u};
    const auto cert = max_so_si(g.digraph, w);
    CHECK(cert.value == 2);
    CHECK(oracle::brute_max_so_si(g.digraph, w).value == 2);
    check_certificate(g.digraph, w, cert);
  }
}

TEST_CASE("extract_pair and extract_cover edge cases") {
  const auto g = fixtures::fig2();
  const AuxNetwork aux(g.digraph, fixtures::uniform_pair(7, 1));
  const PairExtraction p = extract_pair(aux, Potential(21, 0));
  CHECK(p.sources.empty());
  CHECK(p.sinks.empty());
  CHECK(p.dual_value == 0);

  Potential bad(21, 0);
  bad[aux.middle(0)] = 2;  // v_i -> v drops by 2 > cost 0
  CHECK_THROWS_AS(extract_pair(aux, bad), InputError);

  const AuxNetwork free(g.digraph, WeightPair::zero(7));
  const CircularCover zero = extract_cover(free, std::vector<std::int64_t>(62, 0));
  CHECK(zero.cost == 0);
  for (const auto& x : zero.out_part) CHECK(x == 0);

  // A flow that violates a lower bound is rejected.
  CHECK_THROWS_AS(extract_cover(aux, std::vector<std::int64_t>(62, 0)), InputError);
}

TEST_CASE("the explicit two-circuit cover is a circular cover of cost 2") {
  const auto g = fixtures::fig2();
  const auto u = g.indicator({"a1", "b1", "x"});
  CircularCover cover{std::vector<Rational>(16), std::vector<Rational>(16), Rational(2)};
  // z_o on a1a2, a2a3, b1x, xb3; z_i on b3b2, b2b1, a3x, xa1.
  for (ArcId a : {1 + 8, 2 + 8, 4, 7 + 8}) cover.out_part[a] = 1;
  for (ArcId a : {6 + 8, 5 + 8, 3 + 8, 0}) cover.in_part[a] = 1;
  CHECK(is_circular_cover(BiDigraph(g.digraph), {u, u}, cover));
  cover.cost = 1;
  CHECK_FALSE(is_circular_cover(BiDigraph(g.digraph), {u, u}, cover));
}

TEST_CASE("max_so_si agrees with the oracle on random instances") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 150; ++round) {
    const auto inst = fixtures::random_instance(rng, 7, 11, 3);
    const auto cert = max_so_si(inst.digraph, inst.weights);
    CHECK(cert.value == oracle::brute_max_so_si(inst.digraph, inst.weights).value);
    check_certificate(inst.digraph, inst.weights, cert);
  }
}

TEST_CASE("rational weights are scaled exactly") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> num(0, 6), den(1, 4);
  for (int round = 0; round < 60; ++round) {
    auto inst = fixtures::random_instance(rng, 6, 9, 0);
    const int n = inst.digraph.node_count();
    for (NodeId v = 0; v < n; ++v) {
      inst.weights.source[v] = Rational(num(rng), den(rng));
      inst.weights.sink[v] = Rational(num(rng), den(rng));
    }
    const auto cert = max_so_si(inst.digraph, inst.weights);
    CHECK(cert.value == oracle::brute_max_so_si(inst.digraph, inst.weights).value);
    check_certificate(inst.digraph, inst.weights, cert);

    WeightPair scaled = inst.weights;
    for (auto& x : scaled.source) x *= 3;
    for (auto& x : scaled.sink) x *= 3;
    CHECK(max_so_si(inst.digraph, scaled).value == 3 * cert.value);
  }
}

TEST_CASE("sink-stable specialization") {
  const auto t = fixtures::triangle();
  const auto tri = sink_stable_max(t.digraph, fixtures::constant(3, 1));
  // Every two nodes of a triangle are adjacent, so no two can be sinks at once.
  CHECK(tri.value == oracle::brute_max_so_si(t.digraph, {fixtures::constant(3, 0), fixtures::constant(3, 1)}).value);
  CHECK(tri.value == 1);

  const auto c = fixtures::two_cycle();
  CHECK(sink_stable_max(c.digraph, fixtures::constant(2, 1)).value == 0);

  const auto one = fixtures::single_arc();
  const auto arc = sink_stable_max(one.digraph, fixtures::constant(2, 1));
  CHECK(arc.value == 1);
  REQUIRE(arc.circuits.size() == 1);
  CHECK(arc.circuits[0].arcs.size() == 2);
  CHECK(a_value(BiDigraph(one.digraph), arc.circuits[0]) == 1);

  const std::vector<Rational> half(2, Rational(1, 2));
  CHECK_THROWS_AS(sink_stable_max(one.digraph, half), InputError);
}

TEST_CASE("resonant and cardinality wrappers") {
  const auto g = fixtures::fig2();
  const auto all = resonant_max(g.digraph, fixtures::constant(7, 1));
  const auto brute = oracle::brute_max_so_si(g.digraph, fixtures::uniform_pair(7, 1));
  CHECK(all.value == brute.value);
  CHECK(all.value >= 4);
  // {a2, a3, b1, b2} is resonant.
  CHECK(verify_so_si(g.digraph, g.set({"a2", "b2"}), g.set({"a3", "b1"})).feasible);

  CHECK(resonant_max(fixtures::two_cycle().digraph, fixtures::constant(2, 1)).value == 0);
  const auto none = resonant_max(g.digraph, fixtures::constant(7, 0));
  CHECK(none.value == 0);
  CHECK(none.sources.empty());

  CHECK(cardinality_within(g.digraph, {}, {}).value == 0);
  const auto t = fixtures::triangle();
  CHECK(cardinality_within(t.digraph, t.set({"u"}), t.set({"w"})).value == 2);
  CHECK_THROWS_AS(cardinality_within(t.digraph, t.set({"u"}), t.set({"u", "w"})), InputError);
}

TEST_CASE("constrained pairs") {
  const auto t = fixtures::triangle();
  SUBCASE("no forced nodes") {
    const auto r = constrained_so_si(t.digraph, {}, t.set({"u"}), {}, t.set({"w"}));
    CHECK(r.feasible);
    CHECK(r.certificate.value == cardinality_within(t.digraph, t.set({"u"}), t.set({"w"})).value);
  }
  SUBCASE("w forced to be a source") {
    // Reversing the dicut into w makes w a source.
    const auto r = constrained_so_si(t.digraph, t.set({"w"}), t.set({"w"}), {}, t.set({"u"}));
    bool possible = false;
    for (const auto& ro : oracle::enumerate_reorientations(t.digraph)) {
      const auto [so, si] = sources_sinks(oracle::reorient(t.digraph, ro.reversed));
      possible = possible || std::binary_search(so.begin(), so.end(), t["w"]);
    }
    CHECK(possible);
    CHECK(r.feasible == possible);
    CHECK(std::binary_search(r.certificate.sources.begin(), r.certificate.sources.end(), t["w"]));
  }
  SUBCASE("w forced source and u forced sink") {
    const auto r = constrained_so_si(t.digraph, t.set({"w"}), t.set({"w"}), t.set({"u"}), t.set({"u"}));
    CHECK_FALSE(r.feasible);
  }
  SUBCASE("two-circuit digraph") {
    const auto g = fixtures::fig2();
    const auto r = constrained_so_si(g.digraph, {}, g.set({"b1"}), g.set({"a1"}), g.set({"a1"}));
    CHECK(r.feasible);
    CHECK(std::binary_search(r.certificate.sinks.begin(), r.certificate.sinks.end(), g["a1"]));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(constrained_so_si(t.digraph, t.set({"w"}), {}, {}, {}), InputError);
    CHECK_THROWS_AS(constrained_so_si(t.digraph, {}, t.set({"w"}), {}, t.set({"w"})), InputError);
  }
}

TEST_CASE("constrained pairs agree with enumeration") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> role(0, 4);
  for (int round = 0; round < 100; ++round) {
    const auto inst = fixtures::random_instance(rng, 6, 9, 0);
    const int n = inst.digraph.node_count();
    std::vector<NodeId> fo, ao, fi, ai;
    for (NodeId v = 0; v < n; ++v) {
      switch (role(rng)) {
        case 0: fo.push_back(v); ao.push_back(v); break;
        case 1: ao.push_back(v); break;
        case 2: fi.push_back(v); ai.push_back(v); break;
        case 3: ai.push_back(v); break;
        default: break;
      }
    }
    std::vector<char> mfo(n), mao(n), mfi(n), mai(n);
    for (NodeId v : fo) mfo[v] = 1;
    for (NodeId v : ao) mao[v] = 1;
    for (NodeId v : fi) mfi[v] = 1;
    for (NodeId v : ai) mai[v] = 1;
    int best = -1;
    for (const auto& ro : oracle::enumerate_reorientations(inst.digraph)) {
      const auto [so, si] = sources_sinks(oracle::reorient(inst.digraph, ro.reversed));
      std::vector<char> is_so(n), is_si(n);
      for (NodeId v : so) is_so[v] = 1;
      for (NodeId v : si) is_si[v] = 1;
      bool ok = true;
      int count = 0;
      for (NodeId v = 0; v < n; ++v) {
        if ((mfo[v] && !is_so[v]) || (mfi[v] && !is_si[v])) ok = false;
        count += (mao[v] && is_so[v]) + (mai[v] && is_si[v]);
      }
      if (ok) best = std::max(best, count);
    }
    const auto r = constrained_so_si(inst.digraph, fo, ao, fi, ai);
    REQUIRE(r.feasible == (best >= 0));
    if (r.feasible) {
      // Zero-weight nodes may ride along in the pair; count allowed ones only.
      int size = 0;
      for (NodeId v : r.certificate.sources) size += mao[v];
      for (NodeId v : r.certificate.sinks) size += mai[v];
      CHECK(size == best);
    }
  }
}
