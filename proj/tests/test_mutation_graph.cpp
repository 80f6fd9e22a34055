#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sodlab/mutation_graph.hpp"

using namespace sodlab;

namespace {

Interval iv(int a, int b) { return Interval{a, b}; }

int vertex_id(const MutationGraph& g, const std::vector<ThickSet>& blocks) {
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (g.vertices[i].blocks == blocks) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
}

std::vector<GraphEdge> edges_from(const MutationGraph& g, int u) {
    std::vector<GraphEdge> out;
    for (const GraphEdge& e : g.edges)
        if (e.from == u) out.push_back(e);
    return out;
}

int count_sub(const std::string& text, const std::string& pat) {
    int c = 0;
    for (std::size_t p = text.find(pat); p != std::string::npos; p = text.find(pat, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("graph over two vertices is the 3-cycle") {
    MutationGraph g = build_graph(QuiverSpec::type_a(2));
    REQUIRE(g.vertices.size() == 3);
    CHECK(g.edges.size() == 3);
    int s12 = vertex_id(g, {{iv(1, 1)}, {iv(2, 2)}});
    int p1s1 = vertex_id(g, {{iv(1, 2)}, {iv(1, 1)}});
    int s2p1 = vertex_id(g, {{iv(2, 2)}, {iv(1, 2)}});
    CHECK(std::set<GraphEdge>(g.edges.begin(), g.edges.end()) ==
          std::set<GraphEdge>{
              {s12, p1s1, 1}, {p1s1, s2p1, 1}, {s2p1, s12, 1}});
    CHECK(is_connected(g));
}

TEST_CASE("graph over three vertices") {
    TypeACategory a3(3);
    MutationGraph g = build_graph(QuiverSpec::type_a(3));
    REQUIRE(g.vertices.size() == 16);
    CHECK(g.edges.size() == 32);
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
        auto out = edges_from(g, static_cast<int>(u));
        REQUIRE(out.size() == 2);
        CHECK(out[0].label == 1);
        CHECK(out[1].label == 2);
    }
    CHECK(is_connected(g));
    CHECK(std::is_sorted(g.vertices.begin(), g.vertices.end()));
    // every arrow is reversed by the opposite mutation
    for (const GraphEdge& e : g.edges)
        CHECK(rho(a3, g.vertices[static_cast<std::size_t>(e.to)], e.label, Side::left) ==
              g.vertices[static_cast<std::size_t>(e.from)]);
}

TEST_CASE("graph capacity and degenerate cases") {
    MutationGraph g1 = build_graph(QuiverSpec::type_a(1));
    CHECK(g1.vertices.empty());
    CHECK(g1.edges.empty());
    CHECK(is_connected(g1));

    MutationGraph g5 = build_graph(QuiverSpec::type_a(5));
    CHECK(g5.vertices.size() == static_cast<std::size_t>(oracle::full_sequence_count(5)));
    CHECK(g5.edges.size() == g5.vertices.size() * 4);
    CHECK(is_connected(g5));

    CHECK_THROWS_AS(build_graph(QuiverSpec::type_a(6)), capacity_error);
    CHECK_THROWS_AS(build_graph(QuiverSpec::wpl2()), invalid_input);
}

TEST_CASE("reduction decomposition partitions by last block") {
    MutationGraph g2 = build_graph(QuiverSpec::type_a(2));
    ReductionDecomposition r2 = reduction_decomposition(g2);
    REQUIRE(r2.groups.size() == 3);
    for (const auto& [u, ids] : r2.groups) CHECK(ids.size() == 1);

    MutationGraph g3 = build_graph(QuiverSpec::type_a(3));
    ReductionDecomposition r3 = reduction_decomposition(g3);
    std::map<Interval, std::size_t> sizes;
    std::set<int> all_ids;
    for (const auto& [u, ids] : r3.groups) {
        sizes[u] = ids.size();
        all_ids.insert(ids.begin(), ids.end());
    }
    CHECK(sizes == std::map<Interval, std::size_t>{{iv(1, 1), 3},
                                                   {iv(1, 2), 2},
                                                   {iv(1, 3), 3},
                                                   {iv(2, 2), 3},
                                                   {iv(2, 3), 2},
                                                   {iv(3, 3), 3}});
    CHECK(all_ids.size() == 16);  // the groups partition the vertex set
}

TEST_CASE("reduction groups carry the quotient mutation graphs") {
    TypeACategory a3(3);
    MutationGraph g = build_graph(QuiverSpec::type_a(3));
    ReductionDecomposition r = reduction_decomposition(g);
    std::map<int, Interval> group_of;
    for (const auto& [u, ids] : r.groups)
        for (int id : ids) group_of[id] = u;

    // arrows at the last index always change the group; earlier arrows never do
    for (const GraphEdge& e : g.edges) {
        if (e.label == 2)
            CHECK(group_of.at(e.from) != group_of.at(e.to));
        else
            CHECK(group_of.at(e.from) == group_of.at(e.to));
    }

    for (const auto& [u, ids] : r.groups) {
        ThickSet uset{u};
        CHECK(a3.k0_rank(a3.perp(uset, Side::right)) == 2);

        // relabel through the projection functor: it fixes the quotient model,
        // so truncated vertices are already their own images
        std::map<int, std::vector<ThickSet>> quotient_vertex;
        for (int id : ids) {
            const Sod& v = g.vertices[static_cast<std::size_t>(id)];
            std::vector<ThickSet> qblocks;
            for (std::size_t j = 0; j + 1 < v.blocks.size(); ++j) {
                Interval e = *v.blocks[j].begin();
                DerivedObject img = a3.project_quotient(uset, DerivedObject::of(e));
                CHECK(img == DerivedObject::of(e));
                qblocks.push_back(ThickSet{e});
            }
            quotient_vertex[id] = qblocks;
        }

        // induced subgraph on the group, labels below the last index
        std::vector<GraphEdge> induced;
        for (const GraphEdge& e : g.edges)
            if (e.label == 1 && group_of.at(e.from) == u && group_of.at(e.to) == u)
                induced.push_back(e);

        if (ids.size() == 3) {
            // quotient of rank-2 connected type: a 3-cycle, one arrow each
            CHECK(induced.size() == 3);
            std::map<int, int> next;
            for (const GraphEdge& e : induced) {
                CHECK(next.emplace(e.from, e.to).second);
                CHECK(e.from != e.to);
            }
            int v = ids[0];
            for (int step = 0; step < 3; ++step) v = next.at(v);
            CHECK(v == ids[0]);
        } else {
            // disconnected rank-2 quotient: a transposition both ways
            REQUIRE(ids.size() == 2);
            CHECK(induced.size() == 2);
            CHECK(std::set<GraphEdge>(induced.begin(), induced.end()) ==
                  std::set<GraphEdge>{{ids[0], ids[1], 1}, {ids[1], ids[0], 1}});
            // the two quotient vertices are each other's transposition
            CHECK(quotient_vertex.at(ids[0])[0] == quotient_vertex.at(ids[1])[1]);
            CHECK(quotient_vertex.at(ids[0])[1] == quotient_vertex.at(ids[1])[0]);
        }
    }
}

TEST_CASE("component graph contracts the groups") {
    MutationGraph g2 = build_graph(QuiverSpec::type_a(2));
    ComponentGraph c2 = component_graph(g2);
    REQUIRE(c2.vertices == std::vector<Interval>{iv(1, 1), iv(1, 2), iv(2, 2)});
    CHECK(c2.edges == std::vector<GraphEdge>{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    CHECK(is_connected(c2));

    MutationGraph g3 = build_graph(QuiverSpec::type_a(3));
    ComponentGraph c3 = component_graph(g3);
    CHECK(c3.vertices.size() == 6);
    CHECK(is_connected(c3));
    for (const GraphEdge& e : c3.edges) CHECK(e.label == 2);

    MutationGraph g1 = build_graph(QuiverSpec::type_a(1));
    ComponentGraph c1 = component_graph(g1);
    CHECK(c1.vertices.empty());
    CHECK(c1.edges.empty());
}

TEST_CASE("chain criterion matches connectivity") {
    for (int n = 1; n <= 4; ++n) {
        TypeACategory cat(n);
        CriterionResult res = check_connectedness_criterion(QuiverSpec::type_a(n));
        CHECK(res.holds == is_connected(build_graph(QuiverSpec::type_a(n))));

        std::size_t m = cat.intervals().size();
        CHECK(res.witness_chains.size() == m * m);
        auto meets = [](const ThickSet& a, const ThickSet& b) {
            return std::any_of(a.begin(), a.end(),
                               [&](Interval x) { return b.count(x) == 1; });
        };
        auto linked = [&](Interval x, Interval y) {
            return meets(cat.perp(ThickSet{x}, Side::right), cat.perp(ThickSet{y}, Side::left)) ||
                   meets(cat.perp(ThickSet{x}, Side::left), cat.perp(ThickSet{y}, Side::right));
        };
        for (const auto& [key, chain] : res.witness_chains) {
            REQUIRE(!chain.empty());
            CHECK(chain.front() == key.first);
            CHECK(chain.back() == key.second);
            CHECK(chain.size() <= m);
            if (key.first == key.second) CHECK(chain.size() == 1);
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                CHECK(linked(chain[i], chain[i + 1]));
        }
    }
    CHECK_THROWS_AS(check_connectedness_criterion(QuiverSpec::type_a(5)), capacity_error);
    CHECK_THROWS_AS(check_connectedness_criterion(QuiverSpec::wpl2()), invalid_input);
}

TEST_CASE("dot export") {
    MutationGraph g2 = build_graph(QuiverSpec::type_a(2));
    std::string dot = export_dot(g2);
    CHECK(dot == export_dot(g2));
    CHECK(dot.rfind("digraph mutation_graph {\n", 0) == 0);
    CHECK(dot.substr(dot.size() - 2) == "}\n");
    CHECK(count_sub(dot, "[label=\"(") == 3);
    CHECK(count_sub(dot, "rho_1") == 3);
    CHECK(count_sub(dot, "(S1|S2)") == 1);
    CHECK(count_sub(dot, "(P1|S1)") == 1);
    CHECK(count_sub(dot, "(S2|P1)") == 1);

    CHECK(export_dot(build_graph(QuiverSpec::type_a(1))) == "digraph mutation_graph {\n}\n");

    std::string cdot = export_dot(component_graph(build_graph(QuiverSpec::type_a(3))));
    CHECK(cdot.rfind("digraph component_graph {\n", 0) == 0);
    CHECK(count_sub(cdot, "[label=") == 6 + count_sub(cdot, "rho_2"));
}
