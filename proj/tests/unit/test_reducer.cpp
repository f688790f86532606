#include "generators.hpp"

#include <decount/error.hpp>
#include <decount/fixtures.hpp>
#include <decount/oracle.hpp>
#include <decount/reducer.hpp>

#include <gtest/gtest.h>

using namespace decount;
using namespace decount::testing;

namespace {

// Alternating orientation of C_{2k}: even vertices are sources.
auto alternating_cycle(int k) -> SmallDigraph
{
    SmallDigraph d;
    d.n = 2 * k;
    for (int i = 0; i < k; ++i) {
        d.add_arc(2 * i, 2 * i + 1);
        d.add_arc((2 * i + 2) % (2 * k), 2 * i + 1);
    }
    return d;
}

auto random_oriented_graph(std::size_t max_n, Rng & rng) -> DirectedGraph
{
    return orient_by_degeneracy(mixed_random_graph(max_n, rng));
}

// Position of each pattern vertex of `mask` inside an ImageKey.
auto key_position(VertexMask mask, int x) -> int { return popcount(mask & (bit(x) - 1)); }

// Walks every colourful cycle of the reduced graph and checks that the
// layer keys agree on shared pattern vertices. Returns the cycle count.
auto check_agreement(const LayeredWeightedGraph & lg) -> std::size_t
{
    int k = lg.k;
    std::vector<std::vector<std::vector<std::pair<VertexId, BigInt>>>> out(k);
    for (int i = 0; i < k; ++i) {
        out[i].resize(lg.layer_size[i]);
        for (const auto & e : lg.edges[i])
            out[i][e.u].emplace_back(e.v, e.weight);
    }
    std::size_t cycles = 0;
    std::vector<VertexId> path(k);
    auto agrees = [&] {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                VertexMask shared = lg.layer_pattern_vertices[i] & lg.layer_pattern_vertices[j];
                bool ok = true;
                for_each_vertex(shared, [&](int x) {
                    const auto & a = lg.layer_keys[i][path[i]];
                    const auto & b = lg.layer_keys[j][path[j]];
                    ok = ok && a[key_position(lg.layer_pattern_vertices[i], x)] == b[key_position(lg.layer_pattern_vertices[j], x)];
                });
                if (! ok)
                    return false;
            }
        return true;
    };
    auto walk = [&](auto & self, int layer) -> void {
        if (layer == k - 1) {
            for (const auto & [v, w] : out[k - 1][path[k - 1]])
                if (v == path[0]) {
                    ++cycles;
                    EXPECT_TRUE(agrees());
                }
            return;
        }
        for (const auto & [v, w] : out[layer][path[layer]]) {
            path[layer + 1] = v;
            self(self, layer + 1);
        }
    };
    for (VertexId s = 0; s < lg.layer_size[0]; ++s) {
        path[0] = s;
        walk(walk, 0);
    }
    return cycles;
}

} // namespace

TEST(Reducer, AlternatingC6IsTriangleReducible)
{
    auto p = analyze(alternating_cycle(3));
    auto cert = find_cycle_reduction(p, 5);
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->k, 3);
    for (auto b : cert->blocks)
        EXPECT_EQ(popcount(b), 1);
    EXPECT_FALSE(certificate_violation(p, *cert));
}

TEST(Reducer, AlternatingC8IsFourCycleReducible)
{
    auto p = analyze(alternating_cycle(4));
    EXPECT_FALSE(find_cycle_reduction(p, 3));
    auto cert = find_cycle_reduction(p, 5);
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->k, 4);
    EXPECT_FALSE(certificate_violation(p, *cert));
}

TEST(Reducer, ObstructionHasNoReductionUpToFour)
{
    auto p = analyze(obstruction_orientation());
    EXPECT_EQ(p.dag.n, 8);
    EXPECT_EQ(p.sources.size(), 4u);
    EXPECT_EQ(popcount(p.intersection), 4);
    EXPECT_FALSE(find_tau1_decomposition(p));
    EXPECT_FALSE(find_cycle_reduction(p, 4));
}

TEST(Reducer, VerifierRejectsBrokenCertificates)
{
    auto fx = wedge_triangle_fixture();
    ASSERT_FALSE(certificate_violation(fx.pattern, fx.certificate));

    auto wrong_k = fx.certificate;
    wrong_k.k = 4;
    EXPECT_TRUE(certificate_violation(fx.pattern, wrong_k));

    auto wrong_designated = fx.certificate;
    wrong_designated.designated[0] = WedgeTriangleFixture::s2;
    EXPECT_TRUE(certificate_violation(fx.pattern, wrong_designated));

    auto wrong_intersection = fx.certificate;
    std::swap(wrong_intersection.intersections[0], wrong_intersection.intersections[1]);
    EXPECT_TRUE(certificate_violation(fx.pattern, wrong_intersection));

    auto merged = fx.certificate;
    merged.blocks[0] |= merged.blocks[1];
    EXPECT_TRUE(certificate_violation(fx.pattern, merged));

    EXPECT_THROW(build_reduced_graph(wrong_intersection, fx.pattern, fx.graph), InputError);
}

TEST(ReducedGraph, WedgeTriangleFixture)
{
    using F = WedgeTriangleFixture;
    auto fx = wedge_triangle_fixture();
    auto lg = build_reduced_graph(fx.certificate, fx.pattern, fx.graph);
    ASSERT_EQ(lg.k, 3);

    // block s2 joins layer 0 (images of i1) to layer 1 (images of i2)
    bool found = false;
    for (const auto & e : lg.edges[0]) {
        if (lg.layer_keys[0][e.u][0] == F::c && lg.layer_keys[1][e.v][0] == F::c) {
            EXPECT_EQ(e.weight, 2);
            found = true;
        }
    }
    EXPECT_TRUE(found);

    // a has no in-arcs, so it is never the image of an intersection vertex
    for (const auto & layer : lg.layer_keys)
        for (const auto & key : layer)
            EXPECT_NE(key[0], F::a);

    auto expected = hom_bruteforce(fx.graph, fx.pattern.dag);
    EXPECT_EQ(wsub_bruteforce(lg), expected);
    EXPECT_EQ(hom_count_via_reduction(fx.certificate, fx.pattern, fx.graph), expected);
}

TEST(ReducedGraph, PatternIntoItself)
{
    auto dag = alternating_cycle(3);
    auto p = analyze(dag);
    auto cert = *find_cycle_reduction(p, 3);
    std::vector<Edge> arcs;
    for (auto [u, v] : dag.arcs())
        arcs.emplace_back(u, v);
    auto g = DirectedGraph::from_arcs(6, arcs);
    auto lg = build_reduced_graph(cert, p, g);
    EXPECT_GE(check_agreement(lg), 1u);
    EXPECT_EQ(wsub_bruteforce(lg), hom_bruteforce(g, dag));
}

TEST(ReducedGraph, EmptyInput)
{
    auto p = analyze(alternating_cycle(3));
    auto cert = *find_cycle_reduction(p, 3);
    auto g = DirectedGraph::from_arcs(5, {});
    auto lg = build_reduced_graph(cert, p, g);
    EXPECT_EQ(lg.num_edges(), 0u);
    EXPECT_EQ(hom_count_via_reduction(cert, p, g), 0);
}

TEST(ReducerProperty, CycleOrientationsMatchOracle)
{
    Rng rng(404);
    for (int len = 6; len <= 10; ++len) {
        int reducible = 0;
        for (const auto & cls : orientation_classes(cycle_pattern(len))) {
            auto p = analyze(cls.representative);
            auto cert = find_cycle_reduction(p, 5);
            if (! cert)
                continue;
            ++reducible;
            ASSERT_FALSE(certificate_violation(p, *cert)) << "C" << len;
            int graphs = len <= 8 ? 50 : 20;
            for (int trial = 0; trial < graphs; ++trial) {
                auto g = random_oriented_graph(12, rng);
                auto expected = hom_bruteforce(g, p.dag);
                ASSERT_EQ(hom_count_via_reduction(*cert, p, g, WSubEngine::Matrix), expected) << "C" << len;
                ASSERT_EQ(hom_count_via_reduction(*cert, p, g, WSubEngine::BruteForce), expected) << "C" << len;
                if (cert->k <= 4)
                    ASSERT_EQ(hom_count_via_reduction(*cert, p, g, WSubEngine::Combinatorial), expected) << "C" << len;
            }
        }
        EXPECT_GT(reducible, 0) << "C" << len;
    }
}

TEST(ReducerProperty, CertificatesAlwaysVerify)
{
    Rng rng(505);
    int found = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto h = random_pattern(std::uniform_int_distribution<int>(6, 10)(rng), 0.15, rng);
        auto p = analyze(random_orientation(h, rng));
        if (auto cert = find_cycle_reduction(p, 5)) {
            ++found;
            EXPECT_FALSE(certificate_violation(p, *cert)) << *certificate_violation(p, *cert);
        }
    }
    EXPECT_GT(found, 20);
}

TEST(ReducerProperty, ReducedCyclesAgreeOnSharedVertices)
{
    Rng rng(606);
    int checked = 0;
    while (checked < 60) {
        auto h = random_pattern(std::uniform_int_distribution<int>(6, 9)(rng), 0.15, rng);
        auto p = analyze(random_orientation(h, rng));
        auto cert = find_cycle_reduction(p, 5);
        if (! cert)
            continue;
        auto g = random_oriented_graph(9, rng);
        auto lg = build_reduced_graph(*cert, p, g);
        check_agreement(lg);
        EXPECT_EQ(wsub_bruteforce(lg), hom_bruteforce(g, p.dag));
        ++checked;
    }
}

TEST(ReducerProperty, WidthOneAndReductionAgree)
{
    Rng rng(707);
    int checked = 0;
    for (int trial = 0; trial < 600 && checked < 40; ++trial) {
        auto h = random_pattern(std::uniform_int_distribution<int>(5, 8)(rng), 0.2, rng);
        auto p = analyze(random_orientation(h, rng));
        if (p.sources.size() < 3 || ! find_tau1_decomposition(p))
            continue;
        auto cert = find_cycle_reduction(p, 5);
        if (! cert)
            continue;
        auto g = random_oriented_graph(11, rng);
        EXPECT_EQ(hom_count_via_reduction(*cert, p, g), hom_count_tau1(p, g));
        ++checked;
    }
    EXPECT_GT(checked, 5);
}
