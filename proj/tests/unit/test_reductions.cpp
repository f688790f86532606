#include "generators.hpp"

#include <decount/error.hpp>
#include <decount/fixtures.hpp>
#include <decount/oracle.hpp>
#include <decount/reductions.hpp>

#include <gtest/gtest.h>

#include <queue>

using namespace decount;
using namespace decount::testing;

namespace {

auto is_bipartite(const UndirectedGraph & g) -> bool
{
    std::vector<int> side(g.num_vertices(), -1);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (! q.empty()) {
            auto v = q.front();
            q.pop();
            for (auto w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                }
                else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

TEST(ExpandEven, Triangle)
{
    auto g = expand_even(complete_graph(3));
    EXPECT_EQ(g.num_vertices(), 6u);
    EXPECT_EQ(g.num_edges(), 6u);
    EXPECT_EQ(cycle_bruteforce(g, 6), 1);
}

TEST(ExpandEven, ChainedCycles)
{
    auto g = expand_even(chained_cycles_graph());
    EXPECT_EQ(cycle_bruteforce(g, 6), 1);
    EXPECT_EQ(cycle_bruteforce(g, 8), 1);
    EXPECT_EQ(cycle_bruteforce(g, 10), 1);
    EXPECT_EQ(degeneracy_order(g).degeneracy, 2u);
}

TEST(ExpandEven, EdgelessAndLabels)
{
    auto empty = UndirectedGraph::from_edges(4, {});
    EXPECT_EQ(expand_even(empty).num_vertices(), 4u);
    EXPECT_EQ(expand_odd(empty).num_edges(), 0u);

    auto g = complete_graph(3);
    g.set_labels({10, 20, 30});
    auto e = expand_even(g);
    EXPECT_EQ(e.label(0), 10u);
    for (VertexId v = 3; v < e.num_vertices(); ++v)
        EXPECT_GT(e.label(v), 30u);
}

TEST(ExpandOdd, SingleEdge)
{
    std::vector<Edge> edge{{0, 1}};
    auto g = expand_odd(UndirectedGraph::from_edges(2, edge));
    EXPECT_EQ(g.num_vertices(), 5u);
    EXPECT_EQ(g.num_edges(), 5u);
    EXPECT_EQ(cycle_bruteforce(g, 5), 1);
}

TEST(ExpandOdd, TriangleAndSquare)
{
    auto g = expand_odd(triangle_square_graph());
    auto c7 = cycle_bruteforce(g, 7);
    auto c9 = cycle_bruteforce(g, 9);
    EXPECT_EQ(c7, 3);
    EXPECT_EQ(c9, 5);
    auto r = recover_from_odd(c7, c9);
    EXPECT_EQ(r.c3, 1);
    EXPECT_EQ(r.c4, 1);
    EXPECT_EQ(degeneracy_order(g).degeneracy, 2u);
}

TEST(Recovery, Examples)
{
    EXPECT_EQ(recover_from_even(1, 3), 1);
    auto zero = recover_from_odd(0, 0);
    EXPECT_EQ(zero.c3, 0);
    EXPECT_EQ(zero.c4, 0);
    EXPECT_THROW(recover_from_odd(4, 5), InvariantError);
    EXPECT_THROW(recover_from_odd(3, 0), InvariantError);
    EXPECT_THROW(recover_from_odd(3, 5, 2), VerificationError);
    EXPECT_EQ(recover_from_odd(3, 5, 1).c4, 1);
    EXPECT_THROW(recover_from_even(1, 2), InputError);
}

TEST(ReductionsProperty, ExpansionsPreserveCycleCounts)
{
    Rng rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = mixed_random_graph(8, rng);
        auto even = expand_even(g);
        auto odd = expand_odd(g);
        // subdividing a forest leaves a forest, so the even expansion
        // reaches 2 only when g has a cycle
        if (g.num_edges() > 0)
            EXPECT_EQ(degeneracy_order(odd).degeneracy, 2u);
        EXPECT_EQ(degeneracy_order(even).degeneracy, std::min<std::size_t>(degeneracy_order(g).degeneracy, 2));
        EXPECT_TRUE(is_bipartite(even));
        EXPECT_EQ(even.num_vertices(), g.num_vertices() + g.num_edges());
        EXPECT_EQ(odd.num_edges(), 5 * g.num_edges());

        auto c3 = cycle_bruteforce(g, 3), c4 = cycle_bruteforce(g, 4);
        EXPECT_EQ(recover_from_even(cycle_bruteforce(even, 6), 3), c3);
        EXPECT_EQ(recover_from_even(cycle_bruteforce(even, 8), 4), c4);
        if (g.num_edges() <= 14) {
            auto r = recover_from_odd(cycle_bruteforce(odd, 7), cycle_bruteforce(odd, 9), c3);
            EXPECT_EQ(r.c3, c3);
            EXPECT_EQ(r.c4, c4);
        }
    }
}
