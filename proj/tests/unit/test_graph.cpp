#include "generators.hpp"

#include <decount/error.hpp>
#include <decount/graph.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace decount;
using namespace decount::testing;

namespace {

auto parse(const std::string & text, LoadOptions options = {}) -> UndirectedGraph
{
    std::istringstream in(text);
    return load_edge_list(in, options);
}

} // namespace

TEST(EdgeList, Triangle)
{
    auto g = parse("0 1\n1 2\n2 0\n");
    EXPECT_EQ(g.num_vertices(), 3u);
    EXPECT_EQ(g.num_edges(), 3u);
    EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(EdgeList, DuplicateEdgesCollapse)
{
    auto g = parse("0 1\n0 1\n");
    EXPECT_EQ(g.num_edges(), 1u);
    EXPECT_THROW(parse("0 1\n1 0\n", LoadOptions{.dedupe = false}), InputError);
}

TEST(EdgeList, RejectsSelfLoopsAndGarbage)
{
    EXPECT_THROW(parse("0 0\n"), InputError);
    EXPECT_THROW(parse("0 x\n"), InputError);
    EXPECT_THROW(parse("0\n"), InputError);
    EXPECT_THROW(parse("-1 2\n"), InputError);
}

TEST(EdgeList, CommentsAndSparseLabels)
{
    auto g = parse("# header\n10 700\n\n  # indented comment\n700 3\n");
    ASSERT_EQ(g.num_vertices(), 3u);
    EXPECT_EQ(g.label(0), 3u);
    EXPECT_EQ(g.label(1), 10u);
    EXPECT_EQ(g.label(2), 700u);
    EXPECT_TRUE(g.has_edge(1, 2));
    EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(EdgeList, WriteRoundTrip)
{
    auto g = parse("5 9\n9 12\n12 5\n");
    std::ostringstream out;
    write_edge_list(out, g);
    auto again = parse(out.str());
    EXPECT_EQ(again.edges(), g.edges());
    EXPECT_EQ(again.labels(), g.labels());
}

TEST(Degeneracy, Examples)
{
    auto path = parse("0 1\n1 2\n2 3\n");
    EXPECT_EQ(degeneracy_order(path).degeneracy, 1u);
    EXPECT_EQ(degeneracy_order(complete_graph(5)).degeneracy, 4u);
    EXPECT_EQ(degeneracy_order(cycle_graph(7)).degeneracy, 2u);
}

TEST(Degeneracy, TriangleTieBreak)
{
    auto d = orient_by_degeneracy(complete_graph(3));
    EXPECT_TRUE(d.has_arc(0, 1));
    EXPECT_TRUE(d.has_arc(0, 2));
    EXPECT_TRUE(d.has_arc(1, 2));
    EXPECT_EQ(d.out_degree(0), 2u);
    EXPECT_EQ(d.out_degree(1), 1u);
    EXPECT_EQ(d.out_degree(2), 0u);
}

TEST(Degeneracy, StarPointsToCentre)
{
    auto g = parse("0 4\n1 4\n2 4\n3 4\n");
    auto d = orient_by_degeneracy(g);
    for (VertexId leaf = 0; leaf < 4; ++leaf)
        EXPECT_TRUE(d.has_arc(leaf, 4));
    EXPECT_EQ(d.max_outdegree(), 1u);
}

TEST(Degeneracy, EmptyGraph)
{
    UndirectedGraph g = UndirectedGraph::from_edges(0, {});
    EXPECT_EQ(degeneracy_order(g).degeneracy, 0u);
    EXPECT_EQ(orient_by_degeneracy(g).num_arcs(), 0u);
}

TEST(DegeneracyProperty, OrientationIsAcyclicBoundedAndFaithful)
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = mixed_random_graph(60, rng);
        auto order = degeneracy_order(g);
        auto d = orient_by_degeneracy(g);
        EXPECT_TRUE(d.is_acyclic());
        EXPECT_LE(d.max_outdegree(), order.degeneracy);
        EXPECT_EQ(d.to_undirected().edges(), g.edges());
        // deterministic
        EXPECT_EQ(degeneracy_order(g).order, order.order);
    }
}

TEST(DegeneracyProperty, TreesHaveOutdegreeOne)
{
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = bounded_degeneracy(40, 1, rng);
        EXPECT_LE(orient_by_degeneracy(g).max_outdegree(), 1u);
    }
}

TEST(DirectedGraph, RejectsBadArcs)
{
    std::vector<Edge> loop{{1, 1}};
    std::vector<Edge> twice{{0, 1}, {0, 1}};
    std::vector<Edge> both{{0, 1}, {1, 0}};
    EXPECT_THROW(DirectedGraph::from_arcs(2, loop), InputError);
    EXPECT_THROW(DirectedGraph::from_arcs(2, twice), InputError);
    EXPECT_THROW(DirectedGraph::from_arcs(2, both), InputError);
}
