#include <decount/error.hpp>
#include <decount/fixtures.hpp>
#include <decount/oracle.hpp>

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace decount;

namespace {

auto forms_of(const std::vector<Pattern> & patterns) -> std::set<CanonicalForm>
{
    std::set<CanonicalForm> forms;
    for (const auto & h : patterns)
        forms.insert(canonical_form(h));
    return forms;
}

// Some closed walk of the given length uses every edge of h, i.e. h is a
// homomorphic image of the cycle that is onto vertices and edges.
auto has_covering_closed_walk(const Pattern & h, int length) -> bool
{
    auto edges = h.edges();
    auto edge_index = [&](int u, int v) {
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e] == std::pair{std::min(u, v), std::max(u, v)})
                return static_cast<int>(e);
        return -1;
    };
    std::uint64_t all = (std::uint64_t{1} << edges.size()) - 1;
    auto walk = [&](auto & self, int v, int steps, std::uint64_t used) -> bool {
        if (steps == length)
            return v == 0 && used == all;
        for (int w = 0; w < h.num_vertices(); ++w)
            if (h.adjacent(v, w) && self(self, w, steps + 1, used | (std::uint64_t{1} << edge_index(v, w))))
                return true;
        return false;
    };
    return walk(walk, 0, 0, 0);
}

auto named(std::initializer_list<int> indices) -> std::vector<Pattern>
{
    std::vector<Pattern> result;
    for (int i : indices)
        result.push_back(builtin_pattern("H" + std::to_string(i)));
    return result;
}

} // namespace

TEST(Fixtures, EveryNameLoads)
{
    for (const auto & name : builtin_pattern_names())
        EXPECT_NO_THROW(builtin_pattern(name)) << name;
    EXPECT_THROW(builtin_pattern("H20"), InputError);
    EXPECT_THROW(builtin_pattern("C11"), InputError);
    EXPECT_THROW(builtin_pattern("nonsense"), InputError);
}

TEST(Fixtures, NamedFamiliesMatchSpasmMembers)
{
    std::vector<int> c10_family{1};
    for (int i = 4; i <= 19; ++i)
        c10_family.push_back(i);
    std::vector<Pattern> c10;
    for (int i : c10_family)
        c10.push_back(builtin_pattern("H" + std::to_string(i)));

    EXPECT_EQ(forms_of(c10), forms_of(long_cycle_spasm_members(10)));
    EXPECT_EQ(forms_of(named({1})), forms_of(long_cycle_spasm_members(8)));
    EXPECT_EQ(forms_of(named({2, 3, 4})), forms_of(long_cycle_spasm_members(9)));
    EXPECT_EQ(forms_of(c10).size(), 17u);

    for (int i = 1; i <= 4; ++i)
        EXPECT_EQ(canonical_form(builtin_pattern("fig8-H" + std::to_string(i))), canonical_form(builtin_pattern("H" + std::to_string(i))));
}

TEST(Fixtures, DescribedShapes)
{
    // H1 is C6 with a pendant edge, H4 is C6 with a triangle on an edge
    auto h1 = builtin_pattern("H1");
    EXPECT_EQ(h1.num_vertices(), 7);
    EXPECT_EQ(h1.num_edges(), 7);
    EXPECT_EQ(licl(h1), 6);
    auto h4 = builtin_pattern("H4");
    EXPECT_EQ(h4.num_vertices(), 7);
    EXPECT_EQ(h4.num_edges(), 8);
    EXPECT_EQ(licl(h4), 6);
    EXPECT_EQ(licl(builtin_pattern("H2")), 7);
}

TEST(Fixtures, Graphs)
{
    EXPECT_EQ(petersen_graph().num_edges(), 15u);
    auto chained = chained_cycles_graph();
    for (int k = 3; k <= 5; ++k)
        EXPECT_EQ(cycle_bruteforce(chained, k), 1);
    auto ts = triangle_square_graph();
    EXPECT_EQ(cycle_bruteforce(ts, 3), 1);
    EXPECT_EQ(cycle_bruteforce(ts, 4), 1);
}

TEST(Fixtures, ObstructionIsAnOrientationOfASpasmMember)
{
    auto d = obstruction_orientation();
    EXPECT_TRUE(d.is_acyclic());
    auto h = builtin_pattern("fig6-obstruction");
    EXPECT_EQ(h.num_vertices(), 8);
    EXPECT_TRUE(has_covering_closed_walk(h, 12));
}

TEST(Fixtures, LoadPattern)
{
    std::istringstream in("7 8\n8 9\n9 7\n");
    EXPECT_EQ(canonical_form(load_pattern(in)), canonical_form(cycle_pattern(3)));
    std::istringstream empty("# nothing\n");
    EXPECT_THROW(load_pattern(empty), InputError);
}
