#include <decount/error.hpp>
#include <decount/fixtures.hpp>

#include <algorithm>
#include <charconv>
#include <istream>

namespace decount {

namespace
{
    auto parse_suffix(std::string_view text, int & value) -> bool
    {
        if (text.empty())
            return false;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        return ec == std::errc{} && ptr == text.data() + text.size();
    }

    auto petersen_edges() -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);           // outer 5-cycle
            edges.emplace_back(i, i + 5);                 // spokes
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);   // inner pentagram
        }
        return edges;
    }

    // Named members of the long-cycle spasms. H1 and H4 appear in both the
    // C8/C9 and the C10 families; H2 and H3 only in spasm(C9).
    const std::vector<std::vector<std::pair<int, int>>> h_patterns = {
        {{0, 6}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 6}},                                   // C6 + pendant
        {{0, 7}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 7}},                           // C7 + pendant
        {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 7}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},                   // C6 . C3 at a vertex
        {{0, 1}, {0, 2}, {1, 3}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}},                           // C6 + C3 on an edge
        {{0, 8}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 8}, {7, 8}},                   // C8 + pendant
        {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 8}, {5, 8}, {6, 7}, {6, 8}, {7, 8}},           // C7 . C3
        {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},                   // C7 + C3 on an edge
        {{0, 1}, {0, 2}, {1, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 8}},           // C6 . C4
        {{0, 6}, {1, 7}, {2, 4}, {2, 6}, {3, 5}, {3, 6}, {4, 7}, {5, 7}},
        {{0, 1}, {0, 2}, {1, 3}, {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}},                   // C6 + C4 on an edge
        {{0, 6}, {1, 7}, {2, 3}, {2, 4}, {3, 6}, {4, 7}, {5, 6}, {5, 7}},
        {{0, 1}, {1, 7}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 7}},
        {{0, 6}, {1, 7}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 7}},
        {{0, 7}, {1, 7}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 7}},
        {{0, 1}, {0, 2}, {1, 3}, {2, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},
        {{0, 1}, {0, 2}, {1, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}},
        {{0, 1}, {0, 6}, {1, 7}, {2, 3}, {2, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}},
        {{0, 1}, {0, 2}, {1, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}},                           // theta(2,2,4)
        {{0, 1}, {0, 5}, {1, 6}, {2, 3}, {2, 5}, {3, 6}, {4, 5}, {4, 6}},                           // theta(2,3,3)
    };

    auto h_pattern(int index) -> Pattern
    {
        const auto & edges = h_patterns[static_cast<std::size_t>(index - 1)];
        int n = 0;
        for (auto [u, v] : edges)
            n = std::max({n, u + 1, v + 1});
        return Pattern::from_edges(n, edges);
    }

    auto to_graph(int n, const std::vector<std::pair<int, int>> & edges) -> UndirectedGraph
    {
        std::vector<Edge> e;
        for (auto [u, v] : edges)
            e.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        return UndirectedGraph::from_edges(static_cast<std::size_t>(n), e);
    }
}

auto builtin_pattern_names() -> std::vector<std::string>
{
    std::vector<std::string> names;
    for (int k = 3; k <= 10; ++k)
        names.push_back("C" + std::to_string(k));
    for (int k = 2; k <= 5; ++k)
        names.push_back("K" + std::to_string(k));
    for (int k = 2; k <= 10; ++k)
        names.push_back("P" + std::to_string(k));
    names.push_back("petersen");
    for (int i = 1; i <= 19; ++i)
        names.push_back("H" + std::to_string(i));
    for (int i = 1; i <= 4; ++i)
        names.push_back("fig8-H" + std::to_string(i));
    names.push_back("fig6-obstruction");
    return names;
}

auto builtin_pattern(std::string_view name) -> Pattern
{
    int value = 0;
    if (name == "petersen")
        return Pattern::from_edges(10, petersen_edges());
    if (name == "fig6-obstruction") {
        auto d = obstruction_orientation();
        std::vector<std::pair<int, int>> edges = d.arcs();
        return Pattern::from_edges(d.n, edges);
    }
    if (name.starts_with("fig8-H") && parse_suffix(name.substr(6), value)) {
        if (value >= 1 && value <= 4)
            return h_pattern(value);
    }
    else if (name.starts_with("H") && parse_suffix(name.substr(1), value)) {
        if (value >= 1 && value <= static_cast<int>(h_patterns.size()))
            return h_pattern(value);
    }
    else if (name.size() >= 2 && parse_suffix(name.substr(1), value)) {
        if (name[0] == 'C' && value >= 3 && value <= 10)
            return cycle_pattern(value);
        if (name[0] == 'K' && value >= 2 && value <= 5)
            return complete_pattern(value);
        if (name[0] == 'P' && value >= 2 && value <= 10)
            return path_pattern(value);
    }
    throw InputError("unknown pattern name '" + std::string(name) + "'");
}

auto load_pattern(std::istream & in) -> Pattern
{
    auto g = load_edge_list(in);
    if (g.num_vertices() == 0)
        throw InputError("pattern file has no edges");
    return Pattern::from_graph(g);
}

auto long_cycle_spasm_members(int k) -> std::vector<Pattern>
{
    auto dec = spasm(cycle_pattern(k));
    std::vector<SpasmEntry> kept;
    for (auto & e : dec.entries) {
        bool is_cycle = e.pattern.num_vertices() == e.pattern.num_edges() && licl(e.pattern) == e.pattern.num_vertices();
        if (! is_cycle && licl(e.pattern) > 5)
            kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end(), [](const SpasmEntry & a, const SpasmEntry & b) {
        if (a.pattern.num_vertices() != b.pattern.num_vertices())
            return a.pattern.num_vertices() < b.pattern.num_vertices();
        if (a.pattern.num_edges() != b.pattern.num_edges())
            return a.pattern.num_edges() < b.pattern.num_edges();
        return a.form.code < b.form.code;
    });
    std::vector<Pattern> result;
    for (auto & e : kept)
        result.push_back(e.pattern);
    return result;
}

auto petersen_graph() -> UndirectedGraph { return to_graph(10, petersen_edges()); }

auto chained_cycles_graph() -> UndirectedGraph
{
    return to_graph(10, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 2}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
}

auto triangle_square_graph() -> UndirectedGraph
{
    return to_graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
}

auto wedge_triangle_fixture() -> WedgeTriangleFixture
{
    using F = WedgeTriangleFixture;
    SmallDigraph h;
    h.n = 6;
    h.add_arc(F::s1, F::i1);
    h.add_arc(F::s2, F::i1);
    h.add_arc(F::s2, F::i2);
    h.add_arc(F::s3, F::i2);
    h.add_arc(F::s3, F::i3);
    h.add_arc(F::s1, F::i3);

    std::vector<Edge> arcs{{F::a, F::b}, {F::a, F::c}, {F::b, F::c}, {F::b, F::d}, {F::c, F::d}};

    F fixture;
    fixture.pattern = analyze(h);
    fixture.graph = DirectedGraph::from_arcs(4, arcs);
    fixture.certificate.k = 3;
    fixture.certificate.blocks = {bit(F::s1), bit(F::s2), bit(F::s3)};
    fixture.certificate.designated = {F::s1, F::s2, F::s3};
    fixture.certificate.intersections = {bit(F::i1), bit(F::i2), bit(F::i3)};
    fixture.certificate.i_star = bit(F::i1) | bit(F::i2) | bit(F::i3);
    return fixture;
}

auto obstruction_orientation() -> SmallDigraph
{
    // The only 8-vertex orientation in spasm(C12) with four sources and four
    // intersection vertices that is neither width 1 nor cycle-reducible.
    SmallDigraph d;
    d.n = 8;
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {3, 2}, {3, 4}, {3, 7}, {5, 1}, {5, 4}, {6, 1}, {6, 7}})
        d.add_arc(u, v);
    return d;
}

} // namespace decount
