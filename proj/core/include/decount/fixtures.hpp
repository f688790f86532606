#pragma once

#include <decount/dagtree.hpp>
#include <decount/graph.hpp>
#include <decount/pattern.hpp>
#include <decount/reducer.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace decount {

/// Names accepted by builtin_pattern.
auto builtin_pattern_names() -> std::vector<std::string>;

/// C3..C10, K2..K5, P2..P10 (paths by vertex count), petersen, H1..H19,
/// fig8-H1..fig8-H4 and fig6-obstruction. The H patterns are the non-cycle
/// members of Spasm(C8), Spasm(C9) and Spasm(C10) whose longest induced cycle
/// exceeds 5: H1 is C6 plus a pendant edge, H2 C7 plus a pendant edge, H3 C6
/// and C3 sharing a vertex, H4 C6 and C3 sharing an edge. H2 and H3 occur only
/// in Spasm(C9); H1 and H4..H19 make up the C10 family. fig8-Hi is Hi.
/// Throws InputError for unknown names.
auto builtin_pattern(std::string_view name) -> Pattern;

/// Pattern from an edge-list stream (labels are remapped densely).
auto load_pattern(std::istream & in) -> Pattern;

/// Non-cycle patterns of Spasm(C_k) whose longest induced cycle exceeds 5,
/// ordered by vertex count, edge count, then canonical code.
auto long_cycle_spasm_members(int k) -> std::vector<Pattern>;

auto petersen_graph() -> UndirectedGraph;

/// One triangle, one 4-cycle and one 5-cycle chained at single shared vertices.
auto chained_cycles_graph() -> UndirectedGraph;

/// One triangle and one 4-cycle sharing a vertex.
auto triangle_square_graph() -> UndirectedGraph;

/// Alternating orientation of C6 (sources s1..s3, intersection vertices i1..i3)
/// together with a 4-vertex DAG and the certificate with singleton blocks.
struct WedgeTriangleFixture
{
    enum PatternVertex { s1, s2, s3, i1, i2, i3 };
    enum GraphVertex { a, b, c, d };

    OrientedPattern pattern;
    DirectedGraph graph;
    ReducibilityCertificate certificate;
};

auto wedge_triangle_fixture() -> WedgeTriangleFixture;

/// An orientation of an 8-vertex member of Spasm(C12) with 4 sources and 4
/// intersection vertices that has no width-1 decomposition and no cycle
/// reduction for k <= 4.
auto obstruction_orientation() -> SmallDigraph;

} // namespace decount
