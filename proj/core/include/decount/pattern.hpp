#pragma once

#include <decount/bigint.hpp>
#include <decount/graph.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace decount {

/// Largest supported pattern, in vertices.
inline constexpr int max_pattern_vertices = 10;

/// Set of pattern vertices; bit v is vertex v.
using VertexMask = std::uint16_t;

inline auto bit(int v) -> VertexMask { return static_cast<VertexMask>(1u << v); }
inline auto popcount(VertexMask m) -> int { return std::popcount(static_cast<unsigned>(m)); }
inline auto contains(VertexMask set, VertexMask subset) -> bool { return (set & subset) == subset; }
inline auto full_mask(int n) -> VertexMask { return static_cast<VertexMask>((1u << n) - 1); }

/// Iterates over the vertices of a mask in ascending order.
template <typename F>
void for_each_vertex(VertexMask mask, F && f)
{
    unsigned m = mask;
    while (m != 0) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

auto mask_vertices(VertexMask mask) -> std::vector<int>;

/// A small directed graph on at most max_pattern_vertices vertices.
struct SmallDigraph
{
    int n = 0;
    std::array<VertexMask, max_pattern_vertices> out{};
    std::array<VertexMask, max_pattern_vertices> in{};

    void add_arc(int u, int v)
    {
        out[u] |= bit(v);
        in[v] |= bit(u);
    }

    [[nodiscard]] auto has_arc(int u, int v) const -> bool { return (out[u] & bit(v)) != 0; }
    [[nodiscard]] auto num_arcs() const -> int;
    [[nodiscard]] auto arcs() const -> std::vector<std::pair<int, int>>;
    [[nodiscard]] auto is_acyclic() const -> bool;

    friend auto operator==(const SmallDigraph &, const SmallDigraph &) -> bool = default;
};

/// A connected simple undirected pattern graph.
class Pattern
{
public:
    Pattern() = default;

    /// Validates loops, connectivity and the vertex cap; repeated edges collapse.
    static auto from_edges(int n, std::span<const std::pair<int, int>> edges) -> Pattern;
    static auto from_graph(const UndirectedGraph & g) -> Pattern;

    [[nodiscard]] auto num_vertices() const noexcept -> int { return _n; }
    [[nodiscard]] auto num_edges() const -> int;
    [[nodiscard]] auto neighbors(int v) const -> VertexMask { return _adj[v]; }
    [[nodiscard]] auto adjacent(int u, int v) const -> bool { return (_adj[u] & bit(v)) != 0; }
    [[nodiscard]] auto edges() const -> std::vector<std::pair<int, int>>;
    [[nodiscard]] auto to_graph() const -> UndirectedGraph;
    [[nodiscard]] auto as_digraph() const -> SmallDigraph;

    friend auto operator==(const Pattern &, const Pattern &) -> bool = default;

private:
    int _n = 0;
    std::array<VertexMask, max_pattern_vertices> _adj{};
};

/// Canonical encoding of a small (di)graph: the adjacency matrix, packed
/// row-major into 128 bits, under the minimal labelling found by an
/// individualisation-refinement search. Equal forms mean isomorphic graphs.
struct CanonicalForm
{
    int n = 0;
    unsigned __int128 code = 0;
    std::uint64_t automorphisms = 1;

    friend auto operator==(const CanonicalForm & a, const CanonicalForm & b) -> bool
    {
        return a.n == b.n && a.code == b.code;
    }

    friend auto operator<(const CanonicalForm & a, const CanonicalForm & b) -> bool
    {
        return a.n != b.n ? a.n < b.n : a.code < b.code;
    }

    [[nodiscard]] auto to_string() const -> std::string;
};

struct CanonicalFormHash
{
    auto operator()(const CanonicalForm & f) const noexcept -> std::size_t
    {
        auto lo = static_cast<std::uint64_t>(f.code);
        auto hi = static_cast<std::uint64_t>(f.code >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL) ^ static_cast<std::uint64_t>(f.n));
    }
};

auto canonical_form(const Pattern & h) -> CanonicalForm;
auto canonical_form(const SmallDigraph & h) -> CanonicalForm;

/// Relabelling that realises the canonical form: `labelling[i]` is the
/// vertex placed at position i.
auto canonical_labelling(const SmallDigraph & h) -> std::vector<int>;

/// The graph that a canonical form encodes.
auto pattern_from_form(const CanonicalForm & form) -> Pattern;

/// The (di)graph a canonical form encodes, read as arcs.
auto digraph_from_form(const CanonicalForm & form) -> SmallDigraph;

/// Every acyclic orientation of `h`, each exactly once, as labelled digraphs on V(h).
auto enumerate_acyclic_orientations(const Pattern & h) -> std::vector<SmallDigraph>;

/// Isomorphism class of acyclic orientations with its multiplicity in Σ(H).
struct OrientationClass
{
    SmallDigraph representative;
    CanonicalForm form;
    std::uint64_t multiplicity = 0;
};

auto orientation_classes(const Pattern & h) -> std::vector<OrientationClass>;

/// Length of the longest induced cycle, 0 for forests.
auto licl(const Pattern & h) -> int;

struct SpasmEntry
{
    Pattern pattern;
    CanonicalForm form;
    Rational coefficient;
};

/// Patterns of a spasm together with the coefficients mu with
/// Sub(G, H) = sum mu * Hom(G, H').
struct SpasmDecomposition
{
    Pattern source;
    std::vector<SpasmEntry> entries;

    [[nodiscard]] auto find(const CanonicalForm & form) const -> const SpasmEntry *;
};

/// Merge-closure of `h` under identifying non-adjacent vertex pairs,
/// deduplicated up to isomorphism. Coefficients are left at zero.
auto spasm(const Pattern & h) -> SpasmDecomposition;

/// Spasm with exact coefficients from Möbius inversion over partitions of
/// V(h) into independent sets, scaled by 1 / aut(h).
auto spasm_coefficients(const Pattern & h) -> SpasmDecomposition;

using HomTable = std::map<CanonicalForm, BigInt>;

/// Sub(G, H) = sum over entries of mu * homs[entry]. Throws InputError when an
/// entry is missing and InvariantError when the sum is not a non-negative integer.
auto sub_from_homs(const SpasmDecomposition & dec, const HomTable & homs) -> BigInt;

/// Identifies vertices of `h` according to `block_of` (block ids 0..b-1),
/// dropping duplicate edges. Blocks must be independent sets.
auto quotient(const Pattern & h, std::span<const int> block_of) -> Pattern;

auto cycle_pattern(int k) -> Pattern;
auto path_pattern(int vertices) -> Pattern;
auto complete_pattern(int n) -> Pattern;

/// Connected patterns on exactly `n` vertices, one per isomorphism class,
/// ordered by canonical form.
auto connected_patterns(int n) -> std::vector<Pattern>;

} // namespace decount
