#pragma once

#include <decount/bigint.hpp>
#include <decount/layered_graph.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace decount {

/// Exact big-integer matrix with per-row sorted nonzero storage. Products
/// accumulate row by row and never touch zero entries, so matrices over
/// reduced graphs with millions of vertices stay affordable.
class WeightMatrix
{
public:
    struct Entry
    {
        std::uint32_t col;
        BigInt value;
    };

    WeightMatrix() = default;
    WeightMatrix(std::size_t rows, std::size_t cols);

    static auto identity(std::size_t n) -> WeightMatrix;

    [[nodiscard]] auto rows() const noexcept -> std::size_t { return _rows.size(); }
    [[nodiscard]] auto cols() const noexcept -> std::size_t { return _cols; }
    [[nodiscard]] auto at(std::size_t i, std::size_t j) const -> BigInt;
    [[nodiscard]] auto row(std::size_t i) const -> std::span<const Entry> { return _rows[i]; }
    [[nodiscard]] auto nonzeros() const -> std::size_t;

    void set(std::size_t i, std::size_t j, BigInt value);
    void add(std::size_t i, std::size_t j, const BigInt & value);

    friend auto operator==(const WeightMatrix & a, const WeightMatrix & b) -> bool;

    friend auto multiply(const WeightMatrix & a, const WeightMatrix & b) -> WeightMatrix;

private:
    std::vector<std::vector<Entry>> _rows;
    std::size_t _cols = 0;
};

auto multiply(const WeightMatrix & a, const WeightMatrix & b) -> WeightMatrix;
auto trace(const WeightMatrix & a) -> BigInt;
/// tr(a * b) without forming the product.
auto trace_of_product(const WeightMatrix & a, const WeightMatrix & b) -> BigInt;

/// Threshold Δ for the degree classes. Zero selects the default for the
/// cycle length and edge count (cubic multiplication exponent).
struct ThresholdConfig
{
    std::uint64_t delta = 0;
};

/// ⌈m^(1/2)⌉ for k=3, ⌈m^(4/7)⌉ for k=4, ⌈m^(2/5)⌉ for k=5, at least 1.
auto default_delta(int k, std::size_t m) -> std::uint64_t;

enum class DegreeClass
{
    High,
    Medium,
    Low
};

struct WeightedArc
{
    VertexId to;
    BigInt weight;
};

/// Layered graph with edges directed from layer i to layer i+1 and vertices
/// renumbered globally, layer by layer.
struct LayeredView
{
    int k = 0;
    std::vector<std::size_t> offset;   ///< first global id of each layer
    std::vector<int> layer_of;
    std::vector<std::vector<WeightedArc>> out;   ///< sorted by target
    std::vector<std::vector<WeightedArc>> in;    ///< sorted by source

    [[nodiscard]] auto size() const -> std::size_t { return layer_of.size(); }
    [[nodiscard]] auto out_degree(VertexId v) const -> std::size_t { return out[v].size(); }
    [[nodiscard]] auto num_arcs() const -> std::size_t;
    /// Weight of u -> v, or nullptr when absent.
    [[nodiscard]] auto arc(VertexId u, VertexId v) const -> const BigInt *;
};

auto directed_view(const LayeredWeightedGraph & lg) -> LayeredView;

/// Class of every vertex under the rules of the k-specific kernel:
/// k=3: High iff d+ >= Δ, otherwise Low.
/// k=4: High iff d+ >= Δ, Low iff d+^2 < Δ, otherwise Medium.
/// k=5: High iff d+ >= Δ^2, Low iff d+ < Δ, otherwise Medium.
auto degree_classes(const LayeredView & view, int k, std::uint64_t delta) -> std::vector<DegreeClass>;

/// Per-case contributions of a matrix kernel, after the multiplicity corrections.
struct WSubAudit
{
    std::vector<BigInt> cases;
};

/// Sum over colourful k-cycles of the product of their edge weights.
auto wsub_bruteforce(const LayeredWeightedGraph & lg) -> BigInt;

auto wsub_c3_mm(const LayeredWeightedGraph & lg, const ThresholdConfig & cfg = {}, WSubAudit * audit = nullptr) -> BigInt;
auto wsub_c4_mm(const LayeredWeightedGraph & lg, const ThresholdConfig & cfg = {}, WSubAudit * audit = nullptr) -> BigInt;
auto wsub_c5_mm(const LayeredWeightedGraph & lg, const ThresholdConfig & cfg = {}, WSubAudit * audit = nullptr) -> BigInt;

/// Wedge-based kernel for k in {3, 4} over the degeneracy orientation of the
/// undirected view.
auto wsub_combinatorial(const LayeredWeightedGraph & lg) -> BigInt;

enum class WSubEngine
{
    Matrix,
    Combinatorial,
    BruteForce
};

/// Runs the requested engine; Combinatorial falls back to Matrix for k = 5.
auto wsub(const LayeredWeightedGraph & lg, WSubEngine engine, const ThresholdConfig & cfg = {}) -> BigInt;

} // namespace decount
