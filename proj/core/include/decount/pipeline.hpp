#pragma once

#include <decount/bigint.hpp>
#include <decount/dagtree.hpp>
#include <decount/graph.hpp>
#include <decount/pattern.hpp>
#include <decount/reducer.hpp>
#include <decount/wsub.hpp>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace decount {

struct PipelineOptions
{
    int k_max = 5;
    /// Route orientations the framework cannot handle to the brute-force
    /// oracle instead of raising UnsupportedError.
    bool allow_fallback = false;
    WSubEngine engine = WSubEngine::Matrix;
    ThresholdConfig thresholds{};
    /// Worker threads for per-orientation work; 0 reads DECOUNT_THREADS.
    unsigned threads = 1;
};

/// 0 means "use DECOUNT_THREADS, or 1 when unset"; never returns 0.
auto resolve_threads(unsigned requested) -> unsigned;

enum class Route
{
    Tau1,
    Reduction,
    Fallback
};

auto to_string(Route route) -> std::string;

/// Verdict for one isomorphism class of acyclic orientations. The
/// orientation is stored under its canonical labelling, which is the
/// labelling the decomposition and certificate refer to.
struct OrientationVerdict
{
    SmallDigraph orientation;
    CanonicalForm form;
    std::uint64_t multiplicity = 1;
    Route route = Route::Fallback;
    int sources = 0;
    int intersections = 0;
    std::optional<DagTreeDecomposition> decomposition;
    std::optional<ReducibilityCertificate> certificate;
};

struct ClassificationReport
{
    Pattern pattern;
    int k_max = 5;
    std::vector<OrientationVerdict> orientations;

    [[nodiscard]] auto all_tau1() const -> bool;
    /// No orientation needs the fallback.
    [[nodiscard]] auto computable() const -> bool;
    /// Largest certificate length over the orientations: 0 when all are
    /// width 1, -1 when some orientation is not handled.
    [[nodiscard]] auto cycle_length() const -> int;
    /// "tau1", "C<k>-computable" or "not-computable".
    [[nodiscard]] auto verdict() const -> std::string;
};

/// Classifies one labelled acyclic orientation (width-1 first, then the
/// smallest cycle length up to k_max). Results are cached by canonical form.
auto classify_orientation(const SmallDigraph & orientation, int k_max = 5) -> OrientationVerdict;

auto classify_pattern(const Pattern & h, int k_max = 5) -> ClassificationReport;

/// Spasm with coefficients, cached by canonical form.
auto cached_spasm(const Pattern & h) -> const SpasmDecomposition &;

/// Counting against one input graph. Keeps the degeneracy orientation and
/// memoises per-orientation homomorphism counts by canonical form.
class CountingSession
{
public:
    explicit CountingSession(const UndirectedGraph & g, PipelineOptions options = {});
    /// For a graph that is already acyclically oriented.
    explicit CountingSession(DirectedGraph oriented, PipelineOptions options = {});

    [[nodiscard]] auto oriented() const -> const DirectedGraph & { return _oriented; }

    auto hom(const Pattern & h) -> BigInt;
    auto sub(const Pattern & h) -> BigInt;
    /// Hom(G⃗, H⃗) for one classified orientation.
    auto hom_oriented(const OrientationVerdict & verdict) -> BigInt;

private:
    DirectedGraph _oriented;
    PipelineOptions _options;
    std::mutex _mutex;
    std::map<CanonicalForm, BigInt> _memo;
};

auto hom_count(const UndirectedGraph & g, const Pattern & h, const PipelineOptions & options = {}) -> BigInt;
auto sub_count(const UndirectedGraph & g, const Pattern & h, const PipelineOptions & options = {}) -> BigInt;

/// C_k count for 3 <= k <= 10: wedge counting on the degeneracy orientation
/// for k in {3, 4}, the spasm pipeline otherwise.
auto count_cycles(const UndirectedGraph & g, int k, const PipelineOptions & options = {}) -> BigInt;

/// Triangles and 4-cycles by out-out wedges and directed 2-paths.
auto count_triangles(const UndirectedGraph & g) -> BigInt;
auto count_four_cycles(const UndirectedGraph & g) -> BigInt;

} // namespace decount
