#include <decount/error.hpp>
#include <decount/oracle.hpp>
#include <decount/pipeline.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <unordered_map>

namespace decount {

auto resolve_threads(unsigned requested) -> unsigned
{
    if (requested != 0)
        return requested;
    if (const char * env = std::getenv("DECOUNT_THREADS")) {
        char * end = nullptr;
        auto value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return static_cast<unsigned>(value);
        throw InputError(std::string("DECOUNT_THREADS must be a positive integer, got '") + env + "'");
    }
    return 1;
}

auto to_string(Route route) -> std::string
{
    switch (route) {
    case Route::Tau1: return "tau1";
    case Route::Reduction: return "reducible";
    case Route::Fallback: return "fallback";
    }
    return "unknown";
}

namespace
{
    // Runs body(i) for i in [0, count) on up to `threads` workers; the first
    // exception is rethrown after all workers stop.
    template <typename Body>
    void parallel_for(std::size_t count, unsigned threads, Body && body)
    {
        if (threads <= 1 || count <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            while (true) {
                auto i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    struct VerdictKey
    {
        CanonicalForm form;
        int k_max;

        friend auto operator<(const VerdictKey & a, const VerdictKey & b) -> bool
        {
            if (a.k_max != b.k_max)
                return a.k_max < b.k_max;
            return a.form < b.form;
        }
    };

    std::mutex verdict_mutex;
    std::map<VerdictKey, OrientationVerdict> verdict_cache;

    std::mutex spasm_mutex;
    std::map<CanonicalForm, SpasmDecomposition> spasm_cache;
}

auto classify_orientation(const SmallDigraph & orientation, int k_max) -> OrientationVerdict
{
    auto form = canonical_form(orientation);
    {
        std::lock_guard lock(verdict_mutex);
        auto it = verdict_cache.find({form, k_max});
        if (it != verdict_cache.end())
            return it->second;
    }

    OrientationVerdict v;
    v.orientation = digraph_from_form(form);
    v.form = form;
    auto p = analyze(v.orientation);
    v.sources = static_cast<int>(p.sources.size());
    v.intersections = popcount(p.intersection);
    if ((v.decomposition = find_tau1_decomposition(p)))
        v.route = Route::Tau1;
    else if ((v.certificate = find_cycle_reduction(p, k_max)))
        v.route = Route::Reduction;
    else
        v.route = Route::Fallback;

    std::lock_guard lock(verdict_mutex);
    verdict_cache.emplace(VerdictKey{form, k_max}, v);
    return v;
}

auto classify_pattern(const Pattern & h, int k_max) -> ClassificationReport
{
    ClassificationReport report;
    report.pattern = h;
    report.k_max = k_max;
    for (const auto & cls : orientation_classes(h)) {
        auto v = classify_orientation(cls.representative, k_max);
        v.multiplicity = cls.multiplicity;
        report.orientations.push_back(std::move(v));
    }
    return report;
}

auto ClassificationReport::all_tau1() const -> bool
{
    return std::all_of(orientations.begin(), orientations.end(), [](const auto & o) { return o.route == Route::Tau1; });
}

auto ClassificationReport::computable() const -> bool
{
    return std::none_of(orientations.begin(), orientations.end(), [](const auto & o) { return o.route == Route::Fallback; });
}

auto ClassificationReport::cycle_length() const -> int
{
    if (! computable())
        return -1;
    int k = 0;
    for (const auto & o : orientations)
        if (o.certificate)
            k = std::max(k, o.certificate->k);
    return k;
}

auto ClassificationReport::verdict() const -> std::string
{
    int k = cycle_length();
    if (k < 0)
        return "not-computable";
    if (k == 0)
        return "tau1";
    return "C" + std::to_string(k) + "-computable";
}

auto cached_spasm(const Pattern & h) -> const SpasmDecomposition &
{
    auto form = canonical_form(h);
    {
        std::lock_guard lock(spasm_mutex);
        auto it = spasm_cache.find(form);
        if (it != spasm_cache.end())
            return it->second;
    }
    auto dec = spasm_coefficients(h);
    std::lock_guard lock(spasm_mutex);
    return spasm_cache.emplace(form, std::move(dec)).first->second;
}

CountingSession::CountingSession(const UndirectedGraph & g, PipelineOptions options) :
    _oriented(orient_by_degeneracy(g)),
    _options(options)
{
}

CountingSession::CountingSession(DirectedGraph oriented, PipelineOptions options) :
    _oriented(std::move(oriented)),
    _options(options)
{
    if (! _oriented.is_acyclic())
        throw InputError("CountingSession needs an acyclic orientation");
}

auto CountingSession::hom_oriented(const OrientationVerdict & verdict) -> BigInt
{
    {
        std::lock_guard lock(_mutex);
        auto it = _memo.find(verdict.form);
        if (it != _memo.end())
            return it->second;
    }

    BigInt count;
    auto p = analyze(verdict.orientation);
    switch (verdict.route) {
    case Route::Tau1: count = hom_count_tau1(p, *verdict.decomposition, _oriented); break;
    case Route::Reduction:
        count = hom_count_via_reduction(*verdict.certificate, p, _oriented, _options.engine, _options.thresholds);
        break;
    case Route::Fallback:
        if (! _options.allow_fallback)
            throw UnsupportedError("orientation " + verdict.form.to_string() +
                " has no width-1 decomposition and is not cycle-reducible for k <= " + std::to_string(_options.k_max) +
                "; enable the brute-force fallback to count it anyway");
        count = hom_bruteforce(_oriented, verdict.orientation);
        break;
    }

    std::lock_guard lock(_mutex);
    _memo.emplace(verdict.form, count);
    return count;
}

auto CountingSession::hom(const Pattern & h) -> BigInt
{
    auto report = classify_pattern(h, _options.k_max);
    std::vector<BigInt> parts(report.orientations.size());
    parallel_for(parts.size(), resolve_threads(_options.threads), [&](std::size_t i) {
        const auto & o = report.orientations[i];
        parts[i] = hom_oriented(o) * o.multiplicity;
    });
    BigInt total = 0;
    for (const auto & part : parts)
        total += part;
    return total;
}

auto CountingSession::sub(const Pattern & h) -> BigInt
{
    const auto & dec = cached_spasm(h);
    HomTable homs;
    for (const auto & entry : dec.entries)
        if (entry.coefficient != 0)
            homs[entry.form] = hom(entry.pattern);
    return sub_from_homs(dec, homs);
}

auto hom_count(const UndirectedGraph & g, const Pattern & h, const PipelineOptions & options) -> BigInt
{
    CountingSession session(g, options);
    return session.hom(h);
}

auto sub_count(const UndirectedGraph & g, const Pattern & h, const PipelineOptions & options) -> BigInt
{
    CountingSession session(g, options);
    return session.sub(h);
}

auto count_triangles(const UndirectedGraph & g) -> BigInt
{
    auto d = orient_by_degeneracy(g);
    std::uint64_t total = 0;
    for (VertexId v = 0; v < d.num_vertices(); ++v) {
        auto out = d.out_neighbors(v);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                if (d.has_arc(out[i], out[j]) || d.has_arc(out[j], out[i]))
                    ++total;
    }
    return total;
}

auto count_four_cycles(const UndirectedGraph & g) -> BigInt
{
    // Each 4-cycle has exactly one diagonal whose two wedges are both
    // out-out wedges or directed 2-paths; count pairs of such wedges.
    auto d = orient_by_degeneracy(g);
    std::unordered_map<std::uint64_t, std::uint64_t> wedges;
    auto key = [](VertexId a, VertexId b) {
        if (a > b)
            std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | b;
    };
    for (VertexId v = 0; v < d.num_vertices(); ++v) {
        auto out = d.out_neighbors(v);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                ++wedges[key(out[i], out[j])];
        for (auto a : d.in_neighbors(v))
            for (auto b : out)
                ++wedges[key(a, b)];
    }
    BigInt total = 0;
    for (const auto & [pair, count] : wedges)
        total += BigInt(count) * (count - 1) / 2;
    return total;
}

auto count_cycles(const UndirectedGraph & g, int k, const PipelineOptions & options) -> BigInt
{
    if (k < 3 || k > 10)
        throw InputError("cycle length must be between 3 and 10, got " + std::to_string(k));
    if (k == 3)
        return count_triangles(g);
    if (k == 4)
        return count_four_cycles(g);
    return sub_count(g, cycle_pattern(k), options);
}

} // namespace decount
