// Acceptance gate. Prints one PASS/FAIL line per criterion; criterion 7 is
// informational and reports WARN instead of FAIL. Exit status is non-zero
// when any strict criterion fails.

#include "generators.hpp"
#include "reference.hpp"

#include <decount/error.hpp>
#include <decount/fixtures.hpp>
#include <decount/oracle.hpp>
#include <decount/pipeline.hpp>
#include <decount/reducer.hpp>
#include <decount/reductions.hpp>
#include <decount/wsub.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace decount;
using namespace decount::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
    bool ok = true;
    std::string detail;
};

// Collects the first few mismatches of a criterion.
class Checker
{
public:
    template <typename A, typename B>
    void equal(const A & actual, const B & expected, const std::string & what)
    {
        ++_checks;
        if (actual == expected)
            return;
        ++_failures;
        if (_failures <= 5) {
            std::ostringstream msg;
            msg << what << ": got " << actual << ", expected " << expected;
            _messages.push_back(msg.str());
        }
    }

    void require(bool condition, const std::string & what)
    {
        ++_checks;
        if (condition)
            return;
        ++_failures;
        if (_failures <= 5)
            _messages.push_back(what);
    }

    [[nodiscard]] auto outcome(const std::string & summary) const -> Outcome
    {
        Outcome o;
        o.ok = _failures == 0;
        std::ostringstream text;
        text << summary << "; " << _checks << " checks";
        if (_failures > 0) {
            text << ", " << _failures << " failed";
            for (const auto & m : _messages)
                text << "\n    " << m;
        }
        o.detail = text.str();
        return o;
    }

private:
    std::size_t _checks = 0, _failures = 0;
    std::vector<std::string> _messages;
};

auto seconds_since(Clock::time_point start) -> double { return std::chrono::duration<double>(Clock::now() - start).count(); }

auto oracle_equivalence() -> Outcome
{
    Checker check;
    Rng rng(20240601);

    std::vector<Pattern> patterns;
    for (int n = 1; n <= 6; ++n)
        for (auto & h : connected_patterns(n))
            patterns.push_back(h);
    std::size_t small = patterns.size();
    auto sevens = connected_patterns(7);
    std::shuffle(sevens.begin(), sevens.end(), rng);
    for (int i = 0; i < 12; ++i)
        patterns.push_back(sevens[i]);

    const int graphs = 100;
    for (int trial = 0; trial < graphs; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(6, 12)(rng);
        auto g = trial % 2 == 0 ? erdos_renyi(n, std::uniform_real_distribution<double>(0.2, 0.5)(rng), rng)
                                : bounded_degeneracy(n, std::uniform_int_distribution<std::size_t>(2, 4)(rng), rng);
        CountingSession session(g);
        std::string where = "graph " + std::to_string(trial);
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            const auto & h = patterns[i];
            std::string what = where + " pattern " + canonical_form(h).to_string();
            check.equal(session.hom(h), hom_bruteforce(g, h), what + " hom");
            check.equal(session.sub(h), sub_bruteforce(g, h), what + " sub");
        }
        for (int k = 3; k <= 10; ++k) {
            std::string what = where + " C" + std::to_string(k);
            check.equal(session.hom(cycle_pattern(k)), closed_walks(g, k), what + " hom");
            check.equal(session.sub(cycle_pattern(k)), cycle_bruteforce(g, k), what + " sub");
            check.equal(count_cycles(g, k), cycle_bruteforce(g, k), what + " count_cycles");
        }
    }
    return check.outcome(std::to_string(graphs) + " graphs x (" + std::to_string(small) + " patterns up to 6 vertices, C3..C10, " +
        std::to_string(patterns.size() - small) + " random 7-vertex patterns)");
}

auto wsub_equivalence() -> Outcome
{
    Checker check;
    Rng rng(777);
    const int instances = 100;
    for (int k = 3; k <= 5; ++k)
        for (int trial = 0; trial < instances; ++trial) {
            std::size_t width = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
            auto lg = random_layered(k, width, std::uniform_real_distribution<double>(0.05, 0.6)(rng), 10, rng);
            auto expected = wsub_bruteforce(lg);
            auto m = std::max<std::size_t>(lg.num_edges(), 1);
            std::string where = "C" + std::to_string(k) + " instance " + std::to_string(trial);
            for (std::uint64_t delta : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{0}, std::uint64_t{m}}) {
                ThresholdConfig cfg{delta};
                std::string what = where + " delta " + std::to_string(delta);
                // exact_divide raises InvariantError on any non-integral correction
                try {
                    WSubAudit audit;
                    BigInt got = k == 3 ? wsub_c3_mm(lg, cfg, &audit) : k == 4 ? wsub_c4_mm(lg, cfg, &audit) : wsub_c5_mm(lg, cfg, &audit);
                    check.equal(got, expected, what);
                }
                catch (const InvariantError & e) {
                    check.require(false, what + ": " + e.what());
                }
            }
            if (k <= 4)
                check.equal(wsub_combinatorial(lg), expected, where + " combinatorial");
        }
    return check.outcome(std::to_string(instances) + " instances per k in 3..5, delta in {1, 2, default, m}");
}

auto reference_fixtures() -> Outcome
{
    Checker check;

    using F = WedgeTriangleFixture;
    auto fx = wedge_triangle_fixture();
    auto lg = build_reduced_graph(fx.certificate, fx.pattern, fx.graph);
    BigInt cc_weight = -1;
    for (const auto & e : lg.edges[0])
        if (lg.layer_keys[0][e.u][0] == F::c && lg.layer_keys[1][e.v][0] == F::c)
            cc_weight = e.weight;
    check.equal(cc_weight, 2, "reduced-graph edge (c@1, c@2) weight");
    check.equal(wsub(lg, WSubEngine::Matrix), hom_bruteforce(fx.graph, fx.pattern.dag), "WSub of the reduced graph vs Hom");

    auto even = expand_even(chained_cycles_graph());
    for (int k : {6, 8, 10}) {
        check.equal(count_cycles(even, k), 1, "even expansion C" + std::to_string(k));
        check.equal(cycle_bruteforce(even, k), 1, "even expansion C" + std::to_string(k) + " (oracle)");
    }

    auto odd = expand_odd(triangle_square_graph());
    auto c7 = count_cycles(odd, 7), c9 = count_cycles(odd, 9);
    check.equal(c7, 3, "odd expansion C7");
    check.equal(c9, 5, "odd expansion C9");
    check.equal(cycle_bruteforce(odd, 7), 3, "odd expansion C7 (oracle)");
    check.equal(cycle_bruteforce(odd, 9), 5, "odd expansion C9 (oracle)");
    auto r = recover_from_odd(c7, c9, count_triangles(triangle_square_graph()));
    check.equal(r.c3, 1, "recovered C3");
    check.equal(r.c4, 1, "recovered C4");

    check.equal(degeneracy_order(even).degeneracy, 2u, "even expansion degeneracy");
    check.equal(degeneracy_order(odd).degeneracy, 2u, "odd expansion degeneracy");
    return check.outcome("wedge-triangle reduction, even/odd expansion fixtures, expansion degeneracy");
}

auto classification() -> Outcome
{
    Checker check;
    std::size_t swept = 0;
    for (int n = 6; n <= 7; ++n)
        for (const auto & h : connected_patterns(n)) {
            auto report = classify_pattern(h, 3);
            check.require(report.computable() && report.cycle_length() <= 3,
                std::to_string(n) + "-vertex pattern " + canonical_form(h).to_string() + " is " + report.verdict());
            ++swept;
        }

    auto spasm_members = [&](int k, int k_max) {
        for (const auto & e : spasm(cycle_pattern(k)).entries) {
            auto report = classify_pattern(e.pattern, k_max);
            check.require(report.computable(), "Spasm(C" + std::to_string(k) + ") member " + e.form.to_string() + " is " + report.verdict());
        }
    };
    spasm_members(8, 4);
    spasm_members(9, 4);
    spasm_members(10, 5);

    auto p = analyze(obstruction_orientation());
    check.require(! find_tau1_decomposition(p), "obstruction has a width-1 decomposition");
    check.require(! find_cycle_reduction(p, 4), "obstruction is cycle-reducible for k <= 4");
    check.equal(to_string(classify_orientation(obstruction_orientation(), 4).route), to_string(Route::Fallback), "obstruction route");

    return check.outcome(std::to_string(swept) + " connected 6/7-vertex patterns, Spasm(C8), Spasm(C9), Spasm(C10), obstruction");
}

auto reduction_closure() -> Outcome
{
    Checker check;
    Rng rng(31337);
    const int graphs = 50;
    for (int trial = 0; trial < graphs; ++trial) {
        auto g = mixed_random_graph(10, rng);
        auto e = expand_even(g);
        for (int k = 3; k <= 5; ++k)
            check.equal(count_cycles(e, 2 * k), count_cycles(g, k), "graph " + std::to_string(trial) + " k=" + std::to_string(k));
    }
    return check.outcome(std::to_string(graphs) + " random graphs, k in {3, 4, 5}");
}

auto petersen_counts() -> Outcome
{
    Checker check;
    auto g = petersen_graph();
    // pinned after an oracle run
    const std::vector<std::pair<int, int>> pinned{{5, 12}, {6, 10}, {8, 15}, {9, 20}};
    for (auto [k, expected] : pinned)
        check.equal(count_cycles(g, k), expected, "Petersen C" + std::to_string(k));
    return check.outcome("Petersen C5, C6, C8, C9");
}

auto scaling_smoke() -> Outcome
{
    Rng rng(4);
    std::vector<double> times;
    std::ostringstream text;
    for (std::size_t n : {std::size_t{10000}, std::size_t{40000}}) {
        auto g = bounded_degeneracy(n, 4, rng);
        auto start = Clock::now();
        auto c6 = count_cycles(g, 6);
        times.push_back(seconds_since(start));
        text << "n=" << n << ": C6=" << c6 << " in " << times.back() << "s; ";
    }
    double ratio = times[1] / std::max(times[0], 1e-6);
    text << "time ratio " << ratio << " for 4x vertices (quadratic would be 16)";
    return {ratio < 16.0, text.str()};
}

} // namespace

auto main() -> int
{
    struct Criterion
    {
        int id;
        bool strict;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, true, oracle_equivalence},
        {2, true, wsub_equivalence},
        {3, true, reference_fixtures},
        {4, true, classification},
        {5, true, reduction_closure},
        {6, true, petersen_counts},
        {7, false, scaling_smoke},
    };

    bool all_ok = true;
    for (const auto & c : criteria) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const char * status = o.ok ? "PASS" : c.strict ? "FAIL" : "WARN";
        std::cout << status << " criterion " << c.id << ": " << o.detail << " [" << seconds_since(start) << "s]" << std::endl;
        if (! o.ok && c.strict)
            all_ok = false;
    }
    return all_ok ? 0 : 1;
}
