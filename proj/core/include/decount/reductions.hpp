#pragma once

#include <decount/bigint.hpp>
#include <decount/graph.hpp>

namespace decount {

/// Subdivides every edge once. Vertex n + e subdivides the e-th edge of
/// g.edges(); new vertices get labels above the largest input label.
auto expand_even(const UndirectedGraph & g) -> UndirectedGraph;

/// Replaces every edge by a 2-path and a 3-path. The e-th edge gets the
/// vertices n + 3e (2-path middle), n + 3e + 1 and n + 3e + 2 (3-path).
auto expand_odd(const UndirectedGraph & g) -> UndirectedGraph;

/// C_k count of g from the C_2k count of its even expansion (the identity).
auto recover_from_even(const BigInt & c2k_of_expansion, int k) -> BigInt;

struct OddRecovery
{
    BigInt c3;
    BigInt c4;
};

/// (C3, C4) counts of g from the C7 and C9 counts of its odd expansion.
/// Throws InvariantError on a divisibility violation.
auto recover_from_odd(const BigInt & c7, const BigInt & c9) -> OddRecovery;

/// As above, additionally checking c7 / 3 against an independently known C3 count.
auto recover_from_odd(const BigInt & c7, const BigInt & c9, const BigInt & c3_of_g) -> OddRecovery;

} // namespace decount
