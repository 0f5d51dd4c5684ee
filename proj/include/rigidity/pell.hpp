#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rigidity/exact.hpp"

namespace rigidity {

/// Solution of (2n+1)^2 - 12 r^2 = 1 in positive integers.
struct PellSolution {
    int index;  // generation k >= 1
    BigInt n_tilde;
    BigInt r_tilde;
};

/// Solution of p^2 - 2np + n(2n-1)/3 = 0 in positive integers.
struct DegeneracySolution {
    int index;
    BigInt n_tilde;
    BigInt p_tilde;
    bool p_even;
};

/// Even-degree solution pair: (n, p) and its mirror (n, 2n - p).
struct ExceptionalPair {
    int index;
    BigInt n;
    BigInt p;
    BigInt mirror;
};

/// First `count` solutions via n' = 7n + 12r + 3, r' = 4n + 7r + 2 from
/// (3, 2). Every output is checked against the defining equation and against
/// the k-th power of the fundamental unit 7 + 2 sqrt(12).
std::vector<PellSolution> pell_solutions(int count);

/// First `count` solutions via n' = 19n - 12p + 3, p' = 8n - 5p + 1 from
/// (3, 1); the parity of p alternates odd/even with the index.
std::vector<DegeneracySolution> degeneracy_solutions(int count);

/// First `count` even-degree pairs via n' = 265n - 168p + 48,
/// p' = 112n - 71p + 20 from (48, 20); each output is checked against the
/// even-index subsequence of degeneracy_solutions.
std::vector<ExceptionalPair> exceptional_pairs(int count);

/// Exhaustive scan independent of all recursions: for every n <= n_max,
/// tests whether n(n+1)/3 is a perfect square r^2 and emits (n, n -+ r)
/// filtered to even p with 2 <= p <= 2(n-1).
std::vector<std::pair<BigInt, BigInt>> brute_force_scan(const BigInt& n_max);

struct DegreeClassification {
    BigInt p;
    bool exceptional = false;
    std::optional<int> generation;               // k with p in {p_k, 2n_k - p_k}
    std::optional<BigInt> exceptional_dimension; // the matching n_k
    std::vector<BigInt> unresolved_dimensions;   // always contains p/2
};

/// Classifies an even degree p >= 2: the dimension n = p/2 is always
/// unresolved; n_k joins it exactly when p is one of the enumerated
/// exceptional degrees. Enumeration stops once p_k exceeds p.
DegreeClassification classify_degree(const BigInt& p);

}  // namespace rigidity
