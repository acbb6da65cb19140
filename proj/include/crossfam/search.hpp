#pragma once

// Ground-truth oracles and exact maximization over L-initial ID tuples.

#include <map>

#include "crossfam/objective.hpp"

namespace crossfam {

enum class SearchMode { Naive, Smart };

struct SearchBudget {
    std::uint64_t naive_tuples = 100000000;  // refuse above 1e8 tuple evaluations
    std::uint64_t smart_pairs = 10000000;    // refuse above 1e7 (I1, I2) pairs
};

struct SearchResult {
    Count max_sum;
    std::vector<SystemIds> extremal;  // every tuple attaining max_sum
    std::uint64_t evaluated = 0;
    SearchMode mode = SearchMode::Naive;
};

enum class ScanTarget { G, F };

struct ScanRow {
    KSet id;
    Count value;
};

struct ScanResult {
    std::vector<ScanRow> rows;  // lex order over the scan domain
    Count max_value;
    std::vector<KSet> argmax;
};

enum class ExtremalClass { C1Only, C2Only, Both, Other };

/// Whether every member of L(A,|A|) intersects every member of L(B,|B|),
/// by full enumeration.  The independent ground truth for cross_lex.
bool oracle_cross(int n, const KSet& a, const KSet& b, std::uint64_t cap = 1000000);

// Exact maximum of sum |L(I_i, k_i)| over ID tuples passing the pairwise
// cross test.  Naive mode walks all tuples with per-pair pruning; smart mode
// (mixed regime) walks (I1, I2) pairs from the star IDs up and derives each
// I_i, i >= 3, as the k_i-partner of the lex-later of the two.
SearchResult brute_force_M(const Params& params, SearchMode mode, SearchBudget budget = {});

/// Table of (ID, value) over F_{2,3} (g, mixed) or R_1 (f, non-mixed or
/// general-s), in lex order, with the argmax set.
ScanResult scan(const Params& params, ScanTarget target);

// Maximum total size of the unassigned families over all completions of the
// fixed partial assignment (1-based family index -> ID); nullopt when the
// assignment admits no completion.
std::optional<Count> constrained_best(const Params& params, const std::map<int, KSet>& fixed,
                                      SearchBudget budget = {});

/// Compare an extremal tuple set against the two construction tuples.
ExtremalClass classify_extremal_set(const Params& params, const std::vector<SystemIds>& extremal);

/// Convenience: run the mixed-regime search and classify its extremal set.
ExtremalClass classify_extremal(const Params& params, SearchBudget budget = {});

}  // namespace crossfam
