#pragma once

// Machine verification of the structural lemmas as falsifiable properties:
// parity of extremal IDs, local unimodality of the objective functions,
// the boundary inequalities, and the partner/parity fact suite.  Every check
// quantifies over an explicitly enumerated finite domain; a fail verdict
// carries a witness that re-fails in isolation.

#include <cstdint>

#include "crossfam/search.hpp"

namespace crossfam {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckVerdict {
    std::string name;
    std::string params;
    CheckStatus status = CheckStatus::Skipped;
    std::uint64_t checked = 0;  // property instances tested
    std::uint64_t skipped = 0;  // instances filtered out by side conditions
    std::string counterexample;

    bool failed() const { return status == CheckStatus::Fail; }
    std::string str() const;
};

// Suite selection bitmask.
enum Suite : unsigned {
    SuiteParity = 1u,
    SuiteUnimodality = 2u,
    SuiteFacts = 4u,
    SuiteTheorem = 8u,
    SuiteAll = 15u,
};

/// Extremal systems have I2 in F_{2,3} with I1 its k1-parity; boundary
/// extremal IDs are exempt.
CheckVerdict check_parity_lemma(const Params& params, SearchBudget budget = {});

/// Local unimodality of g over the F_{2,3} truncation levels, plus the two
/// boundary-chain implications.
CheckVerdict check_unimodality_g(const Params& params);

/// The two boundary inequalities comparing g at the interval cores.
CheckVerdict check_prop_3_20(const Params& params);

/// Local unimodality of f: c-sequential triples over the R_1 levels and the
/// tail-transfer chains, in the non-mixed and general-s regimes.
CheckVerdict check_unimodality_f(const Params& params);

/// Partner/parity fact suite: exhaustive over small ground sets plus
/// randomized spot checks.
CheckVerdict check_fact_suite(int nmax = 8, std::uint64_t seed = 1);

/// Closed formula versus exhaustive search, extremal classification, and the
/// boundary/interior value checks.
CheckVerdict check_theorem(const Params& params, SearchBudget budget = {});

struct SweepGrid {
    std::vector<int> ts{3, 4};
    int kmax = 5;
    int nmax = 12;
    int ktmin = 2;
};

struct SweepReport {
    std::vector<CheckVerdict> verdicts;
    std::uint64_t passes = 0, failures = 0, skips = 0;
};

/// Run the selected suites over every instance in the grid; deterministic
/// ordering independent of thread count.
SweepReport run_sweep(const SweepGrid& grid, unsigned suites, SearchBudget budget = {});

/// All (t, k-vector, n) instances of the grid, in lexicographic order.
std::vector<Params> grid_instances(const SweepGrid& grid);

namespace detail {

/// Violation message if the tuple breaks the parity property (empty domain
/// of the exemption: boundary IDs return nullopt as well).
std::optional<std::string> parity_violation(const Params& params, const SystemIds& system);

/// Core + maximal tail completion to a k-set; nullopt when the tail would
/// swallow the core.
std::optional<KSet> complete_core(int n, int k, const std::vector<int>& core);

}  // namespace detail

}  // namespace crossfam
