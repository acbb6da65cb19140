#pragma once

// Objective functions and their difference functionals: lambda_1/lambda_2,
// the closed-form maximum M, f over k_1-IDs (non-mixed), g over F_{2,3}
// (mixed), alpha/beta, and the general-s quantities s', alpha_i, gamma,
// delta and f_general.

#include "crossfam/families.hpp"

namespace crossfam {

struct Objectives {
    Count lambda1;  // star-system total
    Count lambda2;  // covering-system total
    Count m;        // max of the two
    bool c1_attains = false;
    bool c2_attains = false;
};

// gain - loss is the objective difference across an ID move (alpha - beta in
// the non-mixed setting, gamma - delta in the general one).
struct DiffPair {
    Count gain;
    Count loss;
};

struct GammaDelta {
    std::vector<Count> alpha;  // per-i gains, i in [s]
    Count gamma;
    Count delta;
};

/// (lambda_1, lambda_2) by binomial formula; mixed regime only.
std::pair<Count, Count> lambdas(const Params& params);

/// Closed-form maximum total size, for the mixed and non-mixed regimes.
Objectives m_formula(const Params& params);

// f(R) = |L(R,k1)| + sum_{j>=2} |L(T,k_j)| with T the partner of R.
// Non-mixed regime; R must be at or after the star ID.
Count f_nonmixed(const Params& params, const KSet& r);

// g(G2) for G2 in F_{2,3}: |L(G1,k1)| + |L(G2,k2)| + sum_{i>=3} |L(T_i,k_i)|
// where G1 is the k1-parity of G2 and T_i its k_i-partner.  A truncated
// level-j input (ground [n-j]) is accepted and re-completed by [n-j+1, n].
Count g_mixed(const Params& params, const KSet& g2);

/// alpha(R,R2) and beta(R,R2) for k_1-sets R preceding R2 (non-mixed).
DiffPair alpha_beta(const Params& params, const KSet& r, const KSet& r2);

/// Number of indices i in [s] with k_i = k_1.
int s_prime(const Params& params, int s);

/// Per-i gains alpha_i over corresponding k_i-sets (i <= s), gamma their
/// sum, and delta the k_i-partner loss (i > s), for R1 preceding R1b in R_1.
GammaDelta gamma_delta(const Params& params, int s, const KSet& r1, const KSet& r1b);

// f(R1) = sum_{i<=s} |L(R_i,k_i)| + sum_{i>s} |L(K_i,k_i)| over the
// corresponding sets and k_i-partners of R1; R1 must lie in the R_1 range.
Count f_general(const Params& params, int s, const KSet& r1);

namespace detail {

/// f(R) with no range validation; used by property scans on boundary chains.
Count f_nonmixed_raw(const Params& params, const KSet& r);

/// f_general with no range validation.
Count f_general_raw(const Params& params, int s, const KSet& r1);

/// Check the general-s window k1+k_{s+1} <= n < k_{s-1}+k_s.
void require_general_window(const Params& params, int s);

}  // namespace detail

}  // namespace crossfam
