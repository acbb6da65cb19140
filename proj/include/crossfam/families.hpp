#pragma once

// Problem instances, regime classification, the two candidate-extremal
// constructions, the ID search ranges R_i, and the maximal-pair family
// F_{2,3} with its truncation levels.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "crossfam/partner.hpp"

namespace crossfam {

// Instance (n, k_1 >= k_2 >= ... >= k_t), t >= 2.
struct Params {
    int n = 0;
    std::vector<int> ks;

    Params() = default;
    Params(int n_, std::vector<int> ks_);

    int t() const { return static_cast<int>(ks.size()); }
    int k(int i) const { return ks.at(i - 1); }  // 1-based
    int kt() const { return ks.back(); }
    std::string str() const;
};

struct Regime {
    enum class Kind { Free, Mixed, NonMixed, GeneralS, Unsupported } kind;
    int s = 0;  // set for Mixed (s = 2) and GeneralS

    bool is(Kind k) const { return kind == k; }
    std::string str() const;
};

// One candidate system in L-initial form: the ID of each family.
struct SystemIds {
    Params params;
    std::vector<KSet> ids;

    bool operator==(const SystemIds& other) const { return ids == other.ids; }
};

enum class ConstructionMatch { C1, C2, Both, Neither };

// Free when n < k1+kt; non-mixed when n >= k1+k2; otherwise the window
// k1+k_{s+1} <= n < k_{s-1}+k_s for s in [2, t-1] (s = 2 is the mixed type);
// unsupported when no window applies.
Regime classify(const Params& params);

/// {first} + [n-k+2, n]: the last k-set whose minimum is `first` (the star
/// ID for first = 1).
KSet min_anchored_id(int n, int k, int first);

/// [kt] + [n-k+kt+1, n]: the last k-set containing [kt].
KSet prefix_cover_id(int n, int k, int kt);

/// Star system: every family consists of the sets containing 1. Returns the
/// ID tuple and the total size lambda_1.
std::pair<SystemIds, Count> construction1(const Params& params);

/// Covering system for the mixed regime: families 1 and 2 take the sets
/// meeting [kt], the rest take the sets containing [kt]; total lambda_2.
std::pair<SystemIds, Count> construction2(const Params& params);

// Inclusive ID bounds of R_i.  Mixed regime: the ranges where extremal IDs
// live.  For GeneralS the i <= s ranges use the same star-to-{kt,...} form.
std::pair<KSet, KSet> ri_bounds(const Params& params, int i);

// Membership of R in F_{2,3}: R is inside the R_2 bounds and the partner T
// of its core has |T| <= k3 with the tail-padded witness inside the R_3
// bounds.  Returns the witness on success.
std::optional<KSet> f23_contains(const Params& params, const KSet& r);

/// F_{2,3} in lex order.
std::vector<KSet> f23_iter(const Params& params);

/// Level j of F_{2,3}: members containing [n-j+1, n], truncated by that run;
/// results live on the ground set [n-j].
std::vector<KSet> f23_level(const Params& params, int j);

// All (A, B) with A inside the given bounds, |B| = b and (A, B) maximal;
// at most one B exists per A.
std::vector<std::pair<KSet, KSet>> maximal_pair_family(int n, int a, int b,
                                                       const std::pair<KSet, KSet>& bounds);

/// Compare an ID tuple against the two construction tuples.
ConstructionMatch matches_construction(const SystemIds& system);

/// Apply fn to every k-set from lo to hi inclusive, in lex order.
void for_each_in_range(int n, const KSet& lo, const KSet& hi,
                       const std::function<void(const KSet&)>& fn);

}  // namespace crossfam
