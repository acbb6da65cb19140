#pragma once

// Partner, k-partner, parity, corresponding set, maximal-pair test, and the
// maximum cross-intersecting ID.  Two sets strongly intersect at their last
// element when F . H = {q} and F + H = [q] for q = max F; each is then the
// partner of the other, and the map is an involution.

#include <optional>

#include "crossfam/lexset.hpp"

namespace crossfam {

struct PartnerResult {
    KSet value;
    // Which size adjustment produced the k-partner: the partner itself
    // (k = h), a padded tail (k > h), or the last k-set preceding it (k < h).
    enum class Kind { Exact, Padded, Predecessor } kind = Kind::Exact;
};

/// Partner of a nonempty F: ([q-1] \ F) + {q} with q = max F.
KSet partner(int n, const KSet& f);

// Size-k adjustment of the partner.  Requires k <= n - |F|.  nullopt when
// k < |partner| and no k-set precedes it (the partner starts with an
// initial segment).
std::optional<PartnerResult> kpartner(int n, const KSet& f, int k);

// The unique h-set with the same core as F whose tail length differs by
// exactly h - |F|; nullopt when no such set exists (a legitimate outcome,
// not an error).
std::optional<KSet> parity_of(int n, const KSet& f, int h);

// The ki-parity of R1 when it exists, otherwise the last ki-set strictly
// preceding R1.  Requires ki <= |R1|; throws when neither exists (cannot
// happen for R1 inside its search range).
KSet corresponding_set(int n, const KSet& r1, int ki);

/// Whether the L-initial families with IDs A and B are maximal cross
/// intersecting: core(A) is the partner of core(B). Requires |A|+|B| <= n.
bool is_maximal_pair(int n, const KSet& a, const KSet& b);

// ID of the largest L-initial b-uniform family cross-intersecting with
// L(A,|A|).  Full family {n-b+1..n} when n < |A|+b (free regime); otherwise
// the b-partner of core(A).  nullopt when no nonempty b-family works.
std::optional<KSet> max_cross_id(int n, const KSet& a, int b);

/// Whether L(A,|A|) and L(B,|B|) are cross-intersecting, decided by the
/// partner calculus (never by enumeration).
bool cross_lex(int n, const KSet& a, const KSet& b);

namespace detail {

/// The lex-last k-set preceding-or-equal H (reflexive for k = |H|).
std::optional<KSet> last_kset_le(int n, int k, const KSet& h);

}  // namespace detail

}  // namespace crossfam
