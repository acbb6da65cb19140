#include "crossfam/partner.hpp"

#include <algorithm>

namespace crossfam {

KSet partner(int n, const KSet& f) {
    if (f.empty()) throw std::invalid_argument("partner: F must be nonempty");
    if (f.n != n) throw std::invalid_argument("partner: ground-set mismatch");
    int q = f.max();
    std::vector<int> h;
    for (int x = 1; x < q; ++x)
        if (!f.contains(x)) h.push_back(x);
    h.push_back(q);
    return KSet(n, std::move(h));
}

namespace detail {

std::optional<KSet> last_kset_le(int n, int k, const KSet& h) {
    int hs = h.size();
    if (k == hs) return h;
    if (k > hs) {
        // Sequence extensions of H are supersets, hence precede it; the lex
        // last takes the maximal tail.
        std::vector<int> v = h.elems;
        for (int x = n - k + hs + 1; x <= n; ++x) v.push_back(x);
        return KSet(n, std::move(v));
    }
    // k < |H|: keep the longest prefix admitting a drop, lower one element by
    // one, then the maximal tail.
    for (int j = k - 1; j >= 0; --j) {
        int below = (j == 0) ? 0 : h.elems[j - 1];
        if (h.elems[j] - 1 > below) {
            std::vector<int> v(h.elems.begin(), h.elems.begin() + j);
            v.push_back(h.elems[j] - 1);
            for (int x = n - k + j + 2; x <= n; ++x) v.push_back(x);
            return KSet(n, std::move(v));
        }
    }
    return std::nullopt;  // H starts with {1..k}
}

}  // namespace detail

std::optional<PartnerResult> kpartner(int n, const KSet& f, int k) {
    if (f.empty()) throw std::invalid_argument("kpartner: F must be nonempty");
    if (k < 1 || k > n - f.size()) throw std::invalid_argument("kpartner: need 1 <= k <= n - |F|");
    KSet h = partner(n, f);
    int hs = h.size();
    auto v = detail::last_kset_le(n, k, h);
    if (!v) return std::nullopt;
    PartnerResult res{*v, PartnerResult::Kind::Exact};
    if (k > hs)
        res.kind = PartnerResult::Kind::Padded;
    else if (k < hs)
        res.kind = PartnerResult::Kind::Predecessor;
    return res;
}

std::optional<KSet> parity_of(int n, const KSet& f, int h) {
    if (f.empty()) throw std::invalid_argument("parity_of: F must be nonempty");
    if (h < 1) throw std::invalid_argument("parity_of: h must be positive");
    Decomposition d = decompose(n, f);
    int fs = f.size();
    int ell_h = d.ell + h - fs;
    if (ell_h < 0) return std::nullopt;  // too little tail to shrink
    if (d.core.size() + ell_h != h) return std::nullopt;
    // The new tail must keep a gap above the core; max of an empty core
    // counts as 0.
    int core_max = d.core.empty() ? 0 : d.core.max();
    if (ell_h > 0 && core_max > n - ell_h - 1) return std::nullopt;
    std::vector<int> v = d.core.elems;
    for (int x = n - ell_h + 1; x <= n; ++x) v.push_back(x);
    return KSet(n, std::move(v));
}

KSet corresponding_set(int n, const KSet& r1, int ki) {
    if (ki < 1 || ki > r1.size())
        throw std::invalid_argument("corresponding_set: need 1 <= ki <= |R1|");
    if (auto p = parity_of(n, r1, ki)) return *p;
    auto pred = detail::last_kset_le(n, ki, r1);
    if (!pred) throw std::invalid_argument("corresponding_set: no ki-set precedes R1");
    return *pred;
}

bool is_maximal_pair(int n, const KSet& a, const KSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("is_maximal_pair: empty set");
    if (a.size() + b.size() > n) throw std::invalid_argument("is_maximal_pair: |A|+|B| > n");
    KSet ca = decompose(n, a).core;
    KSet cb = decompose(n, b).core;
    if (ca.empty() || cb.empty()) return false;  // cores of partners are nonempty
    return partner(n, cb) == ca;
}

std::optional<KSet> max_cross_id(int n, const KSet& a, int b) {
    if (a.empty()) throw std::invalid_argument("max_cross_id: A must be nonempty");
    if (b < 1 || b > n) throw std::invalid_argument("max_cross_id: b out of range");
    if (n < a.size() + b) return kset_interval(n, n - b + 1, n);  // cross intersecting freely
    KSet core = decompose(n, a).core;
    // Empty core means A is the last |A|-set, so L(A,|A|) is everything and
    // no nonempty b-family can cross it.
    if (core.empty()) return std::nullopt;
    auto kp = kpartner(n, core, b);
    if (!kp) return std::nullopt;
    return kp->value;
}

bool cross_lex(int n, const KSet& a, const KSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("cross_lex: empty set");
    if (n < a.size() + b.size()) return true;
    auto cap = max_cross_id(n, a, b.size());
    if (!cap) return false;
    return lex_le(b, *cap);
}

}  // namespace crossfam
