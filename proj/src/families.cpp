#include "crossfam/families.hpp"

#include <algorithm>

namespace crossfam {

Params::Params(int n_, std::vector<int> ks_) : n(n_), ks(std::move(ks_)) {
    if (ks.size() < 2) throw std::invalid_argument("Params: need t >= 2 families");
    for (size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 1) throw std::invalid_argument("Params: family sizes must be positive");
        if (i && ks[i] > ks[i - 1])
            throw std::invalid_argument("Params: k-vector must be nonincreasing");
    }
    if (n < ks[0]) throw std::invalid_argument("Params: need n >= k_1");
}

std::string Params::str() const {
    std::string out = "n=" + std::to_string(n) + " k=";
    for (size_t i = 0; i < ks.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ks[i]);
    }
    return out;
}

std::string Regime::str() const {
    switch (kind) {
        case Kind::Free: return "free";
        case Kind::Mixed: return "mixed";
        case Kind::NonMixed: return "nonmixed";
        case Kind::GeneralS: return "general_s(" + std::to_string(s) + ")";
        case Kind::Unsupported: return "unsupported";
    }
    return "?";
}

Regime classify(const Params& params) {
    int n = params.n;
    int t = params.t();
    if (n < params.k(1) + params.kt()) return {Regime::Kind::Free, 0};
    if (n >= params.k(1) + params.k(2)) return {Regime::Kind::NonMixed, 0};
    for (int s = 2; s <= t - 1; ++s) {
        if (params.k(1) + params.k(s + 1) <= n && n < params.k(s - 1) + params.k(s))
            return {s == 2 ? Regime::Kind::Mixed : Regime::Kind::GeneralS, s};
    }
    return {Regime::Kind::Unsupported, 0};
}

KSet min_anchored_id(int n, int k, int first) {
    std::vector<int> v{first};
    for (int x = n - k + 2; x <= n; ++x) v.push_back(x);
    return KSet(n, std::move(v));
}

KSet prefix_cover_id(int n, int k, int kt) {
    std::vector<int> v;
    for (int x = 1; x <= kt; ++x) v.push_back(x);
    for (int x = n - k + kt + 1; x <= n; ++x) v.push_back(x);
    return KSet(n, std::move(v));
}

std::pair<SystemIds, Count> construction1(const Params& params) {
    SystemIds sys{params, {}};
    Count total = 0;
    for (int i = 1; i <= params.t(); ++i) {
        sys.ids.push_back(min_anchored_id(params.n, params.k(i), 1));
        total += binom(params.n - 1, params.k(i) - 1);
    }
    return {sys, total};
}

std::pair<SystemIds, Count> construction2(const Params& params) {
    if (!classify(params).is(Regime::Kind::Mixed))
        throw std::invalid_argument("construction2: mixed regime required");
    int n = params.n;
    int kt = params.kt();
    SystemIds sys{params, {}};
    Count total = 0;
    for (int i = 1; i <= params.t(); ++i) {
        int ki = params.k(i);
        if (i <= 2) {
            sys.ids.push_back(min_anchored_id(n, ki, kt));
            total += binom(n, ki) - binom(n - kt, ki);
        } else {
            sys.ids.push_back(prefix_cover_id(n, ki, kt));
            total += binom(n - kt, ki - kt);
        }
    }
    return {sys, total};
}

std::pair<KSet, KSet> ri_bounds(const Params& params, int i) {
    Regime regime = classify(params);
    int n = params.n;
    int kt = params.kt();
    if (i < 1 || i > params.t()) throw std::invalid_argument("ri_bounds: index out of [1,t]");
    if (regime.is(Regime::Kind::Mixed)) {
        int ki = params.k(i);
        if (i <= 2) return {min_anchored_id(n, ki, 1), min_anchored_id(n, ki, kt)};
        if (i < params.t())
            return {prefix_cover_id(n, ki, kt), min_anchored_id(n, ki, 1)};
        return {kset_interval(n, 1, kt), min_anchored_id(n, kt, 1)};
    }
    if (regime.is(Regime::Kind::GeneralS) && i <= regime.s) {
        int ki = params.k(i);
        return {min_anchored_id(n, ki, 1), min_anchored_id(n, ki, kt)};
    }
    throw std::invalid_argument("ri_bounds: regime " + regime.str() +
                                " has no bounds for i=" + std::to_string(i));
}

std::optional<KSet> f23_contains(const Params& params, const KSet& r) {
    if (!classify(params).is(Regime::Kind::Mixed))
        throw std::invalid_argument("f23_contains: mixed regime required");
    if (r.size() != params.k(2)) throw std::invalid_argument("f23_contains: |R| != k_2");
    int n = params.n;
    int k3 = params.k(3);
    auto [lo2, hi2] = ri_bounds(params, 2);
    if (!lex_le(lo2, r) || !lex_le(r, hi2)) return std::nullopt;
    KSet core = decompose(n, r).core;
    if (core.empty()) return std::nullopt;
    KSet t = partner(n, core);
    if (t.size() > k3) return std::nullopt;
    std::vector<int> b = t.elems;
    for (int x = n - k3 + t.size() + 1; x <= n; ++x) b.push_back(x);
    KSet witness(n, std::move(b));
    if (decompose(n, witness).core != t) return std::nullopt;  // tail would swallow T
    auto [lo3, hi3] = ri_bounds(params, 3);
    if (!lex_le(lo3, witness) || !lex_le(witness, hi3)) return std::nullopt;
    return witness;
}

void for_each_in_range(int n, const KSet& lo, const KSet& hi,
                       const std::function<void(const KSet&)>& fn) {
    if (lex_lt(hi, lo)) return;
    KSet cur = lo;
    for (;;) {
        fn(cur);
        if (cur == hi) return;
        auto next = step(n, cur.size(), cur, StepDir::Succ);
        if (!next) return;
        cur = *next;
    }
}

std::vector<KSet> f23_iter(const Params& params) {
    auto [lo, hi] = ri_bounds(params, 2);
    std::vector<KSet> out;
    for_each_in_range(params.n, lo, hi, [&](const KSet& r) {
        if (f23_contains(params, r)) out.push_back(r);
    });
    return out;
}

std::vector<KSet> f23_level(const Params& params, int j) {
    if (j < 0 || j > params.k(2) - 1) throw std::invalid_argument("f23_level: j out of range");
    int n = params.n;
    std::vector<KSet> out;
    for (const KSet& r : f23_iter(params)) {
        if (decompose(n, r).ell < j) continue;
        std::vector<int> v(r.elems.begin(), r.elems.end() - j);
        out.emplace_back(n - j, std::move(v));
    }
    return out;
}

std::vector<std::pair<KSet, KSet>> maximal_pair_family(int n, int a, int b,
                                                       const std::pair<KSet, KSet>& bounds) {
    if (a + b > n) throw std::invalid_argument("maximal_pair_family: need a + b <= n");
    std::vector<std::pair<KSet, KSet>> out;
    for_each_in_range(n, bounds.first, bounds.second, [&](const KSet& aset) {
        KSet core = decompose(n, aset).core;
        if (core.empty()) return;
        KSet t = partner(n, core);
        if (t.size() > b) return;
        std::vector<int> v = t.elems;
        for (int x = n - b + t.size() + 1; x <= n; ++x) v.push_back(x);
        KSet witness(n, std::move(v));
        if (decompose(n, witness).core != t) return;
        out.emplace_back(aset, witness);
    });
    return out;
}

ConstructionMatch matches_construction(const SystemIds& system) {
    if (!classify(system.params).is(Regime::Kind::Mixed))
        throw std::invalid_argument("matches_construction: mixed regime required");
    bool c1 = system.ids == construction1(system.params).first.ids;
    bool c2 = system.ids == construction2(system.params).first.ids;
    if (c1 && c2) return ConstructionMatch::Both;
    if (c1) return ConstructionMatch::C1;
    if (c2) return ConstructionMatch::C2;
    return ConstructionMatch::Neither;
}

}  // namespace crossfam
