#include "crossfam/objective.hpp"

namespace crossfam {

std::pair<Count, Count> lambdas(const Params& params) {
    if (!classify(params).is(Regime::Kind::Mixed))
        throw std::invalid_argument("lambdas: mixed regime required");
    return {construction1(params).second, construction2(params).second};
}

Objectives m_formula(const Params& params) {
    Regime regime = classify(params);
    Objectives obj;
    if (regime.is(Regime::Kind::Mixed)) {
        auto [l1, l2] = lambdas(params);
        obj.lambda1 = l1;
        obj.lambda2 = l2;
    } else if (regime.is(Regime::Kind::NonMixed)) {
        int n = params.n;
        int kt = params.kt();
        Count star = 0;
        for (int i = 1; i <= params.t(); ++i) star += binom(n - 1, params.k(i) - 1);
        Count cover = binom(n, params.k(1)) - binom(n - kt, params.k(1));
        for (int i = 2; i <= params.t(); ++i) cover += binom(n - kt, params.k(i) - kt);
        obj.lambda1 = star;
        obj.lambda2 = cover;
    } else {
        throw std::invalid_argument("m_formula: no closed form in regime " + regime.str() +
                                    "; use search");
    }
    obj.m = std::max(obj.lambda1, obj.lambda2);
    obj.c1_attains = obj.lambda1 >= obj.lambda2;
    obj.c2_attains = obj.lambda2 >= obj.lambda1;
    return obj;
}

namespace detail {

Count f_nonmixed_raw(const Params& params, const KSet& r) {
    Count total = rank(params.n, params.k(1), r);
    KSet t = partner(params.n, r);
    for (int j = 2; j <= params.t(); ++j) total += rank_general(params.n, params.k(j), t);
    return total;
}

void require_general_window(const Params& params, int s) {
    if (s < 2 || s > params.t() - 1)
        throw std::invalid_argument("general-s: need s in [2, t-1]");
    if (!(params.k(1) + params.k(s + 1) <= params.n && params.n < params.k(s - 1) + params.k(s)))
        throw std::invalid_argument("general-s: n outside the window for s=" + std::to_string(s));
}

Count f_general_raw(const Params& params, int s, const KSet& r1) {
    int n = params.n;
    Count total = 0;
    for (int i = 1; i <= s; ++i) {
        KSet ri = corresponding_set(n, r1, params.k(i));
        total += rank(n, params.k(i), ri);
    }
    for (int i = s + 1; i <= params.t(); ++i) {
        auto kp = kpartner(n, r1, params.k(i));
        if (!kp) throw std::logic_error("f_general: k_i-partner missing for in-range ID");
        total += rank(n, params.k(i), kp->value);
    }
    return total;
}

}  // namespace detail

Count f_nonmixed(const Params& params, const KSet& r) {
    if (!classify(params).is(Regime::Kind::NonMixed))
        throw std::invalid_argument("f_nonmixed: non-mixed regime required");
    if (r.size() != params.k(1)) throw std::invalid_argument("f_nonmixed: |R| != k_1");
    KSet star = min_anchored_id(params.n, params.k(1), 1);
    if (lex_lt(r, star)) throw std::invalid_argument("f_nonmixed: R precedes the star ID");
    return detail::f_nonmixed_raw(params, r);
}

Count g_mixed(const Params& params, const KSet& g2) {
    if (!classify(params).is(Regime::Kind::Mixed))
        throw std::invalid_argument("g_mixed: mixed regime required");
    int n = params.n;
    int k2 = params.k(2);
    KSet full = g2;
    if (g2.size() < k2) {
        // level-j input: g identifies R \ [n-j+1, n] with R
        int j = k2 - g2.size();
        if (g2.n != n - j) throw std::invalid_argument("g_mixed: truncated input on wrong ground set");
        std::vector<int> v = g2.elems;
        for (int x = n - j + 1; x <= n; ++x) v.push_back(x);
        full = KSet(n, std::move(v));
    } else if (g2.size() != k2 || g2.n != n) {
        throw std::invalid_argument("g_mixed: |G2| != k_2");
    }
    if (!f23_contains(params, full)) throw std::invalid_argument("g_mixed: G2 not in F_{2,3}");
    auto g1 = parity_of(n, full, params.k(1));
    if (!g1) throw std::logic_error("g_mixed: k_1-parity missing for an F_{2,3} member");
    Count total = rank(n, params.k(1), *g1) + rank(n, k2, full);
    for (int i = 3; i <= params.t(); ++i) {
        auto ti = kpartner(n, full, params.k(i));
        if (!ti) throw std::logic_error("g_mixed: k_i-partner missing for an F_{2,3} member");
        total += rank(n, params.k(i), ti->value);
    }
    return total;
}

DiffPair alpha_beta(const Params& params, const KSet& r, const KSet& r2) {
    if (!classify(params).is(Regime::Kind::NonMixed))
        throw std::invalid_argument("alpha_beta: non-mixed regime required");
    if (r.size() != params.k(1) || r2.size() != params.k(1))
        throw std::invalid_argument("alpha_beta: both sets must be k_1-sets");
    if (!lex_le(r, r2)) throw std::invalid_argument("alpha_beta: need R preceding R2");
    int n = params.n;
    DiffPair d;
    d.gain = rank(n, params.k(1), r2) - rank(n, params.k(1), r);
    d.loss = 0;
    KSet t = partner(n, r);
    KSet t2 = partner(n, r2);
    for (int j = 2; j <= params.t(); ++j)
        d.loss += rank_general(n, params.k(j), t) - rank_general(n, params.k(j), t2);
    return d;
}

int s_prime(const Params& params, int s) {
    if (s < 1 || s > params.t()) throw std::invalid_argument("s_prime: s out of [1,t]");
    int count = 0;
    for (int i = 1; i <= s; ++i)
        if (params.k(i) == params.k(1)) ++count;
    return count;
}

GammaDelta gamma_delta(const Params& params, int s, const KSet& r1, const KSet& r1b) {
    detail::require_general_window(params, s);
    if (r1.size() != params.k(1) || r1b.size() != params.k(1))
        throw std::invalid_argument("gamma_delta: both sets must be k_1-sets");
    if (!lex_le(r1, r1b)) throw std::invalid_argument("gamma_delta: need R1 preceding R1b");
    int n = params.n;
    GammaDelta gd;
    gd.gamma = 0;
    gd.delta = 0;
    for (int i = 1; i <= s; ++i) {
        KSet a = corresponding_set(n, r1, params.k(i));
        KSet b = corresponding_set(n, r1b, params.k(i));
        Count ai = rank(n, params.k(i), b) - rank(n, params.k(i), a);
        gd.gamma += ai;
        gd.alpha.push_back(std::move(ai));
    }
    for (int i = s + 1; i <= params.t(); ++i) {
        auto ka = kpartner(n, r1, params.k(i));
        auto kb = kpartner(n, r1b, params.k(i));
        if (!ka || !kb) throw std::logic_error("gamma_delta: k_i-partner missing");
        gd.delta += rank(n, params.k(i), ka->value) - rank(n, params.k(i), kb->value);
    }
    return gd;
}

Count f_general(const Params& params, int s, const KSet& r1) {
    detail::require_general_window(params, s);
    if (r1.size() != params.k(1)) throw std::invalid_argument("f_general: |R1| != k_1");
    auto [lo, hi] = ri_bounds(params, 1);
    if (!lex_le(lo, r1) || !lex_le(r1, hi))
        throw std::invalid_argument("f_general: R1 outside the R_1 range");
    return detail::f_general_raw(params, s, r1);
}

}  // namespace crossfam
