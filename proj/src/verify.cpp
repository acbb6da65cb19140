#include "crossfam/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "crossfam/threads.hpp"

namespace crossfam {

std::string CheckVerdict::str() const {
    std::string s = name;
    if (!params.empty()) s += " [" + params + "]";
    switch (status) {
        case CheckStatus::Pass: s += ": pass"; break;
        case CheckStatus::Fail: s += ": FAIL"; break;
        case CheckStatus::Skipped: s += ": skipped"; break;
    }
    s += " (checked=" + std::to_string(checked) + ", skipped=" + std::to_string(skipped) + ")";
    if (!counterexample.empty()) s += " -- " + counterexample;
    return s;
}

namespace detail {

std::optional<KSet> complete_core(int n, int k, const std::vector<int>& core) {
    if (static_cast<int>(core.size()) > k) return std::nullopt;
    std::vector<int> v = core;
    for (int x = n - (k - static_cast<int>(core.size())) + 1; x <= n; ++x) v.push_back(x);
    if (v.size() != static_cast<size_t>(k)) return std::nullopt;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) return std::nullopt;
    KSet out(n, std::move(v));
    if (decompose(n, out).core.elems != core) return std::nullopt;  // tail swallowed the core
    return out;
}

std::optional<std::string> parity_violation(const Params& params, const SystemIds& system) {
    const KSet& i1 = system.ids[0];
    const KSet& i2 = system.ids[1];
    if (!f23_contains(params, i2))
        return "I2=" + to_string(i2) + " not in F_{2,3}";
    auto p = parity_of(params.n, i2, params.k(1));
    if (!p || *p != i1)
        return "I1=" + to_string(i1) + " is not the k1-parity of I2=" + to_string(i2);
    return std::nullopt;
}

}  // namespace detail

namespace {

bool in_bounds(const KSet& x, const std::pair<KSet, KSet>& b) {
    return lex_le(b.first, x) && lex_le(x, b.second);
}

bool strictly_interior(const KSet& x, const std::pair<KSet, KSet>& b) {
    return lex_lt(b.first, x) && lex_lt(x, b.second);
}

bool is_c_block(const KSet& f, int c) {
    int k = f.size();
    for (int i = k - c; i + 1 < k; ++i)
        if (f.elems[i + 1] != f.elems[i] + 1) return false;
    return true;
}

std::vector<int> interval_core(int lo, int hi) {
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

struct ScanStats {
    std::uint64_t checked = 0, skipped = 0;
    bool failed = false;
    std::string violation;
};

// Local unimodality over truncation levels: for every level j, every
// c-sequential consecutive triple F,G,H inside the level, value(G) >=
// value(F) must force value(H) > value(G).
template <typename ValueFn>
ScanStats scan_c_sequential_levels(int n, int ksize, const std::vector<KSet>& domain,
                                   ValueFn value) {
    ScanStats st;
    std::map<std::vector<int>, Count> val;
    for (const KSet& f : domain) val.emplace(f.elems, value(f));
    for (int j = 0; j <= ksize - 1 && !st.failed; ++j) {
        std::map<std::vector<int>, std::vector<int>> level;  // truncated -> full
        for (const KSet& f : domain) {
            if (decompose(n, f).ell < j) continue;
            std::vector<int> tr(f.elems.begin(), f.elems.end() - j);
            level.emplace(std::move(tr), f.elems);
        }
        int m = n - j;
        for (const auto& [tr, full] : level) {
            if (st.failed) break;
            KSet ftr(m, tr);
            for (int c = 1; c <= ksize - j; ++c) {
                if (!is_c_block(ftr, c)) continue;
                auto g = seq_step(m, ftr, c);
                if (!g || !level.count(g->elems)) {
                    ++st.skipped;
                    continue;
                }
                auto h = seq_step(m, *g, c);
                if (!h || !level.count(h->elems)) {
                    ++st.skipped;
                    continue;
                }
                const Count& vf = val.at(full);
                const Count& vg = val.at(level.at(g->elems));
                const Count& vh = val.at(level.at(h->elems));
                ++st.checked;
                if (vg >= vf && !(vh > vg)) {
                    st.failed = true;
                    std::ostringstream os;
                    os << "level j=" << j << " c=" << c << ": F=" << to_string(ftr)
                       << " G=" << to_string(*g) << " H=" << to_string(*h) << " values " << vf
                       << "," << vg << "," << vh;
                    st.violation = os.str();
                    break;
                }
            }
        }
    }
    return st;
}

// Boundary chain step: value([lo,j]) <= value([lo,j-1]) must force
// value([lo,j-1]) < value([lo,j-2]), all three completed to k-sets and
// filtered by `admit`.
template <typename ValueFn, typename AdmitFn>
void boundary_chain(int n, int k, int lo, int jfrom, int jto, ValueFn value, AdmitFn admit,
                    ScanStats& st) {
    for (int j = jfrom; j <= jto && !st.failed; ++j) {
        auto f = detail::complete_core(n, k, interval_core(lo, j));
        auto g = detail::complete_core(n, k, interval_core(lo, j - 1));
        auto h = detail::complete_core(n, k, interval_core(lo, j - 2));
        if (!f || !g || !h || !admit(*f) || !admit(*g) || !admit(*h)) {
            ++st.skipped;
            continue;
        }
        Count vf = value(*f), vg = value(*g), vh = value(*h);
        ++st.checked;
        if (vf <= vg && !(vg < vh)) {
            st.failed = true;
            std::ostringstream os;
            os << "chain [" << lo << "," << j << "]: values " << vf << "," << vg << "," << vh;
            st.violation = os.str();
        }
    }
}

CheckVerdict make_verdict(std::string name, const Params& params, const ScanStats& st) {
    CheckVerdict v;
    v.name = std::move(name);
    v.params = params.str();
    v.checked = st.checked;
    v.skipped = st.skipped;
    if (st.failed) {
        v.status = CheckStatus::Fail;
        v.counterexample = st.violation;
    } else {
        v.status = CheckStatus::Pass;
    }
    return v;
}

CheckVerdict regime_skip(std::string name, const Params& params, const std::string& why) {
    CheckVerdict v;
    v.name = std::move(name);
    v.params = params.str();
    v.status = CheckStatus::Skipped;
    v.counterexample = why;
    return v;
}

// The R_1 bounds share one form across the non-mixed, mixed and general-s
// regimes: from the star ID to the last ID meeting [kt].
std::pair<KSet, KSet> r1_bounds(const Params& params) {
    return {min_anchored_id(params.n, params.k(1), 1),
            min_anchored_id(params.n, params.k(1), params.kt())};
}

std::vector<KSet> r1_domain(const Params& params) {
    auto [lo, hi] = r1_bounds(params);
    std::vector<KSet> out;
    for_each_in_range(params.n, lo, hi, [&](const KSet& r) { out.push_back(r); });
    return out;
}

}  // namespace

CheckVerdict check_parity_lemma(const Params& params, SearchBudget budget) {
    if (!classify(params).is(Regime::Kind::Mixed))
        return regime_skip("parity-lemma", params, "mixed regime required");
    SearchResult res;
    try {
        res = brute_force_M(params, SearchMode::Smart, budget);
    } catch (const size_guard_error& e) {
        return regime_skip("parity-lemma", params, e.what());
    }
    auto b1 = ri_bounds(params, 1);
    auto b2 = ri_bounds(params, 2);
    ScanStats st;
    for (const SystemIds& sys : res.extremal) {
        auto violation = detail::parity_violation(params, sys);
        if (!violation) {
            ++st.checked;
            continue;
        }
        bool interior = strictly_interior(sys.ids[0], b1) && strictly_interior(sys.ids[1], b2);
        if (!interior) {
            ++st.skipped;  // boundary extremal systems are exempt
            continue;
        }
        st.failed = true;
        st.violation = *violation;
        break;
    }
    return make_verdict("parity-lemma", params, st);
}

CheckVerdict check_unimodality_g(const Params& params) {
    if (!classify(params).is(Regime::Kind::Mixed))
        return regime_skip("unimodality-g", params, "mixed regime required");
    // The g-unimodality statements carry the standing hypothesis k1 > k2;
    // at k1 = k2 the objective genuinely plateaus (lambda_1 = lambda_2 ties).
    if (params.k(1) == params.k(2))
        return regime_skip("unimodality-g", params, "hypothesis k1 > k2 not met");
    int n = params.n;
    int k2 = params.k(2);
    int kt = params.kt();
    std::vector<KSet> family = f23_iter(params);
    auto value = [&](const KSet& g2) { return g_mixed(params, g2); };
    ScanStats st = scan_c_sequential_levels(n, k2, family, value);
    auto admit = [&](const KSet& r) { return f23_contains(params, r).has_value(); };
    if (!st.failed) boundary_chain(n, k2, 2, 4, k2 + 1, value, admit, st);
    if (!st.failed) boundary_chain(n, k2, kt, kt + 2, kt + k2 - 1, value, admit, st);
    return make_verdict("unimodality-g", params, st);
}

CheckVerdict check_prop_3_20(const Params& params) {
    if (!classify(params).is(Regime::Kind::Mixed))
        return regime_skip("prop-3-20", params, "mixed regime required");
    if (params.k(1) == params.k(2))
        return regime_skip("prop-3-20", params, "hypothesis k1 > k2 not met");
    int n = params.n;
    int k2 = params.k(2);
    int kt = params.kt();
    ScanStats st;
    auto admit = [&](const std::optional<KSet>& r) {
        return r && f23_contains(params, *r).has_value();
    };
    auto run = [&](const std::vector<int>& left, const std::vector<int>& alt1,
                   const std::vector<int>& alt2, const char* tag) {
        if (st.failed) return;
        auto l = detail::complete_core(n, k2, left);
        auto a = detail::complete_core(n, k2, alt1);
        auto b = detail::complete_core(n, k2, alt2);
        if (!admit(l) || !admit(a) || !admit(b) || *l == *a || *l == *b) {
            ++st.skipped;
            return;
        }
        Count vl = g_mixed(params, *l);
        Count bound = std::max(g_mixed(params, *a), g_mixed(params, *b));
        ++st.checked;
        if (!(vl < bound)) {
            st.failed = true;
            std::ostringstream os;
            os << tag << ": g(" << to_string(*l) << ")=" << vl << " not below " << bound;
            st.violation = os.str();
        }
    };
    run(interval_core(2, k2 + 1), {1}, interval_core(2, k2), "ineq-13");
    run(interval_core(kt, kt + k2 - 1), {kt - 1}, interval_core(kt, kt + k2 - 2), "ineq-14");
    return make_verdict("prop-3-20", params, st);
}

CheckVerdict check_unimodality_f(const Params& params) {
    Regime regime = classify(params);
    int n = params.n;
    int k1 = params.k(1);
    int kt = params.kt();
    if (regime.is(Regime::Kind::NonMixed)) {
        if (params.t() == 2 && n == k1 + params.k(2))
            return regime_skip("unimodality-f", params, "t=2 requires n > k1+k2");
        std::vector<KSet> domain = r1_domain(params);
        auto value = [&](const KSet& r) { return f_nonmixed(params, r); };
        ScanStats st = scan_c_sequential_levels(n, k1, domain, value);
        auto raw = [&](const KSet& r) { return detail::f_nonmixed_raw(params, r); };
        auto admit = [](const KSet&) { return true; };
        for (int m = 1; m <= kt && !st.failed; ++m)
            boundary_chain(n, k1, m, m + 2, m + k1 - 1, raw, admit, st);
        return make_verdict("unimodality-f", params, st);
    }
    if (regime.is(Regime::Kind::Mixed) || regime.is(Regime::Kind::GeneralS)) {
        int s = regime.s;
        // The general unimodality statements assume s' < s (not all of
        // k_1..k_s equal); at s' = s the objective plateaus.
        if (s_prime(params, s) == s)
            return regime_skip("unimodality-f", params, "hypothesis s' < s not met");
        std::vector<KSet> domain = r1_domain(params);
        auto bounds = r1_bounds(params);
        auto value = [&](const KSet& r) { return f_general(params, s, r); };
        ScanStats st = scan_c_sequential_levels(n, k1, domain, value);
        // tail-transfer chains: move the top consecutive block onto the tail
        for (const KSet& b0 : domain) {
            if (st.failed) break;
            if (b0.max() == n) continue;
            int run_lo = b0.max();
            int idx = b0.size() - 1;
            while (idx > 0 && b0.elems[idx - 1] == b0.elems[idx] - 1) {
                run_lo = b0.elems[--idx];
            }
            int kk = b0.max() - run_lo;  // block [run_lo, run_lo+kk]
            if (kk < 2) continue;
            std::vector<KSet> chain;
            for (int i = 0; i <= kk; ++i) {
                std::vector<int> v(b0.elems.begin(), b0.elems.begin() + idx);
                for (int x = run_lo; x <= run_lo + kk - i; ++x) v.push_back(x);
                for (int x = n - i + 1; x <= n; ++x) v.push_back(x);
                chain.emplace_back(n, std::move(v));
            }
            for (int i = 0; i + 2 <= kk && !st.failed; ++i) {
                if (!in_bounds(chain[i], bounds) || !in_bounds(chain[i + 1], bounds) ||
                    !in_bounds(chain[i + 2], bounds)) {
                    ++st.skipped;
                    continue;
                }
                Count vf = value(chain[i]), vg = value(chain[i + 1]), vh = value(chain[i + 2]);
                ++st.checked;
                if (vf <= vg && !(vg < vh)) {
                    st.failed = true;
                    std::ostringstream os;
                    os << "tail-transfer from B0=" << to_string(chain[i]) << ": values " << vf
                       << "," << vg << "," << vh;
                    st.violation = os.str();
                }
            }
        }
        return make_verdict("unimodality-f", params, st);
    }
    return regime_skip("unimodality-f", params, "regime " + regime.str() + " out of scope");
}

namespace {

// Fact-suite helpers: exhaustive small-n sweeps over the partner calculus.

std::vector<KSet> all_ksets(int n, int k) {
    std::vector<KSet> out;
    if (k > n) return out;
    std::vector<int> comb;
    for (int i = 1; i <= k; ++i) comb.push_back(i);
    do {
        out.emplace_back(n, comb);
    } while (detail::next_combination(comb, n));
    return out;
}

std::vector<KSet> all_subsets(int n) {
    std::vector<KSet> out;
    for (unsigned m = 1; m < (1u << n); ++m) {
        std::vector<int> v;
        for (int x = 1; x <= n; ++x)
            if (m & (1u << (x - 1))) v.push_back(x);
        out.emplace_back(n, std::move(v));
    }
    return out;
}

bool oracle_maximal(int n, const KSet& a, const KSet& b) {
    if (!oracle_cross(n, a, b)) return false;
    auto sa = step(n, a.size(), a, StepDir::Succ);
    if (sa && oracle_cross(n, *sa, b)) return false;
    auto sb = step(n, b.size(), b, StepDir::Succ);
    if (sb && oracle_cross(n, a, *sb)) return false;
    return true;
}

}  // namespace

CheckVerdict check_fact_suite(int nmax, std::uint64_t seed) {
    ScanStats st;
    auto fail = [&](const std::string& msg) {
        st.failed = true;
        st.violation = msg;
    };

    // Involution, exhaustively small then randomized.
    for (int n = 1; n <= nmax && !st.failed; ++n) {
        for (const KSet& f : all_subsets(n)) {
            ++st.checked;
            if (partner(n, partner(n, f)) != f) {
                fail("involution breaks at n=" + std::to_string(n) + " F=" + to_string(f));
                break;
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 10000 && !st.failed; ++it) {
        int n = 2 + static_cast<int>(rng() % 29);
        std::vector<int> v;
        for (int x = 1; x <= n; ++x)
            if (rng() & 1) v.push_back(x);
        if (v.empty()) v.push_back(1 + static_cast<int>(rng() % n));
        KSet f(n, std::move(v));
        ++st.checked;
        if (partner(n, partner(n, f)) != f)
            fail("involution breaks at n=" + std::to_string(n) + " F=" + to_string(f));
    }

    // k-partner of F equals the k-partner of its core; the partner family
    // count matches the k-partner rank.
    for (int n = 2; n <= nmax && !st.failed; ++n) {
        for (const KSet& f : all_subsets(n)) {
            for (int k = 1; k <= n - f.size() && !st.failed; ++k) {
                KSet core = decompose(n, f).core;
                auto kf = kpartner(n, f, k);
                if (core.empty()) continue;
                auto kc = kpartner(n, core, k);
                ++st.checked;
                bool same = (kf.has_value() == kc.has_value()) &&
                            (!kf || kf->value == kc->value);
                if (!same) {
                    fail("core reduction breaks at n=" + std::to_string(n) + " F=" + to_string(f) +
                         " k=" + std::to_string(k));
                    break;
                }
                Count via_partner = rank_general(n, k, partner(n, f));
                Count via_kpartner = kf ? rank(n, k, kf->value) : Count(0);
                ++st.checked;
                if (via_partner != via_kpartner) {
                    fail("partner/k-partner rank mismatch at n=" + std::to_string(n) +
                         " F=" + to_string(f) + " k=" + std::to_string(k));
                    break;
                }
            }
            if (st.failed) break;
        }
    }

    // Maximality of max_cross_id and the maximal-pair characterization,
    // against the enumeration oracles.
    int small = std::min(nmax, 8);
    for (int n = 2; n <= small && !st.failed; ++n) {
        for (int a = 1; a <= std::min(4, n - 1) && !st.failed; ++a) {
            for (int b = 1; b <= std::min(4, n - a) && !st.failed; ++b) {
                for (const KSet& A : all_ksets(n, a)) {
                    auto mc = max_cross_id(n, A, b);
                    ++st.checked;
                    if (mc) {
                        if (!oracle_cross(n, A, *mc)) {
                            fail("max_cross_id not cross-intersecting: A=" + to_string(A));
                            break;
                        }
                        auto nxt = step(n, b, *mc, StepDir::Succ);
                        if (nxt && oracle_cross(n, A, *nxt)) {
                            fail("max_cross_id not maximal: A=" + to_string(A));
                            break;
                        }
                    } else if (oracle_cross(n, A, all_ksets(n, b).front())) {
                        fail("max_cross_id missing though a family works: A=" + to_string(A));
                        break;
                    }
                    // A' = the |A|-partner of the b-partner closes into a
                    // maximal pair that dominates A.
                    if (mc && n >= a + b) {
                        auto back = kpartner(n, *mc, a);
                        ++st.checked;
                        if (!back || !is_maximal_pair(n, back->value, *mc) ||
                            !lex_le(A, back->value)) {
                            fail("partner closure breaks at A=" + to_string(A) +
                                 " b=" + std::to_string(b));
                            break;
                        }
                    }
                }
            }
        }
    }
    for (int n = 2; n <= small && !st.failed; ++n) {
        for (int a = 1; a <= std::min(4, n - 1) && !st.failed; ++a) {
            for (int b = 1; b <= std::min(4, n - a) && !st.failed; ++b) {
                for (const KSet& A : all_ksets(n, a)) {
                    if (st.failed) break;
                    for (const KSet& B : all_ksets(n, b)) {
                        ++st.checked;
                        if (is_maximal_pair(n, A, B) != oracle_maximal(n, A, B)) {
                            fail("maximal-pair characterization breaks: A=" + to_string(A) +
                                 " B=" + to_string(B));
                            break;
                        }
                    }
                }
            }
        }
    }

    // Order reversal of k-partners; equality exactly across parities.
    for (int n = 2; n <= small && !st.failed; ++n) {
        std::vector<KSet> sets;
        for (int sz = 1; sz <= std::min(4, n); ++sz)
            for (const KSet& s : all_ksets(n, sz)) sets.push_back(s);
        for (const KSet& A : sets) {
            if (st.failed) break;
            for (const KSet& B : sets) {
                if (!lex_le(A, B)) continue;
                int kcap = std::min(n - A.size(), n - B.size());
                for (int k = 1; k <= kcap; ++k) {
                    auto ka = kpartner(n, A, k);
                    auto kb = kpartner(n, B, k);
                    ++st.checked;
                    if (kb && !ka) {
                        fail("order reversal breaks (missing partner) at A=" + to_string(A) +
                             " B=" + to_string(B));
                        break;
                    }
                    if (ka && kb && !lex_le(kb->value, ka->value)) {
                        fail("order reversal breaks at A=" + to_string(A) + " B=" + to_string(B) +
                             " k=" + std::to_string(k));
                        break;
                    }
                    std::optional<KSet> pb;
                    if (A.size() <= B.size()) pb = parity_of(n, B, A.size());
                    if (pb && *pb == A) {
                        ++st.checked;
                        bool equal = (ka.has_value() == kb.has_value()) &&
                                     (!ka || ka->value == kb->value);
                        if (!equal) {
                            fail("parity pair with distinct k-partners: A=" + to_string(A) +
                                 " B=" + to_string(B));
                            break;
                        }
                    }
                }
                if (st.failed) break;
            }
        }
    }

    // Two partners of a common set: the smaller precedes or is a parity.
    for (int n = 2; n <= small && !st.failed; ++n) {
        for (const KSet& C : all_subsets(n)) {
            if (st.failed) break;
            for (int a = 1; a <= n - C.size() && !st.failed; ++a) {
                for (int b = 1; b <= a; ++b) {
                    auto ka = kpartner(n, C, a);
                    auto kb = kpartner(n, C, b);
                    if (!ka || !kb) continue;
                    ++st.checked;
                    auto pa = parity_of(n, kb->value, a);
                    if (!lex_le(kb->value, ka->value) && !(pa && *pa == ka->value)) {
                        fail("common-base partners unordered at C=" + to_string(C));
                        break;
                    }
                }
            }
        }
    }

    // Parity transitivity, both directions.
    for (int n = 2; n <= small && !st.failed; ++n) {
        for (const KSet& f : all_subsets(n)) {
            int fs = f.size();
            for (int h2 = 1; h2 < fs && !st.failed; ++h2) {
                auto p2 = parity_of(n, f, h2);
                if (!p2) continue;
                for (int h1 = 1; h1 < h2; ++h1) {
                    auto p1 = parity_of(n, f, h1);
                    auto p21 = parity_of(n, *p2, h1);
                    ++st.checked;
                    bool same =
                        (p1.has_value() == p21.has_value()) && (!p1 || *p1 == *p21);
                    if (!same) {
                        fail("parity transitivity breaks at F=" + to_string(f));
                        break;
                    }
                }
            }
            for (int h2 = fs + 1; h2 <= n && !st.failed; ++h2) {
                auto p2 = parity_of(n, f, h2);
                if (!p2) continue;
                for (int h3 = h2 + 1; h3 <= n; ++h3) {
                    auto p3 = parity_of(n, f, h3);
                    auto p23 = parity_of(n, *p2, h3);
                    ++st.checked;
                    bool same =
                        (p3.has_value() == p23.has_value()) && (!p3 || *p3 == *p23);
                    if (!same) {
                        fail("parity transitivity breaks upward at F=" + to_string(f));
                        break;
                    }
                }
            }
        }
    }

    // Star systems: beyond the star ID every compatible family is inside its
    // star, so such families pairwise intersect through the element 1.
    for (int n = 2; n <= small && !st.failed; ++n) {
        for (int ai = 1; ai <= std::min(4, n - 1) && !st.failed; ++ai) {
            for (int aj = 1; aj <= std::min(4, n - ai) && !st.failed; ++aj) {
                KSet star_i = min_anchored_id(n, ai, 1);
                KSet star_j = min_anchored_id(n, aj, 1);
                for (const KSet& A : all_ksets(n, ai)) {
                    if (!lex_le(star_i, A)) continue;
                    for (const KSet& B : all_ksets(n, aj)) {
                        if (!cross_lex(n, A, B)) continue;
                        ++st.checked;
                        if (!lex_le(B, star_j)) {
                            fail("star containment breaks at A=" + to_string(A) +
                                 " B=" + to_string(B));
                            break;
                        }
                    }
                    if (st.failed) break;
                }
            }
        }
    }

    // kt = 1 reduction: the search maximum stays at or below the star total.
    if (!st.failed) {
        std::vector<Params> kt_one = {Params(4, {3, 2, 1}), Params(5, {4, 2, 1}),
                                      Params(5, {4, 3, 1}), Params(6, {4, 3, 1}),
                                      Params(3, {2, 2, 1})};
        for (const Params& p : kt_one) {
            SearchResult res = brute_force_M(p, SearchMode::Naive);
            Count star = construction1(p).second;
            ++st.checked;
            if (res.max_sum > star) {
                fail("kt=1 bound breaks at " + p.str());
                break;
            }
        }
    }

    // Family-level parity: each F_{2,3} member's k1-parity forms a maximal
    // pair with the same witness, inside the R_1 range.
    if (!st.failed) {
        std::vector<Params> mixed = {Params(6, {4, 3, 2}), Params(7, {5, 3, 2}),
                                     Params(7, {5, 4, 2})};
        for (const Params& p : mixed) {
            auto pairs13 = maximal_pair_family(p.n, p.k(1), p.k(3), ri_bounds(p, 1));
            std::map<std::vector<int>, std::vector<int>> by_a;
            for (auto& [a, b] : pairs13) by_a.emplace(a.elems, b.elems);
            for (const KSet& g2 : f23_iter(p)) {
                KSet witness = *f23_contains(p, g2);
                auto g1 = parity_of(p.n, g2, p.k(1));
                ++st.checked;
                if (!g1 || !is_maximal_pair(p.n, *g1, witness) ||
                    !in_bounds(*g1, ri_bounds(p, 1)) || !by_a.count(g1->elems) ||
                    by_a.at(g1->elems) != witness.elems) {
                    fail("family parity transfer breaks at " + p.str() + " G2=" + to_string(g2));
                    break;
                }
            }
            if (st.failed) break;
        }
    }

    CheckVerdict v;
    v.name = "fact-suite";
    v.params = "n<=" + std::to_string(nmax) + " seed=" + std::to_string(seed);
    v.checked = st.checked;
    v.skipped = st.skipped;
    v.status = st.failed ? CheckStatus::Fail : CheckStatus::Pass;
    v.counterexample = st.violation;
    return v;
}

CheckVerdict check_theorem(const Params& params, SearchBudget budget) {
    Regime regime = classify(params);
    ScanStats st;
    if (regime.is(Regime::Kind::Mixed)) {
        Objectives obj = m_formula(params);
        SearchResult res;
        try {
            res = brute_force_M(params, SearchMode::Smart, budget);
        } catch (const size_guard_error& e) {
            return regime_skip("theorem", params, e.what());
        }
        ++st.checked;
        if (res.max_sum != obj.m) {
            st.failed = true;
            st.violation = "formula " + obj.m.str() + " != search " + res.max_sum.str();
        }
        if (!st.failed) {
            ++st.checked;
            if (classify_extremal_set(params, res.extremal) == ExtremalClass::Other) {
                std::string ids;
                for (const auto& sys : res.extremal) {
                    ids += " (";
                    for (size_t i = 0; i < sys.ids.size(); ++i)
                        ids += (i ? " | " : "") + to_string(sys.ids[i]);
                    ids += ")";
                }
                st.failed = true;
                st.violation = "extremal set differs from the constructions:" + ids;
            }
        }
        if (!st.failed) {
            // construction totals, recomputed through ranks
            auto [c1, l1] = construction1(params);
            auto [c2, l2] = construction2(params);
            Count s1 = 0, s2 = 0;
            for (int i = 1; i <= params.t(); ++i) {
                s1 += rank(params.n, params.k(i), c1.ids[i - 1]);
                s2 += rank(params.n, params.k(i), c2.ids[i - 1]);
            }
            ++st.checked;
            if (s1 != l1 || s2 != l2) {
                st.failed = true;
                st.violation = "construction sizes disagree with their binomial totals";
            }
        }
        if (!st.failed) {
            // boundary values of g and strict interiority elsewhere
            auto [lo2, hi2] = ri_bounds(params, 2);
            ++st.checked;
            if (g_mixed(params, lo2) != obj.lambda1 || g_mixed(params, hi2) != obj.lambda2) {
                st.failed = true;
                st.violation = "g at the range endpoints misses lambda_1/lambda_2";
            } else {
                for (const KSet& g2 : f23_iter(params)) {
                    if (!strictly_interior(g2, {lo2, hi2})) continue;
                    ++st.checked;
                    if (!(g_mixed(params, g2) < obj.m)) {
                        st.failed = true;
                        st.violation = "interior ID " + to_string(g2) + " reaches the maximum";
                        break;
                    }
                }
            }
        }
        if (!st.failed) {
            Count naive_size = 1;
            for (int i = 1; i <= params.t(); ++i) naive_size *= binom(params.n, params.k(i));
            if (naive_size <= 2000000) {
                SearchResult nv = brute_force_M(params, SearchMode::Naive, budget);
                auto canon = [](const std::vector<SystemIds>& systems) {
                    std::vector<std::vector<std::vector<int>>> out;
                    for (const auto& sys : systems) {
                        std::vector<std::vector<int>> tuple;
                        for (const auto& id : sys.ids) tuple.push_back(id.elems);
                        out.push_back(std::move(tuple));
                    }
                    std::sort(out.begin(), out.end());
                    return out;
                };
                ++st.checked;
                if (nv.max_sum != res.max_sum || canon(nv.extremal) != canon(res.extremal)) {
                    st.failed = true;
                    st.violation = "naive and smart searches disagree";
                }
            } else {
                ++st.skipped;
            }
        }
        return make_verdict("theorem", params, st);
    }
    if (regime.is(Regime::Kind::NonMixed)) {
        Objectives obj = m_formula(params);
        SearchResult res;
        try {
            res = brute_force_M(params, SearchMode::Naive, budget);
        } catch (const size_guard_error& e) {
            return regime_skip("theorem", params, e.what());
        }
        ++st.checked;
        if (res.max_sum != obj.m) {
            st.failed = true;
            st.violation = "formula " + obj.m.str() + " != search " + res.max_sum.str();
        }
        return make_verdict("theorem", params, st);
    }
    return regime_skip("theorem", params, "no closed form in regime " + regime.str());
}

std::vector<Params> grid_instances(const SweepGrid& grid) {
    std::vector<Params> out;
    std::vector<int> ts = grid.ts;
    std::sort(ts.begin(), ts.end());
    for (int t : ts) {
        std::vector<int> ks(t);
        auto rec = [&](auto&& self, int pos, int hi) -> void {
            if (pos == t) {
                if (ks.back() < grid.ktmin) return;
                for (int n = ks[0] + ks.back(); n <= grid.nmax; ++n)
                    out.emplace_back(n, ks);
                return;
            }
            for (int v = hi; v >= 1; --v) {
                ks[pos] = v;
                self(self, pos + 1, v);
            }
        };
        rec(rec, 0, grid.kmax);
    }
    return out;
}

SweepReport run_sweep(const SweepGrid& grid, unsigned suites, SearchBudget budget) {
    std::vector<Params> instances = grid_instances(grid);
    auto run_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<CheckVerdict> local;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const Params& p = instances[i];
            if (suites & SuiteTheorem) local.push_back(check_theorem(p, budget));
            if (suites & SuiteParity) local.push_back(check_parity_lemma(p, budget));
            if (suites & SuiteUnimodality) {
                local.push_back(check_unimodality_g(p));
                local.push_back(check_prop_3_20(p));
                local.push_back(check_unimodality_f(p));
            }
        }
        return local;
    };
    auto parts = map_chunks<std::vector<CheckVerdict>>(instances.size(), run_chunk);
    SweepReport report;
    if (suites & SuiteFacts) report.verdicts.push_back(check_fact_suite());
    for (auto& part : parts)
        for (auto& v : part) report.verdicts.push_back(std::move(v));
    for (const auto& v : report.verdicts) {
        switch (v.status) {
            case CheckStatus::Pass: ++report.passes; break;
            case CheckStatus::Fail: ++report.failures; break;
            case CheckStatus::Skipped: ++report.skips; break;
        }
    }
    return report;
}

}  // namespace crossfam
