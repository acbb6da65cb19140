#include "crossfam/search.hpp"

#include <algorithm>
#include <cstdint>

#include "crossfam/threads.hpp"

namespace crossfam {

bool oracle_cross(int n, const KSet& a, const KSet& b, std::uint64_t cap) {
    if (n > 64) throw std::invalid_argument("oracle_cross: enumeration oracle needs n <= 64");
    auto fam_a = members(n, a.size(), a, cap);
    auto fam_b = members(n, b.size(), b, cap);
    for (const KSet& x : fam_a)
        for (const KSet& y : fam_b)
            if ((x.mask & y.mask) == 0) return false;
    return true;
}

namespace {

struct Pascal {
    std::vector<std::vector<std::uint64_t>> c;
    explicit Pascal(int n) : c(n + 1) {
        for (int i = 0; i <= n; ++i) {
            c[i].assign(i + 1, 1);
            for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
    }
    std::uint64_t at(int n, int k) const {
        if (k < 0 || k > n) return 0;
        return c[n][k];
    }
};

// 0-based lex index of a k-set, via the same first-divergence count as rank().
std::uint64_t rank0(const Pascal& pas, int n, const std::vector<int>& elems) {
    std::uint64_t before = 0;
    int k = static_cast<int>(elems.size());
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int x = prev + 1; x < elems[i]; ++x) before += pas.at(n - x, k - (i + 1));
        prev = elems[i];
    }
    return before;
}

struct IdSpace {
    int k = 0;
    std::vector<std::vector<int>> sets;  // all k-subsets of [n], lex order
};

IdSpace build_space(int n, int k, std::uint64_t guard) {
    Count total = binom(n, k);
    if (total > guard)
        throw size_guard_error("search: ID space of size " + total.str() + " exceeds guard");
    IdSpace space;
    space.k = k;
    std::vector<int> comb;
    for (int i = 1; i <= k; ++i) comb.push_back(i);
    do {
        space.sets.push_back(comb);
    } while (detail::next_combination(comb, n));
    return space;
}

// Per ordered family pair: the largest compatible partner index for every ID
// of the first family; -1 marks "no nonempty partner family".
struct PairCap {
    bool free_pair = false;
    std::vector<std::int64_t> cap;
};

PairCap build_pair_cap(const Params& params, const Pascal& pas, const IdSpace& from, int kj) {
    PairCap pc;
    int n = params.n;
    if (n < from.k + kj) {
        pc.free_pair = true;
        return pc;
    }
    pc.cap.reserve(from.sets.size());
    for (const auto& elems : from.sets) {
        auto cap_id = max_cross_id(n, KSet(n, elems), kj);
        pc.cap.push_back(cap_id ? static_cast<std::int64_t>(rank0(pas, n, cap_id->elems)) : -1);
    }
    return pc;
}

struct ChunkBest {
    std::uint64_t best = 0;
    bool any = false;
    std::vector<std::vector<std::uint64_t>> argmax;  // tuples of 0-based indices
    std::uint64_t evaluated = 0;
};

void merge_chunks(const std::vector<ChunkBest>& parts, ChunkBest& out) {
    for (const auto& part : parts) {
        out.evaluated += part.evaluated;
        if (!part.any) continue;
        if (!out.any || part.best > out.best) {
            out.best = part.best;
            out.argmax = part.argmax;
            out.any = true;
        } else if (part.best == out.best) {
            out.argmax.insert(out.argmax.end(), part.argmax.begin(), part.argmax.end());
        }
    }
}

SearchResult naive_search(const Params& params, SearchBudget budget) {
    int n = params.n;
    int t = params.t();
    Count estimate = 1;
    for (int i = 1; i <= t; ++i) estimate *= binom(n, params.k(i));
    if (estimate > budget.naive_tuples)
        throw size_guard_error("naive search: estimated " + estimate.str() +
                               " tuples exceeds budget " + std::to_string(budget.naive_tuples));
    Pascal pas(n);
    std::vector<IdSpace> spaces;
    for (int i = 1; i <= t; ++i) spaces.push_back(build_space(n, params.k(i), 4000000));
    // caps[i][j]: constraint family j's index given family i's choice (i < j)
    std::vector<std::vector<PairCap>> caps(t);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            caps[i].push_back(build_pair_cap(params, pas, spaces[i], params.k(j + 1)));

    std::uint64_t n1 = spaces[0].sets.size();
    auto run_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        ChunkBest local;
        std::vector<std::uint64_t> idx(t, 0);
        auto dfs = [&](auto&& self, int level, std::uint64_t partial) -> void {
            if (level == t) {
                ++local.evaluated;
                if (!local.any || partial > local.best) {
                    local.best = partial;
                    local.any = true;
                    local.argmax.assign(1, idx);
                } else if (partial == local.best) {
                    local.argmax.push_back(idx);
                }
                return;
            }
            std::int64_t cap = static_cast<std::int64_t>(spaces[level].sets.size()) - 1;
            for (int i = 0; i < level; ++i) {
                const PairCap& pc = caps[i][level - i - 1];
                if (pc.free_pair) continue;
                cap = std::min(cap, pc.cap[idx[i]]);
            }
            for (std::int64_t b = 0; b <= cap; ++b) {
                idx[level] = static_cast<std::uint64_t>(b);
                self(self, level + 1, partial + b + 1);
            }
        };
        for (std::uint64_t a = lo; a < hi; ++a) {
            idx[0] = a;
            dfs(dfs, 1, a + 1);
        }
        return local;
    };
    auto parts = map_chunks<ChunkBest>(n1, run_chunk);
    ChunkBest total;
    merge_chunks(parts, total);

    SearchResult res;
    res.mode = SearchMode::Naive;
    res.evaluated = total.evaluated;
    res.max_sum = total.any ? Count(total.best) : Count(0);
    for (const auto& tuple : total.argmax) {
        SystemIds sys{params, {}};
        for (int i = 0; i < t; ++i) sys.ids.emplace_back(n, spaces[i].sets[tuple[i]]);
        res.extremal.push_back(std::move(sys));
    }
    return res;
}

SearchResult smart_search(const Params& params, SearchBudget budget) {
    if (!classify(params).is(Regime::Kind::Mixed))
        throw std::invalid_argument("smart search: mixed regime required");
    int n = params.n;
    int t = params.t();
    Pascal pas(n);
    IdSpace s1 = build_space(n, params.k(1), 4000000);
    IdSpace s2 = build_space(n, params.k(2), 4000000);
    std::uint64_t a_start = rank0(pas, n, min_anchored_id(n, params.k(1), 1).elems);
    std::uint64_t b_start = rank0(pas, n, min_anchored_id(n, params.k(2), 1).elems);
    std::uint64_t na = s1.sets.size(), nb = s2.sets.size();
    std::uint64_t pairs = (na - a_start) * (nb - b_start);
    if (pairs > budget.smart_pairs)
        throw size_guard_error("smart search: " + std::to_string(pairs) +
                               " (I1,I2) pairs exceeds budget");

    // Total contribution of the derived I_i, i >= 3, when the lex-later of
    // (I1, I2) is the given ID; -1 when some family would have to be empty.
    auto derived_weight = [&](const KSet& j_id) -> std::int64_t {
        std::int64_t w = 0;
        for (int i = 3; i <= t; ++i) {
            auto kp = kpartner(n, j_id, params.k(i));
            if (!kp) return -1;
            w += static_cast<std::int64_t>(rank0(pas, n, kp->value.elems)) + 1;
        }
        return w;
    };
    std::vector<std::int64_t> w1(na - a_start), w2(nb - b_start);
    for (std::uint64_t a = a_start; a < na; ++a) w1[a - a_start] = derived_weight(KSet(n, s1.sets[a]));
    for (std::uint64_t b = b_start; b < nb; ++b) w2[b - b_start] = derived_weight(KSet(n, s2.sets[b]));

    // split[a]: largest b with I2^b preceding-or-equal I1^a (monotone in a).
    std::vector<std::int64_t> split(na - a_start);
    {
        std::int64_t p = static_cast<std::int64_t>(b_start) - 1;
        for (std::uint64_t a = a_start; a < na; ++a) {
            KSet ia(n, s1.sets[a]);
            while (p + 1 < static_cast<std::int64_t>(nb) &&
                   lex_le(KSet(n, s2.sets[p + 1]), ia))
                ++p;
            split[a - a_start] = p;
        }
    }

    auto run_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        ChunkBest local;
        for (std::uint64_t ai = lo; ai < hi; ++ai) {
            std::uint64_t a = a_start + ai;
            for (std::uint64_t b = b_start; b < nb; ++b) {
                std::int64_t w = (static_cast<std::int64_t>(b) <= split[ai])
                                     ? w1[ai]
                                     : w2[b - b_start];
                ++local.evaluated;
                if (w < 0) continue;
                std::uint64_t sum = (a + 1) + (b + 1) + static_cast<std::uint64_t>(w);
                if (!local.any || sum > local.best) {
                    local.best = sum;
                    local.any = true;
                    local.argmax.assign(1, {a, b});
                } else if (sum == local.best) {
                    local.argmax.push_back({a, b});
                }
            }
        }
        return local;
    };
    auto parts = map_chunks<ChunkBest>(na - a_start, run_chunk);
    ChunkBest total;
    merge_chunks(parts, total);

    SearchResult res;
    res.mode = SearchMode::Smart;
    res.evaluated = total.evaluated;
    res.max_sum = total.any ? Count(total.best) : Count(0);
    for (const auto& pair : total.argmax) {
        KSet i1(n, s1.sets[pair[0]]);
        KSet i2(n, s2.sets[pair[1]]);
        const KSet& later = lex_le(i2, i1) ? i1 : i2;
        SystemIds sys{params, {i1, i2}};
        Count check = rank(n, params.k(1), i1) + rank(n, params.k(2), i2);
        for (int i = 3; i <= t; ++i) {
            auto kp = kpartner(n, later, params.k(i));
            if (!kp) throw std::logic_error("smart search: missing partner at an argmax pair");
            check += rank(n, params.k(i), kp->value);
            sys.ids.push_back(kp->value);
        }
        for (int i = 1; i <= t; ++i)
            for (int j = i + 1; j <= t; ++j)
                if (!cross_lex(n, sys.ids[i - 1], sys.ids[j - 1]))
                    throw std::logic_error("smart search: derived tuple fails the pairwise test");
        if (check != res.max_sum)
            throw std::logic_error("smart search: argmax tuple sum mismatch");
        res.extremal.push_back(std::move(sys));
    }
    return res;
}

}  // namespace

SearchResult brute_force_M(const Params& params, SearchMode mode, SearchBudget budget) {
    return mode == SearchMode::Naive ? naive_search(params, budget) : smart_search(params, budget);
}

ScanResult scan(const Params& params, ScanTarget target) {
    Regime regime = classify(params);
    ScanResult out;
    out.max_value = 0;
    auto add_row = [&](const KSet& id, Count value) {
        if (out.rows.empty() || value > out.max_value) {
            out.max_value = value;
            out.argmax.assign(1, id);
        } else if (value == out.max_value) {
            out.argmax.push_back(id);
        }
        out.rows.push_back({id, std::move(value)});
    };
    if (target == ScanTarget::G) {
        if (!regime.is(Regime::Kind::Mixed))
            throw std::invalid_argument("scan: g requires the mixed regime");
        for (const KSet& g2 : f23_iter(params)) add_row(g2, g_mixed(params, g2));
        return out;
    }
    if (regime.is(Regime::Kind::NonMixed)) {
        auto lo = min_anchored_id(params.n, params.k(1), 1);
        auto hi = min_anchored_id(params.n, params.k(1), params.kt());
        for_each_in_range(params.n, lo, hi,
                          [&](const KSet& r) { add_row(r, f_nonmixed(params, r)); });
        return out;
    }
    if (regime.is(Regime::Kind::Mixed) || regime.is(Regime::Kind::GeneralS)) {
        int s = regime.s;
        auto [lo, hi] = ri_bounds(params, 1);
        for_each_in_range(params.n, lo, hi,
                          [&](const KSet& r) { add_row(r, f_general(params, s, r)); });
        return out;
    }
    throw std::invalid_argument("scan: no objective for regime " + regime.str());
}

std::optional<Count> constrained_best(const Params& params, const std::map<int, KSet>& fixed,
                                      SearchBudget budget) {
    int n = params.n;
    int t = params.t();
    for (const auto& [i, id] : fixed) {
        if (i < 1 || i > t) throw std::invalid_argument("constrained_best: index out of [1,t]");
        if (id.size() != params.k(i) || id.n != n)
            throw std::invalid_argument("constrained_best: ID shape mismatch at index " +
                                        std::to_string(i));
    }
    for (auto it = fixed.begin(); it != fixed.end(); ++it)
        for (auto jt = std::next(it); jt != fixed.end(); ++jt)
            if (!cross_lex(n, it->second, jt->second)) return std::nullopt;

    std::vector<int> open;
    for (int i = 1; i <= t; ++i)
        if (!fixed.count(i)) open.push_back(i);
    if (open.empty()) return Count(0);

    Count estimate = 1;
    for (int j : open) estimate *= binom(n, params.k(j));
    if (estimate > budget.naive_tuples)
        throw size_guard_error("constrained_best: estimated " + estimate.str() +
                               " completions exceeds budget");
    Pascal pas(n);
    int m = static_cast<int>(open.size());
    std::vector<IdSpace> spaces;
    for (int j : open) spaces.push_back(build_space(n, params.k(j), 4000000));

    // Static caps induced by the fixed IDs.
    std::vector<std::int64_t> fixed_cap(m);
    for (int u = 0; u < m; ++u) {
        std::int64_t cap = static_cast<std::int64_t>(spaces[u].sets.size()) - 1;
        for (const auto& [i, id] : fixed) {
            if (n < params.k(i) + params.k(open[u])) continue;
            auto mc = max_cross_id(n, id, params.k(open[u]));
            if (!mc) return std::nullopt;
            cap = std::min(cap, static_cast<std::int64_t>(rank0(pas, n, mc->elems)));
        }
        if (cap < 0) return std::nullopt;
        fixed_cap[u] = cap;
    }
    std::vector<std::vector<PairCap>> caps(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            caps[u].push_back(build_pair_cap(params, pas, spaces[u], params.k(open[v])));

    std::uint64_t best = 0;
    bool any = false;
    std::vector<std::uint64_t> idx(m, 0);
    auto dfs = [&](auto&& self, int level, std::uint64_t partial) -> void {
        if (level == m) {
            if (!any || partial > best) {
                best = partial;
                any = true;
            }
            return;
        }
        std::int64_t cap = fixed_cap[level];
        for (int u = 0; u < level; ++u) {
            const PairCap& pc = caps[u][level - u - 1];
            if (pc.free_pair) continue;
            cap = std::min(cap, pc.cap[idx[u]]);
        }
        for (std::int64_t b = 0; b <= cap; ++b) {
            idx[level] = static_cast<std::uint64_t>(b);
            self(self, level + 1, partial + b + 1);
        }
    };
    dfs(dfs, 0, 0);
    if (!any) return std::nullopt;
    return Count(best);
}

ExtremalClass classify_extremal_set(const Params& params, const std::vector<SystemIds>& extremal) {
    auto [l1, l2] = lambdas(params);
    std::vector<std::vector<KSet>> expected;
    if (l1 >= l2) expected.push_back(construction1(params).first.ids);
    if (l2 >= l1) {
        auto c2 = construction2(params).first.ids;
        if (expected.empty() || expected[0] != c2) expected.push_back(c2);
    }
    std::vector<std::vector<KSet>> found;
    for (const auto& sys : extremal) found.push_back(sys.ids);
    auto key = [](const std::vector<KSet>& ids) {
        std::vector<std::vector<int>> k;
        for (const auto& s : ids) k.push_back(s.elems);
        return k;
    };
    auto canon = [&](std::vector<std::vector<KSet>> v) {
        std::vector<std::vector<std::vector<int>>> out;
        for (auto& ids : v) out.push_back(key(ids));
        std::sort(out.begin(), out.end());
        return out;
    };
    if (canon(found) != canon(expected)) return ExtremalClass::Other;
    if (l1 > l2) return ExtremalClass::C1Only;
    if (l2 > l1) return ExtremalClass::C2Only;
    return ExtremalClass::Both;
}

ExtremalClass classify_extremal(const Params& params, SearchBudget budget) {
    SearchResult res = brute_force_M(params, SearchMode::Smart, budget);
    return classify_extremal_set(params, res.extremal);
}

}  // namespace crossfam
