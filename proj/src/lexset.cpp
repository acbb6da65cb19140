#include "crossfam/lexset.hpp"

#include <algorithm>
#include <sstream>

namespace crossfam {

KSet::KSet(int ground, std::vector<int> sorted_elems) : n(ground), elems(std::move(sorted_elems)) {
    if (n < 0) throw std::invalid_argument("KSet: negative ground-set size");
    int prev = 0;
    for (int x : elems) {
        if (x <= prev) throw std::invalid_argument("KSet: elements must be strictly increasing");
        if (x > n) throw std::invalid_argument("KSet: element exceeds ground-set size");
        prev = x;
    }
    if (n <= 64) {
        for (int x : elems) mask |= std::uint64_t{1} << (x - 1);
    }
}

bool KSet::contains(int x) const {
    if (n <= 64 && x >= 1 && x <= n) return (mask >> (x - 1)) & 1u;
    return std::binary_search(elems.begin(), elems.end(), x);
}

KSet kset_interval(int n, int lo, int hi) {
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return KSet(n, std::move(v));
}

std::string to_string(const KSet& s) {
    std::string out;
    for (size_t i = 0; i < s.elems.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.elems[i]);
    }
    return out;
}

KSet parse_kset(int n, const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        v.push_back(std::stoi(item));
    }
    std::sort(v.begin(), v.end());
    return KSet(n, std::move(v));
}

Count binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Count result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Ordering compare_lex(const KSet& a, const KSet& b) {
    if (a.n != b.n) throw std::invalid_argument("compare_lex: mismatched ground sets");
    // First sequence divergence decides: the earlier elements are shared, so
    // the smaller element at the divergence is exactly min of that side's
    // difference.  A pure sequence prefix is a subset, and supersets precede.
    size_t m = std::min(a.elems.size(), b.elems.size());
    for (size_t i = 0; i < m; ++i) {
        if (a.elems[i] != b.elems[i])
            return a.elems[i] < b.elems[i] ? Ordering::Before : Ordering::After;
    }
    if (a.elems.size() == b.elems.size()) return Ordering::Equal;
    return a.elems.size() > b.elems.size() ? Ordering::Before : Ordering::After;
}

Count rank(int n, int k, const KSet& r) {
    if (r.size() != k) throw std::invalid_argument("rank: |R| != k");
    if (r.n != n) throw std::invalid_argument("rank: ground-set mismatch");
    Count before = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int x = prev + 1; x < r.elems[i]; ++x)
            before += binom(n - x, k - (i + 1));
        prev = r.elems[i];
    }
    return before + 1;
}

Count rank_general(int n, int k, const KSet& h) {
    if (h.empty()) throw std::invalid_argument("rank_general: H must be nonempty");
    if (h.n != n) throw std::invalid_argument("rank_general: ground-set mismatch");
    if (k < 0 || k > n) throw std::invalid_argument("rank_general: k out of range");
    int hs = h.size();
    Count total = 0;
    int prev = 0;
    for (int i = 0; i < std::min(k, hs); ++i) {
        for (int x = prev + 1; x < h.elems[i]; ++x)
            total += binom(n - x, k - (i + 1));
        prev = h.elems[i];
    }
    if (k > hs) {
        // k-sets extending H as a sequence prefix are supersets of H, hence
        // precede it.
        total += binom(n - h.max(), k - hs);
    } else if (k == hs) {
        total += 1;  // H itself
    }
    return total;
}

KSet unrank(int n, int k, const Count& r) {
    if (r < 1 || r > binom(n, k)) throw std::invalid_argument("unrank: rank out of range");
    Count remaining = r - 1;
    std::vector<int> out;
    int prev = 0;
    for (int i = 1; i <= k; ++i) {
        int x = prev + 1;
        for (;; ++x) {
            Count block = binom(n - x, k - i);
            if (remaining < block) break;
            remaining -= block;
        }
        out.push_back(x);
        prev = x;
    }
    return KSet(n, std::move(out));
}

std::optional<KSet> step(int n, int k, const KSet& r, StepDir dir) {
    if (r.size() != k) throw std::invalid_argument("step: |R| != k");
    if (r.n != n) throw std::invalid_argument("step: ground-set mismatch");
    std::vector<int> v = r.elems;
    if (dir == StepDir::Succ) {
        if (!detail::next_combination(v, n)) return std::nullopt;
        return KSet(n, std::move(v));
    }
    // Predecessor: longest prefix kept, one element dropped by one, then the
    // maximal tail [n-k+i+1, n].
    for (int i = k - 1; i >= 0; --i) {
        int below = (i == 0) ? 0 : v[i - 1];
        if (v[i] - 1 > below) {
            std::vector<int> out(v.begin(), v.begin() + i);
            out.push_back(v[i] - 1);
            for (int x = n - k + i + 2; x <= n; ++x) out.push_back(x);
            return KSet(n, std::move(out));
        }
    }
    return std::nullopt;  // r = {1..k}
}

Decomposition decompose(int n, const KSet& f) {
    if (f.n != n) throw std::invalid_argument("decompose: ground-set mismatch");
    Decomposition d;
    int ell = 0;
    int expect = n;
    for (auto it = f.elems.rbegin(); it != f.elems.rend() && *it == expect; ++it, --expect) ++ell;
    d.ell = ell;
    std::vector<int> core(f.elems.begin(), f.elems.end() - ell);
    d.core = KSet(n, std::move(core));
    d.tail = kset_interval(n, n - ell + 1, n);
    return d;
}

std::optional<KSet> seq_step(int n, const KSet& f, int c) {
    if (f.n != n) throw std::invalid_argument("seq_step: ground-set mismatch");
    if (c < 1 || c > f.size()) throw std::invalid_argument("seq_step: c out of [1,|F|]");
    int k = f.size();
    for (int i = k - c; i + 1 < k; ++i) {
        if (f.elems[i + 1] != f.elems[i] + 1)
            throw std::invalid_argument("seq_step: last c elements are not consecutive");
    }
    if (f.max() + 1 > n) return std::nullopt;
    std::vector<int> out(f.elems.begin(), f.elems.end() - c);
    for (int j = 0; j < c; ++j) out.push_back(f.elems[k - c] + 1 + j);
    return KSet(n, std::move(out));
}

std::vector<KSet> members(int n, int k, const KSet& r, std::uint64_t cap) {
    Count total = rank(n, k, r);
    if (total > cap)
        throw size_guard_error("members: family of size " + total.str() +
                               " exceeds cap " + std::to_string(cap));
    std::vector<KSet> out;
    std::vector<int> comb;
    for (int i = 1; i <= k; ++i) comb.push_back(i);
    for (;;) {
        out.emplace_back(n, comb);
        if (out.back() == r) break;
        if (!detail::next_combination(comb, n))
            throw std::logic_error("members: walked past the last combination");
    }
    return out;
}

namespace detail {

bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

}  // namespace detail

}  // namespace crossfam
