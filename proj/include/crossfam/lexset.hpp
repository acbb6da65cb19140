#pragma once

// Ground-set and lexicographic-order primitives for k-subsets of [n].
//
// The order used throughout: A precedes B iff A is a proper superset of B
// or min(A\B) < min(B\A).  With the convention min(emptyset) = +infinity
// both clauses collapse into the single min rule.  On equal-size sets this
// is ordinary lexicographic order of the sorted element sequences.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossfam {

// Family sizes and objective values; binomials overflow 64 bits quickly.
using Count = boost::multiprecision::cpp_int;

// Thrown when an enumeration or search would exceed its configured budget.
struct size_guard_error : std::runtime_error {
    explicit size_guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A subset of [n] = {1,...,n} stored as a strictly increasing sequence.
// A 64-bit occupancy mask mirrors the elements whenever n <= 64; it is the
// workhorse for intersection tests in enumeration oracles.
struct KSet {
    int n = 0;
    std::vector<int> elems;
    std::uint64_t mask = 0;

    KSet() = default;
    KSet(int ground, std::vector<int> sorted_elems);

    int size() const { return static_cast<int>(elems.size()); }
    bool empty() const { return elems.empty(); }
    bool contains(int x) const;
    int min() const { return elems.front(); }
    int max() const { return elems.back(); }

    bool operator==(const KSet& other) const {
        return n == other.n && elems == other.elems;
    }
    bool operator!=(const KSet& other) const { return !(*this == other); }
};

enum class Ordering { Before, Equal, After };

enum class StepDir { Succ, Pred };

struct Decomposition {
    int ell = 0;  // length of the suffix run [n-ell+1, n] contained in F
    KSet tail;    // that run (empty when ell = 0)
    KSet core;    // F minus the tail
};

/// Integer interval {lo, lo+1, ..., hi} as a KSet; empty when lo > hi.
KSet kset_interval(int n, int lo, int hi);

/// "2,4,7" rendering; empty set renders as "".
std::string to_string(const KSet& s);

/// Parse a comma list of ascending elements into a KSet over [n].
KSet parse_kset(int n, const std::string& text);

/// Binomial coefficient; 0 outside 0 <= k <= n.
Count binom(long long n, long long k);

/// The paper-order comparison (see header comment). Both sets must share n.
Ordering compare_lex(const KSet& a, const KSet& b);

inline bool lex_le(const KSet& a, const KSet& b) { return compare_lex(a, b) != Ordering::After; }
inline bool lex_lt(const KSet& a, const KSet& b) { return compare_lex(a, b) == Ordering::Before; }

// |L(n,R,k)|: 1-based position of the k-set R among all k-subsets of [n],
// by first-divergence counting, never by enumeration.
Count rank(int n, int k, const KSet& r);

// Number of k-sets F with F preceding-or-equal H, where |H| may differ
// from k.  Returns 0 when nothing precedes H (H an initial segment with
// k < |H|).
Count rank_general(int n, int k, const KSet& h);

/// Inverse of rank: the k-set at 1-based position r.
KSet unrank(int n, int k, const Count& r);

/// Immediate lex neighbour among k-sets of [n]; nullopt at the boundary.
std::optional<KSet> step(int n, int k, const KSet& r, StepDir dir);

/// ell/tail/core split of F with respect to the suffix run ending at n.
Decomposition decompose(int n, const KSet& f);

// One c-sequential move: F = A + {a+1..a+c} (last c elements consecutive,
// above the rest) maps to A + {a+2..a+c+1}; nullopt once the block hits n.
std::optional<KSet> seq_step(int n, const KSet& f, int c);

/// All F preceding-or-equal R in lex order. Refuses when the family
/// exceeds cap.
std::vector<KSet> members(int n, int k, const KSet& r, std::uint64_t cap = 1000000);

namespace detail {

// In-place successor over sorted k-element combinations of [n]; false at the
// last combination. Used by enumeration loops and the search fast path.
bool next_combination(std::vector<int>& comb, int n);

}  // namespace detail

}  // namespace crossfam
