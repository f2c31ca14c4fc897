#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordelab/bits.hpp"
#include "ordelab/error.hpp"

namespace ord {

// Finite poset on labels 0..n-1 with dense order matrices. `up(x)` is the
// principal up-set (x included), `down(x)` the principal down-set.
class FinitePoset {
public:
    FinitePoset() = default;

    // `up[x]` must contain y exactly when x <= y. Throws NotReflexive /
    // NotAntisymmetric / NotTransitive with the first offending labels.
    static FinitePoset from_up_sets(std::vector<Bits> up);

    // Pairs (x, y) meaning x <= y; reflexive pairs implied.
    static FinitePoset from_pairs(int n, const std::vector<std::pair<int, int>>& leq);

    int size() const { return n_; }
    bool leq(int x, int y) const { return up_[x].test(y); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    const Bits& up(int x) const { return up_[x]; }
    const Bits& down(int x) const { return down_[x]; }

    bool operator==(const FinitePoset& o) const { return up_ == o.up_; }

private:
    int n_ = 0;
    std::vector<Bits> up_, down_;
};

struct CoverPair {
    int lower, upper;
};

struct PosetInvariants {
    int height = 0;                       // elements on a longest chain
    int width = 0;                        // largest antichain
    std::vector<int> level;               // longest chain strictly below, per element
    std::vector<CoverPair> covers;        // Hasse edges, sorted
    std::vector<Bits> principal_down;     // down(x) per x
};

PosetInvariants invariants(const FinitePoset& p);
std::vector<int> height_levels(const FinitePoset& p);
std::vector<CoverPair> cover_pairs(const FinitePoset& p);
int poset_width(const FinitePoset& p);

// Minimal/maximal elements of a subset (whole poset if `within` empty-universe).
Bits minimal_elements(const FinitePoset& p, const Bits& within);
Bits maximal_elements(const FinitePoset& p, const Bits& within);

bool is_down_set(const FinitePoset& p, const Bits& a);
Bits down_closure(const FinitePoset& p, const Bits& a);
Bits up_closure(const FinitePoset& p, const Bits& a);
// Directed: every pair in `a` has an upper bound in `a`.
bool is_directed(const FinitePoset& p, const Bits& a);
// Non-empty directed down-set.
bool is_ideal(const FinitePoset& p, const Bits& a);

// Every down-set of p ordered by (size, numeric value). Throws CapExceeded
// when the family would exceed `cap` members.
std::vector<Bits> enumerate_down_sets(const FinitePoset& p, std::size_t cap = std::size_t(1) << 20);

// Deterministic linear extension (repeatedly removes the least-label minimal element).
std::vector<int> linear_extension(const FinitePoset& p);

FinitePoset dual(const FinitePoset& p);
FinitePoset direct_sum(const FinitePoset& a, const FinitePoset& b);   // disjoint, incomparable
FinitePoset ordinal_sum(const FinitePoset& a, const FinitePoset& b);  // all of a below all of b
FinitePoset product(const FinitePoset& a, const FinitePoset& b);      // componentwise
FinitePoset induced(const FinitePoset& p, const Bits& keep, std::vector<int>* old_labels = nullptr);

// Isomorphism as a label bijection a -> b, or nullopt. Exhaustive with
// signature pruning; deterministic first solution.
std::optional<std::vector<int>> iso(const FinitePoset& a, const FinitePoset& b);

// Canonical form: lexicographically least level-order matrix encoding over all
// relabelings. Equal keys iff isomorphic.
std::vector<std::uint8_t> canonical_key(const FinitePoset& p);

// One representative per isomorphism class, in canonical-key order.
// Counts 1, 1, 2, 5, 16, 63, 318, 2045 for n = 0..7; throws CapExceeded above `cap`.
std::vector<FinitePoset> enumerate_posets(int n, int cap = 7);

} // namespace ord
