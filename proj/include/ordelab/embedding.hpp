#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordelab/semilattice.hpp"

namespace ord {

inline constexpr std::uint64_t default_embed_budget = 10'000'000;

// map[i] = image of element i of `a` in `b`; nodes = search tree size.
struct EmbedResult {
    std::optional<std::vector<int>> map;
    std::uint64_t nodes = 0;
};

// Injective map preserving and reflecting order: a.leq(x,y) <=> b.leq(f x, f y).
// Throws BudgetExhausted when the search tree outgrows `budget`.
EmbedResult order_embed(const FinitePoset& a, const FinitePoset& b,
                        std::uint64_t budget = default_embed_budget);

// Injective join-homomorphism: f(x v y) = f(x) v f(y). Join-embeddings are
// automatically order-embeddings.
EmbedResult join_embed(const JoinSemilattice& a, const JoinSemilattice& b,
                       std::uint64_t budget = default_embed_budget);

// Injective map preserving joins and meets. Throws NotALattice unless both
// arguments are lattices.
EmbedResult sublattice_embed(const JoinSemilattice& a, const JoinSemilattice& b,
                             std::uint64_t budget = default_embed_budget);

bool check_order_embedding(const FinitePoset& a, const FinitePoset& b,
                           const std::vector<int>& map);
bool check_join_embedding(const JoinSemilattice& a, const JoinSemilattice& b,
                          const std::vector<int>& map);

// Largest boolean / omega-pair patterns found, and whether the pentagon-free
// test applies. maxBk = max k with boolean(k) join-embeddable, maxOmegak = max
// k with omega_pairs_with_bottom(k) join-embeddable, hasL2 = L(2) (pentagon)
// sublattice present (false for non-lattices). kmax caps the pattern size
// probed.
struct ForbiddenScan {
    int maxBk = 0;
    int maxOmegak = 0;
    bool hasL2 = false;
};
ForbiddenScan forbidden_scan(const JoinSemilattice& l, int kmax = 8,
                             std::uint64_t budget = default_embed_budget);

// Equivalence of: an independent set of size k, a join-embedded boolean(k),
// an order-embedded boolean(k).
struct Thm14Verdict {
    bool independent_set = false;
    bool join_embedded = false;
    bool order_embedded = false;
    Bits independent_witness;
    std::optional<std::vector<int>> join_map, order_map;
    bool consistent = false;  // all three agree
};
Thm14Verdict theorem_1_4_check(const JoinSemilattice& l, int k,
                               std::uint64_t budget = default_embed_budget);

// Least m such that l join-embeds into the powerset lattice of an m-element
// set. Searches downward from |delta(J(l))|, which always suffices.
struct MinGroundResult {
    int m = 0;
    std::vector<int> map;  // images as subset masks of {0..m-1}
};
MinGroundResult min_ground(const JoinSemilattice& l,
                           std::uint64_t budget = default_embed_budget);

} // namespace ord
