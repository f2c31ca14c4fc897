#pragma once

#include <cstdint>
#include <vector>

#include "ordelab/poset.hpp"

namespace ord {

// Join-semilattice over a FinitePoset: every pair has a least upper bound.
// Meets are computed too when they all exist (finite join-semilattices with a
// bottom always have them). Join tables are dense, so construction refuses
// posets larger than `table_cap`.
class JoinSemilattice {
public:
    static constexpr int table_cap = 4096;

    // Throws NoLub with witness {x, y, minimal upper bounds...} when a pair
    // has no least upper bound; CapExceeded above table_cap.
    static JoinSemilattice from_poset(FinitePoset p);

    const FinitePoset& poset() const { return p_; }
    int size() const { return p_.size(); }
    bool leq(int x, int y) const { return p_.leq(x, y); }
    bool lt(int x, int y) const { return p_.lt(x, y); }

    int join(int x, int y) const { return joins_[std::size_t(x) * size() + y]; }
    // Least upper bound of a set; the bottom for an empty set.
    // Throws EmptyJoinWithoutBottom.
    int join_set(const Bits& s) const;

    bool has_bottom() const { return bottom_ >= 0; }
    int bottom() const;  // throws NoBottom
    bool has_top() const { return top_ >= 0; }
    int top() const;  // throws NoTop

    bool is_lattice() const { return lattice_; }
    int meet(int x, int y) const;  // throws NotALattice when the pair has no glb

private:
    FinitePoset p_;
    std::vector<std::uint16_t> joins_, meets_;  // meets_: 0xFFFF where absent
    int bottom_ = -1, top_ = -1;
    bool lattice_ = true;
};

// Elements x != bottom with x = a v b implying x = a or x = b.
// Throws NoBottom (the definition compares against 0).
Bits join_irreducibles(const JoinSemilattice& l);
// Elements x != bottom with x <= a v b implying x <= a or x <= b.
// Always a subset of join_irreducibles.
Bits join_primes(const JoinSemilattice& l);

// Minimal antichain of join-irreducibles whose join is x. Removing any single
// member (hence any subset, by monotonicity) breaks the join. Throws NoBottom.
Bits irreducible_decomposition(const JoinSemilattice& l, int x);

// Full definition: x </= vF for every x in X and every non-empty F <= X\{x}.
// A set holding the bottom next to anything else is never independent.
bool is_independent(const JoinSemilattice& l, const Bits& x);
// Maximum-cardinality independent set, lexicographically least among maxima.
// The bottom is never a candidate. `bound` >= 0 caps the cardinality searched
// for (the cap itself may be returned); bound < 0 searches unbounded.
Bits max_independent(const JoinSemilattice& l, int bound = -1);

struct LatticeLaws {
    bool is_lattice = false;
    bool is_modular = false;       // x <= b implies x v (a ^ b) = (x v a) ^ b
    bool is_distributive = false;  // x ^ (y v z) = (x ^ y) v (x ^ z)
};
// Non-lattices report both laws false.
LatticeLaws lattice_tests(const JoinSemilattice& l);

} // namespace ord
