#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordelab/semilattice.hpp"

namespace ord {

// Canonical order on member sets: cardinality first, numeric value second.
bool set_order_less(const Bits& a, const Bits& b);

// Inclusion order on a list of distinct sets (any universe). Throws NoLub
// when the family is not union-closed enough to have pairwise joins.
JoinSemilattice inclusion_semilattice(const std::vector<Bits>& members);

// A family of down-sets of some ground poset, ordered by inclusion and closed
// under union, materialized as a join-semilattice. members[i] is the down-set
// carried by lattice element i; members are sorted by (popcount, numeric).
struct DownSetLattice {
    JoinSemilattice lat;
    std::vector<Bits> members;

    int index_of(const Bits& s) const;  // -1 when absent
};

// All down-sets of p (the empty one included), ordered by inclusion.
// Throws CapExceeded when p has more than `cap` down-sets.
DownSetLattice initial_segment_lattice(const FinitePoset& p, std::size_t cap = std::size_t(1) << 20);

// Ideals of p: non-empty directed down-sets. For finite p these are exactly
// the principal down-sets, so the result has one member per element of p.
DownSetLattice ideal_lattice(const FinitePoset& p);

// x^+ = meet of the strict upper bounds of x, i.e. the greatest common lower
// bound of them; x itself when x is the top (empty meet). Total on finite
// join-semilattices: the common-lower-bound set is non-empty (x is in it) and
// closed under join.
int x_plus(const JoinSemilattice& l, int x);

// Completely meet-irreducible elements: x != x^+.
Bits delta(const JoinSemilattice& l);

// Minimum-cardinality set of ideals of p whose union is the complement of the
// up-set of x. These are the principal down-sets of the maximal elements of
// p minus up(x): every maximal element lies in no other ideal of the
// complement, so all of them are needed and they already cover.
// Throws EmptyComplement when x is the bottom.
std::vector<Bits> cover_by_ideals(const FinitePoset& p, int x);

// phi_Q(x) = { J in Q : x not in J } for a selection Q of ideals of p,
// reported as index sets into `q`.
struct PhiQReport {
    std::vector<Bits> image;          // image[x] = indices into q
    bool initial_segments = true;     // each image[x] is a down-set of (Q, <=)
    bool order_preserving = true;     // x <= y implies image[x] <= image[y]
    bool embedding = true;            // x </= y implies some J has x off, y in
    std::optional<std::pair<int, int>> violation;  // first (x, y) refuting embedding
};
PhiQReport phi_q(const FinitePoset& p, const std::vector<Bits>& q);

// phi restricted to Q = delta(J(P)) for a join-semilattice. image[x] indexes
// into `q_members`. Injective and join-preserving for every finite
// join-semilattice.
struct PhiDelta {
    std::vector<Bits> q_members;  // the completely meet-irreducible ideals
    std::vector<Bits> image;      // image[x] = { i : x not in q_members[i] }
    bool injective = true;
    bool join_preserving = true;
};
PhiDelta phi_delta(const JoinSemilattice& l);

// Closure of a family f of down-sets of q under non-empty finite unions,
// together with the structural checks used on it. Throws BadInput when f is
// empty or a member is not a down-set.
struct FamilyClosure {
    DownSetLattice closure;              // F^{<w}, ordered by inclusion
    bool union_iso = true;               // J(F^{<w}) -> F^u, X |-> UX is an isomorphism
    std::vector<Bits> f_not_x;           // per ground element x: indices of closure members avoiding x
    std::vector<int> delta_ideals;       // closure indices m with principal ideal in Delta(J)
    bool delta_from_complements = true;  // every Delta ideal equals some F_{not x}
    std::optional<int> delta_witness;    // first Delta ideal index with no such x
};
FamilyClosure family_closures(const FinitePoset& q, const std::vector<Bits>& f);

// Heights inside a finite join-semilattice: h(x) = length of the longest
// chain below x (levels), and h(L) = h(top) + 1. lattice_height throws NoTop
// on posets without one; a finite join-semilattice always has one.
std::vector<int> element_heights(const FinitePoset& p);
int lattice_height(const FinitePoset& p);

} // namespace ord
