#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordelab/semilattice.hpp"

namespace ord {

FinitePoset antichain(int n);
FinitePoset chain(int n);
// Subsets of {0..n-1} by inclusion; element labels are the subset masks.
FinitePoset boolean_lattice(int n);
// Pairs (i, j), 0 <= i < j < n, with (i,j) <= (i',j') iff i' <= i and j <= j'.
// Labels enumerate pairs in lexicographic order.
FinitePoset omega_pairs(int n);
FinitePoset omega_pairs_with_bottom(int n);  // bottom gets label 0
// 1 + (antichain(1) (+) chain(n)) + 1: bounded direct sum of a point and an
// n-chain. Contains a pentagon, hence non-modular, for n >= 2.
FinitePoset l_alpha(int n);
// Intersection of the natural order on 0..n-1 with the order induced by the
// permutation: i <= j iff i <= j and perm^-1(i) <= perm^-1(j).
FinitePoset sierp(const std::vector<int>& perm);
// Ground poset of Example 4.8 truncated to {0..n} x {0,1}:
// (m,i) < (n,j) iff m > n and i < j. Label of (k, b) is 2k + b.
FinitePoset example48_Q(int n);
// The union-closed family over example48_Q(n): down-sets F x {0} u G x {1}
// with F a non-empty final segment of {0..n}, G non-empty,
// min F - 1 <= min G <= min F. Returned as explicit member down-sets ordered
// by inclusion.
struct Example48P {
    FinitePoset ground;         // example48_Q(n)
    std::vector<Bits> members;  // down-sets of ground, sorted by (count, numeric)
    JoinSemilattice lat;        // inclusion order on members
};
Example48P example48_P(int n);
// chain(a) plus dual(chain(b)) side by side, no cross relations.
FinitePoset omega_plus_omegastar(int a, int b);

// "family:key=value,key=value" with list-valued params allowed
// ("sierp:perm=2,0,3,1"). Also accepts "family:n=6" shorthand "family:6".
struct FamilySpec {
    std::string family;
    std::map<std::string, std::vector<long long>> params;

    long long get(const std::string& key, std::optional<long long> dflt = std::nullopt) const;
    bool get_flag(const std::string& key, bool dflt) const;
};
FamilySpec parse_family_spec(const std::string& text);  // throws BadSpec

struct CatalogEntry {
    FinitePoset poset;
    std::optional<JoinSemilattice> semi;  // present when the poset is a join-semilattice
    std::string canonical_spec;
};
// Builds any catalog family from a spec. Throws BadSpec on unknown families,
// missing or out-of-range parameters.
CatalogEntry make(const FamilySpec& spec);

} // namespace ord
