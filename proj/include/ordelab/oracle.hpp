#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordelab/catalog.hpp"

namespace ord {

// Level-indexed view of an infinite poset. Elements are 64-bit codes specific
// to each family; every element has a finite level, and each level holds
// finitely many elements. Families with a distinguished descending chain of
// ideals I_0 >= I_1 >= ... answer exact containment queries about it; the
// closed forms behind those answers are family-specific and are cross-checked
// against brute force on truncations in the tests.
class OraclePoset {
public:
    virtual ~OraclePoset() = default;

    virtual std::string name() const = 0;
    virtual bool leq(std::uint64_t a, std::uint64_t b) const = 0;
    virtual int level(std::uint64_t e) const = 0;
    // Ascending (level, code); deterministic.
    virtual std::vector<std::uint64_t> elements_up_to(int d) const = 0;
    virtual std::string describe(std::uint64_t e) const = 0;

    virtual bool has_join() const { return false; }
    virtual std::uint64_t join(std::uint64_t a, std::uint64_t b) const;

    virtual bool has_chain() const { return false; }
    virtual bool in_chain(int n, std::uint64_t e) const;
    // e in {x} v I_m (the ideal generated by x together with I_m).
    virtual bool in_chain_join(std::uint64_t e, std::uint64_t x, int m) const;
    // I_n <= {x} v I_m.
    virtual bool chain_subset_of_join(int n, std::uint64_t x, int m) const;
    // I_n <= {x} v I_m for every m >= mLow (an infinite conjunction).
    virtual bool chain_subset_of_join_all(int n, std::uint64_t x, int mLow) const;
    // x lies in E = { x : I_n strictly below down(x) for some n }.
    virtual bool e_member(std::uint64_t x) const;
    // Least n with I_n strictly below down(x), when x is in E.
    virtual std::optional<int> e_witness(std::uint64_t x) const;
    // Whether E is empty; nullopt when the family cannot say exactly.
    virtual std::optional<bool> e_empty() const { return std::nullopt; }
};

// Families: fin_sets, omega, omega_star, omega_pairs, example48, remark414.
// Throws BadSpec for anything else.
std::unique_ptr<OraclePoset> oracle(const FamilySpec& spec);

// Induced order on elements_up_to(d). When the family has joins the slice must
// be closed under them; otherwise throws TruncationNotJoinClosed with the
// offending pair of slice indices.
struct TruncationResult {
    CatalogEntry entry;
    std::vector<std::uint64_t> codes;  // codes[i] = oracle element behind poset label i
};
TruncationResult truncate(const OraclePoset& o, int d);

// An indexed antichain F_0, F_1, ... of finitely generated initial segments
// of a ground oracle poset. Membership and pairwise inclusion are exact.
class FamilyOracle {
public:
    virtual ~FamilyOracle() = default;
    virtual std::string name() const = 0;
    virtual const OraclePoset& ground() const = 0;
    virtual bool member(int i, std::uint64_t e) const = 0;
    virtual bool subset(int i, int j) const = 0;            // F_i <= F_j
    virtual std::vector<std::uint64_t> maxima(int i) const = 0;  // Max(F_i), ascending codes
};

// Only remark414 for now: ground omega (+) omega_star, F_i the image of the
// pair (i, i+1) under the natural join-embedding of the pair lattice over
// omega_star into the down-sets of the ground.
std::unique_ptr<FamilyOracle> family_oracle(const FamilySpec& spec);

// Finite instance of the descent data behind the remark414 family: ground
// truncation at `depth`, the chain image I_0 > ... > I_m and the witnesses
// x_0..x_m as down-sets of the truncation. Requires depth >= m + 2.
struct DescentFixture {
    FinitePoset q;
    std::vector<std::string> labels;  // describe() per ground element
    std::vector<Bits> chain;
    std::vector<Bits> xs;
};
DescentFixture remark414_descent_fixture(int m, int depth);

} // namespace ord
