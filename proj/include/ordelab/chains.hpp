#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordelab/embedding.hpp"
#include "ordelab/ideals.hpp"
#include "ordelab/oracle.hpp"

namespace ord {

enum class Status { Verified, Refuted, UnknownAtDepth };
const char* status_name(Status s);

// A chain of ideals is separating when for every member I other than the
// union and every x outside I there is some J in the chain with
// I not<= {x} v J. Refutations are exact (closed-form "for all J" answers);
// a Verified verdict covers the pairs (n, x) examined up to `depth` only.
struct SepVerdict {
    Status status = Status::UnknownAtDepth;
    int depth = 0;
    std::optional<std::pair<int, std::uint64_t>> refutation;  // (chain index, x)
};
SepVerdict is_separating(const OraclePoset& o, int depth);

// Finite overload; ideals are down-sets of l's poset, the verdict is exact.
struct FiniteSepVerdict {
    bool separating = true;
    std::optional<std::pair<int, int>> refutation;  // (chain position, element)
};
FiniteSepVerdict is_separating(const JoinSemilattice& l, const std::vector<Bits>& chain);

// I_n = ideal generated by xs minus its first n members; k+1 ideals, the
// last generated by nothing, i.e. the bottom alone. Throws NotIndependent
// and NoBottom.
struct ForwardResult {
    std::vector<Bits> ideals;
    FiniteSepVerdict sep;
};
ForwardResult lemma_3_1_forward(const JoinSemilattice& l, const std::vector<int>& xs);

// Walks a non-separating chain, harvesting an independent sequence of size k.
// Every choice point takes the least candidate in (level, code) order.
// Throws SeparationFailedAtStep(n) when no witness exists within depth.
struct ExtractResult {
    std::vector<std::uint64_t> xs;
    std::vector<int> chain_indices;
    bool independent = false;  // re-verified against the full definition
};
ExtractResult lemma_3_1_extract(const OraclePoset& o, int k, int depth);

// Unbounded-chain dichotomy. Case one: E meets every chain member, yielding a
// strictly descending sequence xs. Case two: E is empty, yielding xs plus the
// corrected sequence ys whose pairwise joins embed the pair lattice. Throws
// WitnessSearchExhausted(step, depth) when a required witness is not found.
struct Lemma32Result {
    Status status = Status::UnknownAtDepth;
    bool case_one = false;
    std::vector<std::uint64_t> xs;
    std::vector<int> chain_indices;
    std::vector<std::uint64_t> ys;
    bool conditions_ok = false;  // x_n <= y_n in I_{n-1}; y_n not<= y_0 v y_{n-1}; y_j <= y_i v y_n
    bool f_injective = false;    // f(i,j) = y_i v y_j over pairs i < j <= k
    bool f_join_preserving = false;
};
Lemma32Result lemma_3_2_extract(const OraclePoset& o, int k, int depth);

// Finite descent data: chain and xs are down-sets of q, m+1 entries each.
// Verifies x_n <= I_{n-1}, x_n not<= I_n, I_n <= x_n u I_j, chain strictly
// descending; throws PreconditionViolated(relation index, indices) otherwise.
// Returns y_n = x_n \ I_omega with per-step strictness witnesses.
struct DescentResult {
    std::vector<Bits> ys;
    Bits i_omega;   // intersection of the chain
    Bits q_prime;   // ground minus i_omega
    std::vector<int> drop_witness;  // drop_witness[n] certifies y_n > y_{n+1}
};
DescentResult prop_1_2_descent(const FinitePoset& q, const std::vector<Bits>& chain,
                               const std::vector<Bits>& xs, int m);

// Ramsey-style extraction over an antichain family F_0..F_m: pick
// f(i,j) in Max(F_i) \ F_j, thin {0..m} to a set X on which f(i, .) is
// constant per i (greedy largest group, least value on ties), then certify
// strict drops along G_t = union of F_j over j in X from position t on.
// Throws NotAnAntichain(i, j).
struct RamseyResult {
    std::vector<std::vector<std::uint64_t>> f;  // f[i][j] valid for i < j <= m
    std::vector<int> stable;                    // X, ascending
    std::vector<std::pair<int, std::uint64_t>> drops;  // (position t, witness in G_t \ G_{t+1})
};
RamseyResult ramsey_extract(const FamilyOracle& fam, int m);

// Finite overload: F holds down-sets of q. Same procedure, exact throughout.
struct FiniteRamseyResult {
    std::vector<std::vector<int>> f;
    std::vector<int> stable;
    std::vector<Bits> gs;  // G_t per stable position
    std::vector<std::pair<int, int>> drops;
};
FiniteRamseyResult ramsey_extract(const FinitePoset& q, const std::vector<Bits>& fs);

// Per-depth indicators of a family's truncations: largest boolean and
// omega-pair patterns join-embeddable, antichain width, and the number of
// strict inclusions along the truncated ideal chain. boolK/omegaK are -1 when
// the truncation is not a join-semilattice.
struct DiagnoseRow {
    int depth = 0;
    int boolK = 0;
    int omegaK = 0;
    int width = 0;
    int chainSteps = 0;
};
std::vector<DiagnoseRow> diagnose(const OraclePoset& o, int depth,
                                  std::uint64_t budget = default_embed_budget);

} // namespace ord
