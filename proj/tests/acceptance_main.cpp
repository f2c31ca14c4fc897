// Acceptance suite: thirteen pass/fail checks over the full stack, one line
// of output each. Run with no arguments for all of them or with a single
// number to run one. Exit code 0 only when every requested check passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordelab/catalog.hpp"
#include "ordelab/chains.hpp"
#include "ordelab/embedding.hpp"
#include "ordelab/ideals.hpp"
#include "ordelab/oracle.hpp"
#include "ordelab/verify.hpp"

using namespace ord;

namespace {

// Budgets and tolerances for the whole suite live here.
constexpr int sweep_size = 6;               // exhaustive sweeps cover sizes <= 6
constexpr std::uint64_t sweep_seed = 1;     // seed for the randomized sweeps
constexpr long long fact41_ms = 60'000;     // criterion 1 wall-clock ceiling
constexpr long long thm14_ms = 300'000;     // criterion 2 wall-clock ceiling
constexpr long long lemma31_ms = 5'000;     // criterion 7 wall-clock ceiling
constexpr long long lemma32_ms = 10'000;    // criterion 8 wall-clock ceiling
constexpr std::uint64_t diagnose_budget = 200'000'000;  // criterion 12 node budget
constexpr int diagnose_depth = 5;
constexpr int omega_pairs_boolk_bound = 2;  // criterion 12 frozen bound for omega_pairs
constexpr int ramsey_m = 12;                // criterion 10 family prefix
constexpr std::size_t ramsey_min_drops = 6; // criterion 10 required strict drops

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome pass_with(const std::string& detail) { return {true, detail}; }
Outcome fail_with(const std::string& detail) { return {false, detail}; }

Outcome from_report(const VerifyReport& r, long long expect_cases) {
    if (!r.ok) return fail_with(r.id + ": " + r.detail);
    if (r.cases != expect_cases)
        return fail_with(r.id + ": swept " + std::to_string(r.cases) + " cases, expected " +
                         std::to_string(expect_cases));
    return pass_with(r.id + ": " + r.detail);
}

Outcome criterion1() {
    auto t0 = Clock::now();
    Outcome o = from_report(verify_theorem("fact4.1", sweep_size, sweep_seed), 406);
    if (!o.pass) return o;
    std::size_t reps = enumerate_posets(6).size();
    if (reps != 318)
        return fail_with("size-6 enumeration produced " + std::to_string(reps) +
                         " posets, expected 318");
    long long ms = ms_since(t0);
    if (ms > fact41_ms)
        return fail_with("took " + std::to_string(ms) + " ms, ceiling " +
                         std::to_string(fact41_ms));
    return pass_with(o.detail + "; 318 posets at size 6; " + std::to_string(ms) + " ms");
}

Outcome criterion2() {
    auto t0 = Clock::now();
    Outcome o = from_report(verify_theorem("thm1.4", sweep_size, sweep_seed), 50);
    if (!o.pass) return o;
    long long ms = ms_since(t0);
    if (ms > thm14_ms)
        return fail_with("took " + std::to_string(ms) + " ms, ceiling " +
                         std::to_string(thm14_ms));
    return pass_with(o.detail + "; " + std::to_string(ms) + " ms");
}

Outcome criterion3() {
    return from_report(verify_theorem("dedekind-L2", sweep_size, sweep_seed), 25);
}

Outcome criterion4() {
    Outcome c = from_report(verify_theorem("thm2.1c", sweep_size, sweep_seed), 129);
    if (!c.pass) return c;
    Outcome d = from_report(verify_theorem("thm2.1d", sweep_size, sweep_seed), 39);
    if (!d.pass) return d;
    return pass_with(c.detail + "; " + d.detail);
}

Outcome criterion5() {
    return from_report(verify_theorem("lemma4.9a", 5, sweep_seed), 1000);
}

Outcome criterion6() {
    return from_report(verify_theorem("prop4.10", sweep_size, sweep_seed), 77);
}

Outcome criterion7() {
    auto t0 = Clock::now();
    auto o = oracle(parse_family_spec("fin_sets"));
    ExtractResult r = lemma_3_1_extract(*o, 10, 40);
    if (r.xs.size() != 10)
        return fail_with("harvested " + std::to_string(r.xs.size()) + " elements, wanted 10");
    if (!r.independent) return fail_with("library re-verification flagged dependence");
    // Re-verify here against the raw definition: no element sits under the
    // join of the others.
    for (std::size_t i = 0; i < r.xs.size(); ++i) {
        bool have = false;
        std::uint64_t rest = 0;
        for (std::size_t j = 0; j < r.xs.size(); ++j) {
            if (j == i) continue;
            rest = have ? o->join(rest, r.xs[j]) : r.xs[j];
            have = true;
        }
        if (o->leq(r.xs[i], rest))
            return fail_with("element " + std::to_string(i) + " lies under the rest");
    }
    long long ms = ms_since(t0);
    if (ms > lemma31_ms)
        return fail_with("took " + std::to_string(ms) + " ms, ceiling " +
                         std::to_string(lemma31_ms));
    return pass_with("10 independent elements off the fin_sets chain; " + std::to_string(ms) +
                     " ms");
}

Outcome criterion8() {
    auto t0 = Clock::now();
    auto op = oracle(parse_family_spec("omega_pairs"));
    Lemma32Result r = lemma_3_2_extract(*op, 8, 40);
    if (r.status != Status::Verified || r.case_one)
        return fail_with("omega_pairs walk ended " + std::string(status_name(r.status)) +
                         (r.case_one ? " in case one" : ""));
    if (!r.conditions_ok || !r.f_injective || !r.f_join_preserving)
        return fail_with("omega_pairs witness bundle failed its own conditions");
    if (r.ys.size() != 9)
        return fail_with("expected y_0..y_8, got " + std::to_string(r.ys.size()) + " entries");
    // Exhaustive re-verification: f(i, j) = y_i v y_j must be an injective
    // join-preserving image of the pair lattice over {0..8}.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) pairs.emplace_back(i, j);
    std::vector<std::uint64_t> f;
    for (auto [i, j] : pairs) f.push_back(op->join(r.ys[i], r.ys[j]));
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (a < b && f[a] == f[b])
                return fail_with("pair-lattice map is not injective");
            int hi = std::min(pairs[a].first, pairs[b].first);
            int lo = std::max(pairs[a].second, pairs[b].second);
            std::uint64_t want = op->join(r.ys[hi], r.ys[lo]);
            if (op->join(f[a], f[b]) != want)
                return fail_with("pair-lattice map breaks a join");
        }

    auto os = oracle(parse_family_spec("omega_star"));
    Lemma32Result rs = lemma_3_2_extract(*os, 10, 40);
    if (rs.status != Status::Verified || !rs.case_one)
        return fail_with("omega_star walk did not verify case one");
    if (rs.xs.size() != 10)
        return fail_with("omega_star chain has length " + std::to_string(rs.xs.size()) +
                         ", wanted 10");
    for (std::size_t i = 0; i + 1 < rs.xs.size(); ++i)
        if (!os->leq(rs.xs[i + 1], rs.xs[i]) || os->leq(rs.xs[i], rs.xs[i + 1]))
            return fail_with("omega_star sequence is not strictly descending at step " +
                             std::to_string(i));
    long long ms = ms_since(t0);
    if (ms > lemma32_ms)
        return fail_with("took " + std::to_string(ms) + " ms, ceiling " +
                         std::to_string(lemma32_ms));
    return pass_with("case two on omega_pairs (36-element image re-verified), case one chain "
                     "of length 10 on omega_star; " +
                     std::to_string(ms) + " ms");
}

Outcome criterion9() {
    DescentFixture fx = remark414_descent_fixture(4, 6);
    DescentResult d = prop_1_2_descent(fx.q, fx.chain, fx.xs, 4);
    if (d.ys.size() != 5)
        return fail_with("expected y_0..y_4, got " + std::to_string(d.ys.size()) + " sets");
    if (d.drop_witness.size() != 4)
        return fail_with("expected 4 drop witnesses, got " +
                         std::to_string(d.drop_witness.size()));
    for (int n = 0; n < 4; ++n) {
        const Bits& a = d.ys[n];
        const Bits& b = d.ys[n + 1];
        int w = d.drop_witness[n];
        if (!b.subset_of(a) || a == b)
            return fail_with("y_" + std::to_string(n) + " does not strictly contain y_" +
                             std::to_string(n + 1));
        if (!a.test(w) || b.test(w))
            return fail_with("witness for step " + std::to_string(n) +
                             " does not certify the drop");
    }
    return pass_with("y_0 > y_1 > y_2 > y_3 > y_4, every drop certified");
}

Outcome criterion10() {
    auto fam = family_oracle(parse_family_spec("remark414"));
    RamseyResult r = ramsey_extract(*fam, ramsey_m);
    std::vector<int> want_stable(ramsey_m + 1);
    for (int i = 0; i <= ramsey_m; ++i) want_stable[i] = i;
    if (r.stable != want_stable) return fail_with("stable set is not {0..12}");
    if (r.drops.size() < ramsey_min_drops)
        return fail_with("only " + std::to_string(r.drops.size()) +
                         " strict drops, required >= " + std::to_string(ramsey_min_drops));
    // Frozen fixture: one drop per step, certified by b_t (code 2t + 1).
    if (r.drops.size() != std::size_t(ramsey_m))
        return fail_with("expected exactly 12 drops, got " + std::to_string(r.drops.size()));
    for (int t = 0; t < ramsey_m; ++t) {
        auto [pos, w] = r.drops[t];
        if (pos != t || w != std::uint64_t(2 * t + 1))
            return fail_with("drop " + std::to_string(t) + " is not (t, b_t)");
        // Certify against the family itself: w is in G_pos but not in G_{pos+1}.
        bool in_gt = false, in_gnext = false;
        for (std::size_t p = pos; p < r.stable.size(); ++p) {
            bool m = fam->member(r.stable[p], w);
            if (m) in_gt = true;
            if (m && int(p) > pos) in_gnext = true;
        }
        if (!in_gt || in_gnext)
            return fail_with("family membership refutes drop " + std::to_string(t));
    }
    for (int i = 0; i <= ramsey_m; ++i)
        for (int j = i + 1; j <= ramsey_m; ++j)
            if (r.f[i][j] != std::uint64_t(2 * i + 1))
                return fail_with("selector table differs from the frozen fixture");
    return pass_with("stable set {0..12}, 12 certified strict drops");
}

Outcome criterion11() {
    // Frozen by exhaustive search; the embedded maps are re-verified below.
    const int want[4] = {1, 2, 4, 6};
    std::string seen;
    for (int n = 2; n <= 5; ++n) {
        auto e = make(parse_family_spec("omega_pairs_with_bottom:" + std::to_string(n)));
        MinGroundResult mg = min_ground(*e.semi, default_embed_budget);
        const JoinSemilattice& l = *e.semi;
        for (int x = 0; x < l.size(); ++x) {
            if (mg.map[x] & ~((1 << mg.m) - 1))
                return fail_with("map image leaves the ground set at n=" + std::to_string(n));
            for (int y = 0; y < l.size(); ++y) {
                if (x < y && mg.map[x] == mg.map[y])
                    return fail_with("ground map is not injective at n=" + std::to_string(n));
                if ((mg.map[x] | mg.map[y]) != mg.map[l.join(x, y)])
                    return fail_with("ground map breaks a join at n=" + std::to_string(n));
            }
        }
        if (mg.m != want[n - 2])
            return fail_with("min ground at n=" + std::to_string(n) + " is " +
                             std::to_string(mg.m) + ", frozen value " +
                             std::to_string(want[n - 2]));
        seen += (n > 2 ? ", " : "") + std::to_string(mg.m);
    }
    // want[] is nondecreasing with want[3] > want[0]; the checks above pin it.
    return pass_with("min grounds " + seen + " for n = 2..5, nondecreasing, 6 > 1");
}

std::string render_rows(const char* name, const std::vector<DiagnoseRow>& rows) {
    std::ostringstream os;
    os << name << ":";
    for (const DiagnoseRow& r : rows)
        os << " d" << r.depth << "=(" << r.boolK << "," << r.omegaK << "," << r.width << ","
           << r.chainSteps << ")";
    return os.str();
}

Outcome criterion12() {
    auto fin = diagnose(*oracle(parse_family_spec("fin_sets")), diagnose_depth, diagnose_budget);
    auto prs = diagnose(*oracle(parse_family_spec("omega_pairs")), diagnose_depth,
                        diagnose_budget);
    auto omg = diagnose(*oracle(parse_family_spec("omega")), diagnose_depth, diagnose_budget);

    std::vector<std::string> broken;
    for (const DiagnoseRow& r : fin) {
        if (r.boolK < r.depth)
            broken.push_back("fin_sets boolK misses d at depth " + std::to_string(r.depth));
        if (r.omegaK > 2)
            broken.push_back("fin_sets omegaK " + std::to_string(r.omegaK) + " > 2 at depth " +
                             std::to_string(r.depth));
    }
    for (const DiagnoseRow& r : prs) {
        if (r.omegaK < r.depth)
            broken.push_back("omega_pairs omegaK misses d at depth " + std::to_string(r.depth));
        if (r.boolK > omega_pairs_boolk_bound)
            broken.push_back("omega_pairs boolK " + std::to_string(r.boolK) + " > " +
                             std::to_string(omega_pairs_boolk_bound) + " at depth " +
                             std::to_string(r.depth));
    }
    for (std::size_t i = 2; i < omg.size(); ++i) {
        const DiagnoseRow &a = omg[1], &b = omg[i];
        if (a.boolK != b.boolK || a.omegaK != b.omegaK || a.width != b.width ||
            a.chainSteps != b.chainSteps)
            broken.push_back("omega indicators move at depth " + std::to_string(b.depth));
    }

    std::string tables = render_rows("fin_sets", fin) + " | " + render_rows("omega_pairs", prs) +
                         " | " + render_rows("omega", omg);
    if (!broken.empty()) {
        std::string detail = broken.front();
        for (std::size_t i = 1; i < broken.size(); ++i) detail += "; " + broken[i];
        return fail_with(detail + " | observed " + tables);
    }
    return pass_with(tables);
}

Outcome criterion13() {
    // Claim 1: the listed down-sets form a join-subsemilattice of the
    // down-set lattice of the ground order, with join given by union.
    Example48P P = example48_P(8);
    if (P.members.size() != 1021)
        return fail_with("P(8) lists " + std::to_string(P.members.size()) +
                         " members, expected 1021");
    std::set<Bits> seen;
    for (const Bits& m : P.members) {
        if (!is_down_set(P.ground, m)) return fail_with("a member is not a down-set");
        if (!seen.insert(m).second) return fail_with("duplicate member");
    }
    const int sz = P.lat.size();
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
            if (P.lat.poset().leq(i, j) != P.members[i].subset_of(P.members[j]))
                return fail_with("lattice order disagrees with inclusion");
            if (P.members[P.lat.join(i, j)] != (P.members[i] | P.members[j]))
                return fail_with("lattice join disagrees with union");
        }

    // Claim 2 inside the depth-8 truncation: the chain traces strictly
    // descend and the successor of each trace maximum M_n is M_n v Y_n.
    auto o = oracle(parse_family_spec("example48"));
    TruncationResult tr = truncate(*o, 8);
    if (!tr.entry.semi) return fail_with("truncation is not a join-semilattice");
    const JoinSemilattice& lat = *tr.entry.semi;
    const int tn = int(tr.codes.size());
    auto index_of = [&](std::uint64_t code) {
        for (int i = 0; i < tn; ++i)
            if (tr.codes[i] == code) return i;
        return -1;
    };
    std::vector<Bits> traces;
    for (int n = 0; n <= 6; ++n) {
        Bits t(tn);
        for (int i = 0; i < tn; ++i)
            if (o->in_chain(n, tr.codes[i])) t.set(i);
        if (t.count() == 0) return fail_with("I_" + std::to_string(n) + " misses the truncation");
        if (n > 0 && (!t.subset_of(traces.back()) || t == traces.back()))
            return fail_with("I_" + std::to_string(n - 1) + " does not strictly contain I_" +
                             std::to_string(n) + " in the truncation");
        traces.push_back(t);
    }
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t mask = ((1u << 9) - 1u) & ~((1u << n) - 1u);  // {n..8}
        int iM = index_of((std::uint64_t(n + 1) << 32) | mask);
        int iY = index_of((std::uint64_t(n) << 32) | (1u << n));
        if (iM < 0 || iY < 0) return fail_with("M_n or Y_n missing at n=" + std::to_string(n));
        bool is_max = traces[n].test(iM);
        traces[n].for_each([&](int t) { is_max = is_max && tr.entry.poset.leq(t, iM); });
        if (!is_max) return fail_with("M_" + std::to_string(n) + " is not the trace maximum");
        if (o->in_chain(n, tr.codes[iY]))
            return fail_with("Y_" + std::to_string(n) + " already sits in I_" +
                             std::to_string(n));
        if (x_plus(lat, iM) != lat.join(iM, iY))
            return fail_with("successor of M_" + std::to_string(n) + " is not M_n v Y_n");
    }
    return pass_with("1021 members verified as a union-closed down-set family; traces of "
                     "I_0..I_6 strictly descend with successors M_n v Y_n");
}

struct Criterion {
    int number;
    const char* title;
    Outcome (*run)();
};

const Criterion criteria[] = {
    {1, "down-set lattice irreducibles sweep", criterion1},
    {2, "finite equivalence of the three k-pattern conditions", criterion2},
    {3, "modularity matches pentagon-freeness", criterion3},
    {4, "irreducible decompositions exist and are minimal", criterion4},
    {5, "union closures of random down-set families", criterion5},
    {6, "phi over the meet-irreducibles embeds", criterion6},
    {7, "independent-set extraction on fin_sets", criterion7},
    {8, "dichotomy extraction on omega_pairs and omega_star", criterion8},
    {9, "descent fixture yields a strict chain of differences", criterion9},
    {10, "ramsey extraction on the remark414 family", criterion10},
    {11, "minimum grounds of the pair lattices", criterion11},
    {12, "diagnose dichotomy across the three chain families", criterion12},
    {13, "example48 family validates and its chain tracks successors", criterion13},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 13) {
            std::fprintf(stderr, "usage: %s [1..13]\n", argv[0]);
            return 2;
        }
    }
    bool all_pass = true;
    for (const Criterion& c : criteria) {
        if (only && c.number != only) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const Error& e) {
            o = fail_with(std::string("unexpected error: ") + e.what());
        }
        std::printf("%s criterion %d: %s | %s\n", o.pass ? "PASS" : "FAIL", c.number, c.title,
                    o.detail.c_str());
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
