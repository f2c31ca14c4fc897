#include "ordelab/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ordelab/catalog.hpp"
#include "ordelab/chains.hpp"
#include "ordelab/embedding.hpp"
#include "ordelab/error.hpp"
#include "ordelab/ideals.hpp"

namespace ord {
namespace {

const std::vector<FinitePoset>& posets_up_to(int n) {
    static std::map<int, std::vector<FinitePoset>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<FinitePoset> all;
    for (int s = 0; s <= n; ++s) {
        auto batch = enumerate_posets(s);
        all.insert(all.end(), batch.begin(), batch.end());
    }
    return cache.emplace(n, std::move(all)).first->second;
}

struct SemiCase {
    const FinitePoset* p;
    JoinSemilattice l;
};

// Every non-empty poset up to `n` whose pairs all have joins.
std::vector<SemiCase> semilattices_up_to(int n, bool need_bottom) {
    std::vector<SemiCase> out;
    for (const auto& p : posets_up_to(n)) {
        if (p.size() == 0) continue;
        try {
            JoinSemilattice l = JoinSemilattice::from_poset(p);
            if (need_bottom && !l.has_bottom()) continue;
            out.push_back({&p, std::move(l)});
        } catch (const Error& e) {
            if (e.code() != Errc::NoLub) throw;
        }
    }
    return out;
}

FinitePoset random_poset(std::mt19937_64& rng, int max_n) {
    int n = 1 + int(rng() % std::uint64_t(max_n));
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < n; ++i) up[i].set(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 3 == 0) up[i].set(j);
    // Edges only go label-upward, so closing from the top label down is one pass.
    for (int i = n - 2; i >= 0; --i) {
        Bits direct = up[i];
        for (int j = direct.next(i); j >= 0; j = direct.next(j)) up[i] |= up[j];
    }
    return FinitePoset::from_up_sets(std::move(up));
}

Bits random_down_set(const FinitePoset& q, std::mt19937_64& rng) {
    Bits s(q.size());
    for (int e = 0; e < q.size(); ++e)
        if (rng() & 1) s.set(e);
    return down_closure(q, s);
}

std::vector<Bits> random_down_family(const FinitePoset& q, std::mt19937_64& rng, int max_f) {
    int want = 1 + int(rng() % std::uint64_t(max_f));
    std::vector<Bits> f;
    for (int t = 0; t < want; ++t) {
        Bits d = random_down_set(q, rng);
        if (std::find(f.begin(), f.end(), d) == f.end()) f.push_back(d);
    }
    return f;
}

bool joins_of_primes(const JoinSemilattice& l, const Bits& primes) {
    for (int x = 0; x < l.size(); ++x)
        if (l.join_set(primes & l.poset().down(x)) != x) return false;
    return true;
}

std::string count_detail(long long cases, const char* what) {
    std::ostringstream os;
    os << cases << " " << what;
    return os.str();
}

VerifyReport fail_at(VerifyReport r, const std::string& detail) {
    r.ok = false;
    r.detail = detail;
    return r;
}

VerifyReport fact_4_1(int max_size) {
    VerifyReport r{"fact4.1", true, 0, ""};
    for (const auto& q : posets_up_to(max_size)) {
        DownSetLattice L = initial_segment_lattice(q);
        Bits irr = join_irreducibles(L.lat);
        Bits pri = join_primes(L.lat);
        Bits downs(L.lat.size());
        for (int x = 0; x < q.size(); ++x) downs.set(L.index_of(q.down(x)));
        ++r.cases;
        if (irr != pri || irr != downs)
            return fail_at(r, "irreducibles, primes and principal down-sets disagree on ground poset case " +
                                  std::to_string(r.cases));
    }
    r.detail = count_detail(r.cases, "ground posets");
    return r;
}

VerifyReport fact_4_2(int max_size) {
    VerifyReport r{"fact4.2", true, 0, ""};
    int ground_cap = std::max(0, std::min(max_size - 1, 5));
    for (const auto& q : posets_up_to(ground_cap)) {
        DownSetLattice L = initial_segment_lattice(q);
        Bits primes = join_primes(L.lat);
        ++r.cases;
        if (!L.lat.has_bottom() || !joins_of_primes(L.lat, primes))
            return fail_at(r, "a down-set lattice missed the prime-join property, case " +
                                  std::to_string(r.cases));
        if (!iso(induced(L.lat.poset(), primes), q))
            return fail_at(r, "prime poset of a down-set lattice is not the ground poset, case " +
                                  std::to_string(r.cases));
    }
    // The converse at this scale: a join-semilattice with bottom is some
    // down-set lattice exactly when every element is a join of primes.
    std::set<std::vector<std::uint8_t>> downset_keys;
    for (const auto& q : posets_up_to(std::max(0, max_size - 1))) {
        DownSetLattice L = initial_segment_lattice(q);
        if (L.lat.size() <= max_size) downset_keys.insert(canonical_key(L.lat.poset()));
    }
    for (const auto& c : semilattices_up_to(max_size, true)) {
        bool joins = joins_of_primes(c.l, join_primes(c.l));
        bool is_downset_lattice = downset_keys.count(canonical_key(*c.p)) > 0;
        ++r.cases;
        if (joins != is_downset_lattice)
            return fail_at(r, "prime-join property disagrees with being a down-set lattice, case " +
                                  std::to_string(r.cases));
    }
    r.detail = count_detail(r.cases, "lattices, both directions");
    return r;
}

VerifyReport thm_1_1(int max_size) {
    VerifyReport r{"thm1.1", true, 0, ""};
    for (const auto& c : semilattices_up_to(max_size, true)) {
        DownSetLattice J = ideal_lattice(*c.p);
        ++r.cases;
        if (!c.l.is_lattice() || !J.lat.is_lattice())
            return fail_at(r, "a join-semilattice with bottom failed to be a lattice, case " +
                                  std::to_string(r.cases));
        if (!iso(J.lat.poset(), *c.p))
            return fail_at(r, "ideal lattice is not isomorphic to its ground, case " +
                                  std::to_string(r.cases));
    }
    r.detail = count_detail(r.cases, "semilattices with bottom");
    return r;
}

VerifyReport thm_1_4(int max_size, int k) {
    VerifyReport r{"thm1.4", true, 0, ""};
    std::vector<int> ks = k < 0 ? std::vector<int>{2, 3} : std::vector<int>{k};
    for (const auto& c : semilattices_up_to(max_size, true))
        for (int kk : ks) {
            Thm14Verdict v = theorem_1_4_check(c.l, kk);
            ++r.cases;
            if (!v.consistent) {
                std::ostringstream os;
                os << "independent-set / join-embedding / order-embedding split at k=" << kk
                   << ", case " << r.cases;
                return fail_at(r, os.str());
            }
        }
    r.detail = count_detail(r.cases, "(semilattice, k) pairs");
    return r;
}

VerifyReport thm_2_1c(int max_size) {
    VerifyReport r{"thm2.1c", true, 0, ""};
    for (const auto& c : semilattices_up_to(max_size, true)) {
        Bits irr = join_irreducibles(c.l);
        for (int x = 0; x < c.l.size(); ++x) {
            Bits d = irreducible_decomposition(c.l, x);
            ++r.cases;
            if (!d.subset_of(irr) || c.l.join_set(d) != x)
                return fail_at(r, "decomposition is not an irreducible join of the element, case " +
                                      std::to_string(r.cases));
        }
    }
    r.detail = count_detail(r.cases, "elements decomposed");
    return r;
}

VerifyReport thm_2_1d(int max_size) {
    VerifyReport r{"thm2.1d", true, 0, ""};
    for (const auto& c : semilattices_up_to(std::min(max_size, 5), true)) {
        for (int x = 0; x < c.l.size(); ++x) {
            std::vector<int> d = irreducible_decomposition(c.l, x).to_vector();
            ++r.cases;
            for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t(1) << d.size()); ++mask) {
                Bits s(c.l.size());
                for (std::size_t i = 0; i < d.size(); ++i)
                    if (mask >> i & 1) s.set(d[i]);
                if (c.l.join_set(s) == x)
                    return fail_at(r, "a proper subset of the decomposition already joins to the element, case " +
                                          std::to_string(r.cases));
            }
        }
    }
    r.detail = count_detail(r.cases, "decompositions checked minimal");
    return r;
}

VerifyReport lemma_4_3(int max_size) {
    VerifyReport r{"lemma4.3", true, 0, ""};
    for (const auto& c : semilattices_up_to(max_size, true)) {
        const FinitePoset& p = *c.p;
        DownSetLattice J = ideal_lattice(p);
        Bits everything = Bits::full(p.size());
        for (int ii = 0; ii < J.lat.size(); ++ii) {
            const Bits& plus = J.members[x_plus(J.lat, ii)];
            for (int x = 0; x < p.size(); ++x) {
                bool in_gap = plus.test(x) && !J.members[ii].test(x);
                Bits comp = everything - p.up(x);
                bool maximal = J.members[ii].subset_of(comp);
                for (int jj = 0; jj < J.lat.size() && maximal; ++jj)
                    if (J.members[jj] != J.members[ii] && J.members[ii].subset_of(J.members[jj]) &&
                        J.members[jj].subset_of(comp))
                        maximal = false;
                ++r.cases;
                if (in_gap != maximal)
                    return fail_at(r, "x in I+ \\ I disagrees with I maximal in the complement, case " +
                                          std::to_string(r.cases));
            }
        }
    }
    r.detail = count_detail(r.cases, "(ideal, element) pairs");
    return r;
}

VerifyReport lemma_4_9a(int max_size, std::uint64_t seed) {
    VerifyReport r{"lemma4.9a", true, 0, ""};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 1000; ++t) {
        FinitePoset q = random_poset(rng, std::max(1, max_size));
        FamilyClosure fc = family_closures(q, random_down_family(q, rng, 5));
        ++r.cases;
        if (!fc.union_iso)
            return fail_at(r, "ideal lattice of the union closure is not the arbitrary-union closure, case " +
                                  std::to_string(r.cases));
    }
    r.detail = count_detail(r.cases, "random down-set families");
    return r;
}

VerifyReport lemma_4_9b(int max_size, std::uint64_t seed) {
    VerifyReport r{"lemma4.9b", true, 0, ""};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 1000; ++t) {
        FinitePoset q = random_poset(rng, std::max(1, max_size));
        FamilyClosure fc = family_closures(q, random_down_family(q, rng, 5));
        ++r.cases;
        if (!fc.delta_from_complements)
            return fail_at(r, "a meet-irreducible closure member is no F_{not x}, case " +
                                  std::to_string(r.cases));
    }
    r.detail = count_detail(r.cases, "random down-set families");
    return r;
}

VerifyReport prop_4_4(int max_size) {
    VerifyReport r{"prop4.4", true, 0, ""};
    for (const auto& c : semilattices_up_to(max_size, true)) {
        const FinitePoset& p = *c.p;
        PhiDelta pd = phi_delta(c.l);
        PhiQReport pq = phi_q(p, pd.q_members);
        ++r.cases;
        if (!pd.injective || !pd.join_preserving || !pq.embedding || !pq.initial_segments ||
            !pq.order_preserving)
            return fail_at(r, "phi over the meet-irreducible ideals is not an embedding, case " +
                                  std::to_string(r.cases));
        Bits everything = Bits::full(p.size());
        for (int x = 0; x < p.size(); ++x) {
            if (x == c.l.bottom()) continue;
            Bits united(p.size());
            for (const Bits& m : pd.q_members)
                if (!m.test(x)) united |= m;
            if (united != everything - p.up(x))
                return fail_at(r, "complement of an up-set is no union of meet-irreducible ideals, case " +
                                      std::to_string(r.cases));
            for (const Bits& cover : cover_by_ideals(p, x))
                if (std::find(pd.q_members.begin(), pd.q_members.end(), cover) == pd.q_members.end())
                    return fail_at(r, "a maximal ideal of a complement is not meet-irreducible, case " +
                                          std::to_string(r.cases));
        }
    }
    r.detail = count_detail(r.cases, "semilattices with bottom");
    return r;
}

VerifyReport prop_4_10(int max_size) {
    VerifyReport r{"prop4.10", true, 0, ""};
    for (const auto& c : semilattices_up_to(max_size, false)) {
        PhiDelta pd = phi_delta(c.l);
        MinGroundResult mg = min_ground(c.l);
        ++r.cases;
        if (!pd.injective || !pd.join_preserving)
            return fail_at(r, "phi_Delta fails to embed, case " + std::to_string(r.cases));
        if (mg.m > int(pd.q_members.size()))
            return fail_at(r, "minimum ground exceeds the meet-irreducible count, case " +
                                  std::to_string(r.cases));
        for (int x = 0; x < c.l.size(); ++x)
            for (int y = 0; y < c.l.size(); ++y) {
                if (x < y && mg.map[x] == mg.map[y])
                    return fail_at(r, "minimum-ground map is not injective, case " +
                                          std::to_string(r.cases));
                if ((mg.map[x] | mg.map[y]) != mg.map[c.l.join(x, y)])
                    return fail_at(r, "minimum-ground map breaks a join, case " +
                                          std::to_string(r.cases));
            }
    }
    r.detail = count_detail(r.cases, "semilattices");
    return r;
}

VerifyReport dedekind_l2(int max_size) {
    VerifyReport r{"dedekind-L2", true, 0, ""};
    JoinSemilattice pentagon = JoinSemilattice::from_poset(l_alpha(2));
    for (const auto& c : semilattices_up_to(max_size, false)) {
        if (!c.l.is_lattice()) continue;
        LatticeLaws laws = lattice_tests(c.l);
        EmbedResult found = sublattice_embed(pentagon, c.l);
        ++r.cases;
        if (laws.is_modular == found.map.has_value())
            return fail_at(r, "modularity disagrees with pentagon-freeness, case " +
                                  std::to_string(r.cases));
    }
    r.detail = count_detail(r.cases, "lattices");
    return r;
}

VerifyReport thm_4_13_finite(int max_size, std::uint64_t seed) {
    VerifyReport r{"thm4.13-finite", true, 0, ""};
    std::mt19937_64 rng(seed);
    int attempts = 0;
    while (r.cases < 400 && attempts < 40000) {
        ++attempts;
        FinitePoset q = random_poset(rng, std::max(2, max_size));
        std::vector<Bits> fs;
        for (int t = 0; t < 6; ++t) {
            Bits d = random_down_set(q, rng);
            bool comparable = false;
            for (const Bits& got : fs)
                comparable = comparable || d.subset_of(got) || got.subset_of(d);
            if (!comparable) fs.push_back(d);
        }
        if (fs.size() < 2) continue;
        FiniteRamseyResult res = ramsey_extract(q, fs);
        ++r.cases;
        if (res.gs.size() != res.stable.size() || res.drops.size() + 1 != res.stable.size())
            return fail_at(r, "stable subfamily misses a strict drop, case " +
                                  std::to_string(r.cases));
        for (std::size_t t = 0; t + 1 < res.stable.size(); ++t) {
            int i = res.stable[t];
            int v = res.f[i][res.stable[t + 1]];
            for (std::size_t u = t + 1; u < res.stable.size(); ++u) {
                int j = res.stable[u];
                if (res.f[i][j] != v || !maximal_elements(q, fs[i]).test(res.f[i][j]) ||
                    fs[j].test(res.f[i][j]))
                    return fail_at(r, "colouring is not constant on the stable subfamily, case " +
                                          std::to_string(r.cases));
            }
            if (!res.gs[t + 1].subset_of(res.gs[t]))
                return fail_at(r, "suffix unions fail to descend, case " + std::to_string(r.cases));
        }
        for (const auto& [pos, witness] : res.drops)
            if (!res.gs[pos].test(witness) || res.gs[pos + 1].test(witness))
                return fail_at(r, "a drop witness is not certified, case " + std::to_string(r.cases));
    }
    r.detail = count_detail(r.cases, "random antichain families");
    return r;
}

} // namespace

std::vector<std::string> verify_ids() {
    return {"fact4.1",  "fact4.2",  "thm1.1",   "thm1.4",      "thm2.1c",
            "thm2.1d",  "lemma4.3", "lemma4.9a", "lemma4.9b",  "prop4.4",
            "prop4.10", "dedekind-L2", "thm4.13-finite"};
}

VerifyReport verify_theorem(const std::string& id, int max_size, std::uint64_t seed, int k) {
    if (max_size < 0) throw Error(Errc::BadInput, "negative max size", {max_size});
    if (id == "fact4.1") return fact_4_1(max_size);
    if (id == "fact4.2") return fact_4_2(max_size);
    if (id == "thm1.1") return thm_1_1(max_size);
    if (id == "thm1.4") return thm_1_4(max_size, k);
    if (id == "thm2.1c") return thm_2_1c(max_size);
    if (id == "thm2.1d") return thm_2_1d(max_size);
    if (id == "lemma4.3") return lemma_4_3(max_size);
    if (id == "lemma4.9a") return lemma_4_9a(max_size, seed);
    if (id == "lemma4.9b") return lemma_4_9b(max_size, seed);
    if (id == "prop4.4") return prop_4_4(max_size);
    if (id == "prop4.10") return prop_4_10(max_size);
    if (id == "dedekind-L2") return dedekind_l2(max_size);
    if (id == "thm4.13-finite") return thm_4_13_finite(max_size, seed);
    throw Error(Errc::UnknownTheoremId, id);
}

} // namespace ord
