#include "ordelab/embedding.hpp"

#include <algorithm>

#include "ordelab/catalog.hpp"
#include "ordelab/error.hpp"
#include "ordelab/ideals.hpp"

namespace ord {

namespace {

struct EmbedSearch {
    const FinitePoset& pa;
    const FinitePoset& pb;
    const JoinSemilattice* la = nullptr;
    const JoinSemilattice* lb = nullptr;
    bool joins = false, meets = false;
    std::uint64_t budget = 0, nodes = 0;

    std::vector<int> order;                // assignment order, ascending (level, label)
    std::vector<std::vector<int>> cand;    // per element of a, ascending labels
    std::vector<int> f, g;                 // partial map and its inverse (-1 empty)
    // Pairs (y1, y2), both distinct from x, with y1 v y2 = x (resp. meet);
    // their images pin f(x) once both are placed.
    std::vector<std::vector<std::pair<int, int>>> join_pairs, meet_pairs;

    bool consistent(int d, int x, int v) const {
        for (int t = 0; t < d; ++t) {
            int y = order[t], w = f[y];
            if (pa.leq(x, y) != pb.leq(v, w)) return false;
            if (pa.leq(y, x) != pb.leq(w, v)) return false;
            if (joins) {
                int j = la->join(x, y), jb = lb->join(v, w);
                if (f[j] >= 0) {
                    if (f[j] != jb) return false;
                } else if (jb == v) {
                    if (j != x) return false;
                } else if (g[jb] >= 0) {
                    if (g[jb] != j) return false;
                }
            }
            if (meets) {
                int m = la->meet(x, y), mb = lb->meet(v, w);
                if (f[m] >= 0) {
                    if (f[m] != mb) return false;
                } else if (mb == v) {
                    if (m != x) return false;
                } else if (g[mb] >= 0) {
                    if (g[mb] != m) return false;
                }
            }
        }
        if (joins)
            for (const auto& [y1, y2] : join_pairs[x])
                if (f[y1] >= 0 && f[y2] >= 0 && lb->join(f[y1], f[y2]) != v) return false;
        if (meets)
            for (const auto& [y1, y2] : meet_pairs[x])
                if (f[y1] >= 0 && f[y2] >= 0 && lb->meet(f[y1], f[y2]) != v) return false;
        return true;
    }

    bool dfs(int d) {
        if (d == int(order.size())) return true;
        int x = order[d];
        for (int v : cand[x]) {
            if (++nodes > budget)
                throw Error(Errc::BudgetExhausted, "embedding search budget exhausted",
                            {(long long)budget});
            if (g[v] >= 0 || !consistent(d, x, v)) continue;
            f[x] = v;
            g[v] = x;
            if (dfs(d + 1)) return true;
            f[x] = -1;
            g[v] = -1;
        }
        return false;
    }
};

EmbedResult run_search(const FinitePoset& pa, const FinitePoset& pb, const JoinSemilattice* la,
                       const JoinSemilattice* lb, bool joins, bool meets, std::uint64_t budget) {
    EmbedResult r;
    if (pa.size() > pb.size()) return r;
    EmbedSearch s{pa, pb, la, lb, joins, meets, budget, 0, {}, {}, {}, {}, {}, {}};
    if (joins || meets) {
        if (joins) s.join_pairs.assign(pa.size(), {});
        if (meets) s.meet_pairs.assign(pa.size(), {});
        for (int y1 = 0; y1 < pa.size(); ++y1)
            for (int y2 = y1 + 1; y2 < pa.size(); ++y2) {
                if (joins) {
                    int j = la->join(y1, y2);
                    if (j != y1 && j != y2) s.join_pairs[j].push_back({y1, y2});
                }
                if (meets) {
                    int m = la->meet(y1, y2);
                    if (m != y1 && m != y2) s.meet_pairs[m].push_back({y1, y2});
                }
            }
    }
    auto lva = height_levels(pa), lvb = height_levels(pb);
    auto cva = height_levels(dual(pa)), cvb = height_levels(dual(pb));
    s.cand.assign(pa.size(), {});
    for (int x = 0; x < pa.size(); ++x) {
        for (int v = 0; v < pb.size(); ++v)
            if (lva[x] <= lvb[v] && cva[x] <= cvb[v] &&
                pa.down(x).count() <= pb.down(v).count() &&
                pa.up(x).count() <= pb.up(v).count())
                s.cand[x].push_back(v);
        if (s.cand[x].empty()) {
            r.nodes = s.nodes;
            return r;
        }
        s.order.push_back(x);
    }
    std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        if (lva[a] != lva[b]) return lva[a] < lva[b];
        return a < b;
    });
    s.f.assign(pa.size(), -1);
    s.g.assign(pb.size(), -1);
    bool ok = s.dfs(0);
    r.nodes = s.nodes;
    if (ok) r.map = s.f;
    return r;
}

} // namespace

EmbedResult order_embed(const FinitePoset& a, const FinitePoset& b, std::uint64_t budget) {
    return run_search(a, b, nullptr, nullptr, false, false, budget);
}

EmbedResult join_embed(const JoinSemilattice& a, const JoinSemilattice& b, std::uint64_t budget) {
    return run_search(a.poset(), b.poset(), &a, &b, true, false, budget);
}

EmbedResult sublattice_embed(const JoinSemilattice& a, const JoinSemilattice& b,
                             std::uint64_t budget) {
    if (!a.is_lattice() || !b.is_lattice())
        throw Error(Errc::NotALattice, "sublattice embedding needs two lattices");
    return run_search(a.poset(), b.poset(), &a, &b, true, true, budget);
}

bool check_order_embedding(const FinitePoset& a, const FinitePoset& b,
                           const std::vector<int>& map) {
    if (int(map.size()) != a.size()) return false;
    for (int x = 0; x < a.size(); ++x) {
        if (map[x] < 0 || map[x] >= b.size()) return false;
        for (int y = 0; y < a.size(); ++y) {
            if (x != y && map[x] == map[y]) return false;
            if (a.leq(x, y) != b.leq(map[x], map[y])) return false;
        }
    }
    return true;
}

bool check_join_embedding(const JoinSemilattice& a, const JoinSemilattice& b,
                          const std::vector<int>& map) {
    if (!check_order_embedding(a.poset(), b.poset(), map)) return false;
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (b.join(map[x], map[y]) != map[a.join(x, y)]) return false;
    return true;
}

ForbiddenScan forbidden_scan(const JoinSemilattice& l, int kmax, std::uint64_t budget) {
    ForbiddenScan r;
    for (int k = 1; k <= kmax; ++k) {
        if ((std::size_t(1) << k) > std::size_t(l.size())) break;
        auto bk = JoinSemilattice::from_poset(boolean_lattice(k));
        if (!join_embed(bk, l, budget).map) break;
        r.maxBk = k;
    }
    for (int k = 1; k <= kmax; ++k) {
        if (std::size_t(k) * (k - 1) / 2 + 1 > std::size_t(l.size())) break;
        auto ok = JoinSemilattice::from_poset(omega_pairs_with_bottom(k));
        if (!join_embed(ok, l, budget).map) break;
        r.maxOmegak = k;
    }
    if (l.is_lattice()) {
        auto pentagon = JoinSemilattice::from_poset(l_alpha(2));
        r.hasL2 = sublattice_embed(pentagon, l, budget).map.has_value();
    }
    return r;
}

Thm14Verdict theorem_1_4_check(const JoinSemilattice& l, int k, std::uint64_t budget) {
    Thm14Verdict v;
    v.independent_witness = max_independent(l, k);
    v.independent_set = v.independent_witness.count() == k;
    auto bk = JoinSemilattice::from_poset(boolean_lattice(k));
    auto jr = join_embed(bk, l, budget);
    v.join_embedded = jr.map.has_value();
    v.join_map = jr.map;
    auto orr = order_embed(bk.poset(), l.poset(), budget);
    v.order_embedded = orr.map.has_value();
    v.order_map = orr.map;
    v.consistent =
        v.independent_set == v.join_embedded && v.join_embedded == v.order_embedded;
    return v;
}

MinGroundResult min_ground(const JoinSemilattice& l, std::uint64_t budget) {
    MinGroundResult r;
    // phi over the completely meet-irreducible ideals is always a
    // join-embedding, so |delta| ground elements suffice; probe downward.
    PhiDelta upper = phi_delta(l);
    int k = int(upper.q_members.size());
    r.m = k;
    r.map.assign(l.size(), 0);
    for (int x = 0; x < l.size(); ++x) {
        int mask = 0;
        upper.image[x].for_each([&](int i) { mask |= 1 << i; });
        r.map[x] = mask;
    }
    for (int m = k - 1; m >= 0; --m) {
        if ((std::size_t(1) << m) < std::size_t(l.size())) break;
        auto bm = JoinSemilattice::from_poset(boolean_lattice(m));
        auto res = join_embed(l, bm, budget);
        if (!res.map) break;
        r.m = m;
        r.map = *res.map;
    }
    return r;
}

} // namespace ord
