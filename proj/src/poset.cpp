#include "ordelab/poset.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ord {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotReflexive: return "NotReflexive";
        case Errc::NotAntisymmetric: return "NotAntisymmetric";
        case Errc::NotTransitive: return "NotTransitive";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::NoLub: return "NoLub";
        case Errc::EmptyJoinWithoutBottom: return "EmptyJoinWithoutBottom";
        case Errc::NoBottom: return "NoBottom";
        case Errc::NoTop: return "NoTop";
        case Errc::NotALattice: return "NotALattice";
        case Errc::EmptyComplement: return "EmptyComplement";
        case Errc::BadInput: return "BadInput";
        case Errc::BadSpec: return "BadSpec";
        case Errc::TruncationNotJoinClosed: return "TruncationNotJoinClosed";
        case Errc::NotIndependent: return "NotIndependent";
        case Errc::NotAnAntichain: return "NotAnAntichain";
        case Errc::SeparationFailedAtStep: return "SeparationFailedAtStep";
        case Errc::WitnessSearchExhausted: return "WitnessSearchExhausted";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::BudgetExhausted: return "BudgetExhausted";
        case Errc::UnknownTheoremId: return "UnknownTheoremId";
    }
    return "Error";
}

FinitePoset FinitePoset::from_up_sets(std::vector<Bits> up) {
    FinitePoset p;
    p.n_ = int(up.size());
    for (int x = 0; x < p.n_; ++x)
        if (!up[x].test(x))
            throw Error(Errc::NotReflexive, "x !<= x for x=" + std::to_string(x), {x});
    for (int x = 0; x < p.n_; ++x)
        for (int y = x + 1; y < p.n_; ++y)
            if (up[x].test(y) && up[y].test(x))
                throw Error(Errc::NotAntisymmetric,
                            "x <= y and y <= x for x=" + std::to_string(x) + " y=" + std::to_string(y), {x, y});
    for (int x = 0; x < p.n_; ++x)
        for (int y = up[x].first(); y >= 0; y = up[x].next(y)) {
            if (!up[y].subset_of(up[x])) {
                Bits miss = up[y] - up[x];
                int z = miss.first();
                throw Error(Errc::NotTransitive,
                            "x <= y <= z but not x <= z for x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                " z=" + std::to_string(z),
                            {x, y, z});
            }
        }
    p.down_.assign(p.n_, Bits(p.n_));
    for (int x = 0; x < p.n_; ++x)
        for (int y = up[x].first(); y >= 0; y = up[x].next(y)) p.down_[y].set(x);
    p.up_ = std::move(up);
    return p;
}

FinitePoset FinitePoset::from_pairs(int n, const std::vector<std::pair<int, int>>& leq) {
    std::vector<Bits> up(n, Bits(n));
    for (int x = 0; x < n; ++x) up[x].set(x);
    for (auto [x, y] : leq) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw Error(Errc::BadInput, "pair label out of range", {x, y});
        up[x].set(y);
    }
    return from_up_sets(std::move(up));
}

std::vector<int> height_levels(const FinitePoset& p) {
    int n = p.size();
    std::vector<int> lv(n, 0);
    for (int x : linear_extension(p)) {
        int best = 0;
        p.down(x).for_each([&](int y) {
            if (y != x) best = std::max(best, lv[y] + 1);
        });
        lv[x] = best;
    }
    return lv;
}

std::vector<CoverPair> cover_pairs(const FinitePoset& p) {
    int n = p.size();
    std::vector<CoverPair> cov;
    for (int x = 0; x < n; ++x)
        for (int y = p.up(x).first(); y >= 0; y = p.up(x).next(y)) {
            if (y == x) continue;
            Bits between = p.up(x) & p.down(y);
            if (between.count() == 2) cov.push_back({x, y});
        }
    std::sort(cov.begin(), cov.end(), [](const CoverPair& a, const CoverPair& b) {
        return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
    });
    return cov;
}

namespace {

// Dilworth: width = n - maximum matching on the strict comparability DAG.
int max_chain_matching(const FinitePoset& p) {
    int n = p.size();
    std::vector<int> match_right(n, -1), match_left(n, -1);
    std::vector<char> seen(n);
    std::function<bool(int)> aug = [&](int x) -> bool {
        for (int y = p.up(x).first(); y >= 0; y = p.up(x).next(y)) {
            if (y == x || seen[y]) continue;
            seen[y] = 1;
            if (match_right[y] < 0 || aug(match_right[y])) {
                match_right[y] = x;
                match_left[x] = y;
                return true;
            }
        }
        return false;
    };
    int m = 0;
    for (int x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        if (aug(x)) ++m;
    }
    return m;
}

} // namespace

int poset_width(const FinitePoset& p) {
    if (p.size() == 0) return 0;
    return p.size() - max_chain_matching(p);
}

PosetInvariants invariants(const FinitePoset& p) {
    PosetInvariants inv;
    inv.level = height_levels(p);
    inv.height = 0;
    for (int l : inv.level) inv.height = std::max(inv.height, l + 1);
    inv.width = poset_width(p);
    inv.covers = cover_pairs(p);
    inv.principal_down.reserve(p.size());
    for (int x = 0; x < p.size(); ++x) inv.principal_down.push_back(p.down(x));
    return inv;
}

Bits minimal_elements(const FinitePoset& p, const Bits& within) {
    Bits w = within.universe() == p.size() ? within : Bits::full(p.size());
    Bits out(p.size());
    w.for_each([&](int x) {
        Bits below = p.down(x) & w;
        below.reset(x);
        if (below.none()) out.set(x);
    });
    return out;
}

Bits maximal_elements(const FinitePoset& p, const Bits& within) {
    Bits w = within.universe() == p.size() ? within : Bits::full(p.size());
    Bits out(p.size());
    w.for_each([&](int x) {
        Bits above = p.up(x) & w;
        above.reset(x);
        if (above.none()) out.set(x);
    });
    return out;
}

bool is_down_set(const FinitePoset& p, const Bits& a) {
    for (int x = a.first(); x >= 0; x = a.next(x))
        if (!p.down(x).subset_of(a)) return false;
    return true;
}

Bits down_closure(const FinitePoset& p, const Bits& a) {
    Bits out(p.size());
    for (int x = a.first(); x >= 0; x = a.next(x)) out |= p.down(x);
    return out;
}

Bits up_closure(const FinitePoset& p, const Bits& a) {
    Bits out(p.size());
    for (int x = a.first(); x >= 0; x = a.next(x)) out |= p.up(x);
    return out;
}

bool is_directed(const FinitePoset& p, const Bits& a) {
    for (int x = a.first(); x >= 0; x = a.next(x))
        for (int y = a.next(x); y >= 0; y = a.next(y))
            if (!(p.up(x) & p.up(y) & a).any()) return false;
    return true;
}

bool is_ideal(const FinitePoset& p, const Bits& a) {
    return a.any() && is_down_set(p, a) && is_directed(p, a);
}

std::vector<int> linear_extension(const FinitePoset& p) {
    int n = p.size();
    std::vector<int> indeg(n, 0), out;
    for (int x = 0; x < n; ++x) indeg[x] = p.down(x).count() - 1;
    Bits done(n);
    for (int step = 0; step < n; ++step) {
        for (int x = 0; x < n; ++x) {
            if (done.test(x)) continue;
            if ((p.down(x) - done).count() == 1) {
                out.push_back(x);
                done.set(x);
                break;
            }
        }
    }
    return out;
}

std::vector<Bits> enumerate_down_sets(const FinitePoset& p, std::size_t cap) {
    std::vector<Bits> sets{Bits(p.size())};
    for (int v : linear_extension(p)) {
        Bits need = p.down(v);
        need.reset(v);
        std::size_t m = sets.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (need.subset_of(sets[i])) {
                Bits s = sets[i];
                s.set(v);
                sets.push_back(std::move(s));
                if (sets.size() > cap)
                    throw Error(Errc::CapExceeded,
                                "down-set family exceeds " + std::to_string(cap) + " members",
                                {(long long)cap});
            }
        }
    }
    std::sort(sets.begin(), sets.end(), [](const Bits& a, const Bits& b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    return sets;
}

FinitePoset dual(const FinitePoset& p) {
    int n = p.size();
    std::vector<Bits> up(n, Bits(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p.leq(y, x)) up[x].set(y);
    return FinitePoset::from_up_sets(std::move(up));
}

FinitePoset direct_sum(const FinitePoset& a, const FinitePoset& b) {
    int n = a.size() + b.size();
    std::vector<Bits> up(n, Bits(n));
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.leq(x, y)) up[x].set(y);
    for (int x = 0; x < b.size(); ++x)
        for (int y = 0; y < b.size(); ++y)
            if (b.leq(x, y)) up[a.size() + x].set(a.size() + y);
    return FinitePoset::from_up_sets(std::move(up));
}

FinitePoset ordinal_sum(const FinitePoset& a, const FinitePoset& b) {
    int n = a.size() + b.size();
    std::vector<Bits> up(n, Bits(n));
    for (int x = 0; x < a.size(); ++x) {
        for (int y = 0; y < a.size(); ++y)
            if (a.leq(x, y)) up[x].set(y);
        for (int y = 0; y < b.size(); ++y) up[x].set(a.size() + y);
    }
    for (int x = 0; x < b.size(); ++x)
        for (int y = 0; y < b.size(); ++y)
            if (b.leq(x, y)) up[a.size() + x].set(a.size() + y);
    return FinitePoset::from_up_sets(std::move(up));
}

FinitePoset product(const FinitePoset& a, const FinitePoset& b) {
    int n = a.size() * b.size();
    auto id = [&](int x, int y) { return x * b.size() + y; };
    std::vector<Bits> up(n, Bits(n));
    for (int x1 = 0; x1 < a.size(); ++x1)
        for (int y1 = 0; y1 < b.size(); ++y1)
            for (int x2 = 0; x2 < a.size(); ++x2)
                for (int y2 = 0; y2 < b.size(); ++y2)
                    if (a.leq(x1, x2) && b.leq(y1, y2)) up[id(x1, y1)].set(id(x2, y2));
    return FinitePoset::from_up_sets(std::move(up));
}

FinitePoset induced(const FinitePoset& p, const Bits& keep, std::vector<int>* old_labels) {
    std::vector<int> lab = keep.to_vector();
    int n = int(lab.size());
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(lab[i], lab[j])) up[i].set(j);
    if (old_labels) *old_labels = std::move(lab);
    return FinitePoset::from_up_sets(std::move(up));
}

namespace {

struct Sig {
    int level, downs, ups;
    bool operator==(const Sig& o) const { return level == o.level && downs == o.downs && ups == o.ups; }
    bool operator<(const Sig& o) const {
        if (level != o.level) return level < o.level;
        if (downs != o.downs) return downs < o.downs;
        return ups < o.ups;
    }
};

std::vector<Sig> signatures(const FinitePoset& p) {
    auto lv = height_levels(p);
    std::vector<Sig> s(p.size());
    for (int x = 0; x < p.size(); ++x) s[x] = {lv[x], p.down(x).count(), p.up(x).count()};
    return s;
}

} // namespace

std::optional<std::vector<int>> iso(const FinitePoset& a, const FinitePoset& b) {
    if (a.size() != b.size()) return std::nullopt;
    int n = a.size();
    auto sa = signatures(a), sb = signatures(b);
    {
        auto ka = sa, kb = sb;
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (!(ka == kb)) return std::nullopt;
    }
    std::vector<std::vector<int>> cand(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (sa[x] == sb[y]) cand[x].push_back(y);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (cand[x].size() != cand[y].size()) return cand[x].size() < cand[y].size();
        return x < y;
    });
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> dfs = [&](int k) -> bool {
        if (k == n) return true;
        int x = order[k];
        for (int y : cand[x]) {
            if (used[y]) continue;
            bool ok = true;
            for (int t = 0; t < k && ok; ++t) {
                int u = order[t];
                if (a.leq(x, u) != b.leq(y, map[u]) || a.leq(u, x) != b.leq(map[u], y)) ok = false;
            }
            if (!ok) continue;
            map[x] = y;
            used[y] = 1;
            if (dfs(k + 1)) return true;
            map[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    return map;
}

namespace {

// Canonical labeling by lex-least level-order encoding: placing vertices one
// position at a time, the chunk for position k lists, per earlier position t,
// the two bits (placed_t <= v) and (v <= placed_t).
struct Canonizer {
    const FinitePoset& p;
    int n;
    std::vector<std::uint8_t> best, cur;
    std::vector<int> place;
    std::vector<char> used;

    explicit Canonizer(const FinitePoset& poset)
        : p(poset), n(poset.size()), best(std::size_t(n) * (n - 1), 0xFF),
          cur(best.size()), place(n, -1), used(n, 0) {}

    void run() {
        if (n <= 1) return;
        dfs(0, 0);
    }

    void dfs(int k, std::size_t off) {
        if (k == n) return;
        std::size_t len = std::size_t(2) * k;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            for (int t = 0; t < k; ++t) {
                cur[off + 2 * t] = p.leq(place[t], v);
                cur[off + 2 * t + 1] = p.leq(v, place[t]);
            }
            int cmp = 0;
            for (std::size_t i = 0; i < len && cmp == 0; ++i)
                cmp = int(cur[off + i]) - int(best[off + i]);
            if (cmp > 0) continue;
            if (cmp < 0) {
                std::copy(cur.begin() + off, cur.begin() + off + len, best.begin() + off);
                std::fill(best.begin() + off + len, best.end(), 0xFF);
            }
            place[k] = v;
            used[v] = 1;
            dfs(k + 1, off + len);
            used[v] = 0;
        }
    }
};

FinitePoset poset_from_key(int n, const std::vector<std::uint8_t>& key) {
    std::vector<Bits> up(n, Bits(n));
    for (int x = 0; x < n; ++x) up[x].set(x);
    std::size_t off = 0;
    for (int k = 1; k < n; ++k) {
        for (int t = 0; t < k; ++t) {
            if (key[off + 2 * t]) up[t].set(k);
            if (key[off + 2 * t + 1]) up[k].set(t);
        }
        off += std::size_t(2) * k;
    }
    return FinitePoset::from_up_sets(std::move(up));
}

} // namespace

std::vector<std::uint8_t> canonical_key(const FinitePoset& p) {
    Canonizer c(p);
    c.run();
    return c.best;
}

std::vector<FinitePoset> enumerate_posets(int n, int cap) {
    if (n < 0) throw Error(Errc::BadInput, "negative size", {n});
    if (n > cap)
        throw Error(Errc::CapExceeded, "poset enumeration capped at size " + std::to_string(cap), {cap});
    if (n == 0) return {FinitePoset::from_up_sets({})};

    std::set<std::vector<std::uint8_t>> keys;
    // Naturally labeled generation: element k picks a down-closed subset of
    // the poset built on 0..k-1. Every isomorphism class has such a labeling.
    std::vector<std::uint32_t> down(n, 0);
    std::function<void(int)> gen = [&](int k) {
        if (k == n) {
            std::vector<Bits> up(n, Bits(n));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (down[y] >> x & 1) up[x].set(y);
            keys.insert(canonical_key(FinitePoset::from_up_sets(std::move(up))));
            return;
        }
        for (std::uint32_t d = 0; d < (1u << k); ++d) {
            std::uint32_t closure = d;
            for (int i = 0; i < k; ++i)
                if (d >> i & 1) closure |= down[i];
            if (closure != d) continue;
            down[k] = d | (1u << k);
            gen(k + 1);
        }
    };
    gen(0);

    std::vector<FinitePoset> out;
    out.reserve(keys.size());
    for (const auto& key : keys) out.push_back(poset_from_key(n, key));
    return out;
}

} // namespace ord
