#include "ordelab/semilattice.hpp"

#include <algorithm>
#include <bit>

#include "ordelab/error.hpp"

namespace ord {

namespace {

// Least element of `set`, or -1 when none. The least element, when it
// exists, is the unique one of minimum level.
int least_of(const FinitePoset& p, const std::vector<int>& lv, const Bits& set) {
    int best = -1;
    set.for_each([&](int i) {
        if (best < 0 || lv[i] < lv[best]) best = i;
    });
    if (best < 0) return -1;
    return set.subset_of(p.up(best)) ? best : -1;
}

int greatest_of(const FinitePoset& p, const std::vector<int>& lv, const Bits& set) {
    int best = -1;
    set.for_each([&](int i) {
        if (best < 0 || lv[i] > lv[best]) best = i;
    });
    if (best < 0) return -1;
    return set.subset_of(p.down(best)) ? best : -1;
}

} // namespace

JoinSemilattice JoinSemilattice::from_poset(FinitePoset p) {
    const int n = p.size();
    if (n > table_cap)
        throw Error(Errc::CapExceeded, "join table would need " + std::to_string(n) + " rows",
                    {n, table_cap});
    JoinSemilattice l;
    l.joins_.assign(std::size_t(n) * n, 0);
    l.meets_.assign(std::size_t(n) * n, 0xFFFF);
    auto lv = height_levels(p);
    for (int x = 0; x < n; ++x) {
        if (p.down(x).count() == n) l.top_ = x;
        if (p.up(x).count() == n) l.bottom_ = x;
        for (int y = 0; y <= x; ++y) {
            int j;
            if (p.leq(x, y)) j = y;
            else if (p.leq(y, x)) j = x;
            else {
                Bits ub = p.up(x) & p.up(y);
                j = least_of(p, lv, ub);
                if (j < 0) {
                    std::vector<long long> w{x, y};
                    ub.for_each([&](int z) {
                        if (!(p.down(z) & ub).subset_of(Bits::single(n, z)))
                            return;  // some w < z in ub: not minimal
                        w.push_back(z);
                    });
                    throw Error(Errc::NoLub, "pair has no least upper bound", w);
                }
            }
            l.joins_[std::size_t(x) * n + y] = std::uint16_t(j);
            l.joins_[std::size_t(y) * n + x] = std::uint16_t(j);
            int m;
            if (p.leq(x, y)) m = x;
            else if (p.leq(y, x)) m = y;
            else {
                Bits lb = p.down(x) & p.down(y);
                m = greatest_of(p, lv, lb);
            }
            if (m >= 0) {
                l.meets_[std::size_t(x) * n + y] = std::uint16_t(m);
                l.meets_[std::size_t(y) * n + x] = std::uint16_t(m);
            } else {
                l.lattice_ = false;
            }
        }
    }
    if (n == 0) l.lattice_ = false;
    l.p_ = std::move(p);
    return l;
}

int JoinSemilattice::join_set(const Bits& s) const {
    int acc = -1;
    s.for_each([&](int i) { acc = acc < 0 ? i : join(acc, i); });
    if (acc >= 0) return acc;
    if (!has_bottom())
        throw Error(Errc::EmptyJoinWithoutBottom, "empty join needs a bottom element");
    return bottom_;
}

int JoinSemilattice::bottom() const {
    if (bottom_ < 0) throw Error(Errc::NoBottom, "semilattice has no bottom");
    return bottom_;
}

int JoinSemilattice::top() const {
    if (top_ < 0) throw Error(Errc::NoTop, "poset has no top");
    return top_;
}

int JoinSemilattice::meet(int x, int y) const {
    int m = meets_[std::size_t(x) * size() + y];
    if (m == 0xFFFF)
        throw Error(Errc::NotALattice, "pair has no greatest lower bound", {x, y});
    return m;
}

Bits join_irreducibles(const JoinSemilattice& l) {
    const int n = l.size();
    int bot = l.has_bottom() ? l.bottom()
                             : throw Error(Errc::NoBottom, "join_irreducibles needs a bottom");
    Bits out(n);
    for (int x = 0; x < n; ++x) {
        if (x == bot) continue;
        bool red = false;
        Bits below = l.poset().down(x) - Bits::single(n, x);
        for (int a = below.first(); a >= 0 && !red; a = below.next(a))
            for (int b = below.next(a); b >= 0; b = below.next(b))
                if (l.join(a, b) == x) {
                    red = true;
                    break;
                }
        if (!red) out.set(x);
    }
    return out;
}

Bits join_primes(const JoinSemilattice& l) {
    const int n = l.size();
    int bot = l.has_bottom() ? l.bottom()
                             : throw Error(Errc::NoBottom, "join_primes needs a bottom");
    Bits out(n);
    for (int x = 0; x < n; ++x) {
        if (x == bot) continue;
        bool prime = true;
        for (int a = 0; a < n && prime; ++a)
            for (int b = 0; b <= a; ++b)
                if (l.leq(x, l.join(a, b)) && !l.leq(x, a) && !l.leq(x, b)) {
                    prime = false;
                    break;
                }
        if (prime) out.set(x);
    }
    return out;
}

Bits irreducible_decomposition(const JoinSemilattice& l, int x) {
    Bits irr = join_irreducibles(l);
    Bits cur = irr & l.poset().down(x);
    if (l.join_set(cur) != x)
        throw Error(Errc::BadInput, "element is not a join of irreducibles below it", {x});
    // One ascending pass: dropping y keeps the set joining to x iff y is
    // redundant against the rest; survivors are pairwise incomparable and no
    // proper subset still joins to x.
    for (int y = cur.first(); y >= 0; y = cur.next(y)) {
        Bits rest = cur - Bits::single(l.size(), y);
        if (l.join_set(rest) == x) cur = rest;
    }
    return cur;
}

bool is_independent(const JoinSemilattice& l, const Bits& x) {
    auto elems = x.to_vector();
    const int k = int(elems.size());
    if (k <= 1) return true;
    if (k > 20) throw Error(Errc::CapExceeded, "independence check is exponential", {k, 20});
    std::vector<int> joinof(std::size_t(1) << k, -1);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        int t = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        joinof[mask] = rest ? l.join(joinof[rest], elems[t]) : elems[t];
    }
    for (int i = 0; i < k; ++i)
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask)
            if (!(mask & (1u << i)) && l.leq(elems[i], joinof[mask])) return false;
    return true;
}

namespace {

// X independent iff every x in X escapes the join of all the others; smaller
// subsets are below that join, so this single test per element is enough.
struct IndepSearch {
    const JoinSemilattice& l;
    std::vector<int> cand;
    std::vector<int> cur;
    int target = 0;
    std::vector<int> found;

    bool extend(const std::vector<int>& with, int z) const {
        for (std::size_t i = 0; i < with.size(); ++i) {
            int j = -1;
            for (std::size_t t = 0; t < with.size(); ++t)
                if (t != i) j = j < 0 ? with[t] : l.join(j, with[t]);
            j = j < 0 ? z : l.join(j, z);
            if (l.leq(with[i], j)) return false;
        }
        if (!with.empty()) {
            int j = with[0];
            for (std::size_t t = 1; t < with.size(); ++t) j = l.join(j, with[t]);
            if (l.leq(z, j)) return false;
        }
        return true;
    }

    bool dfs(std::size_t at) {
        if (int(cur.size()) == target) {
            found = cur;
            return true;
        }
        for (std::size_t i = at; i < cand.size(); ++i) {
            if (int(cur.size()) + int(cand.size() - i) < target) return false;
            if (!extend(cur, cand[i])) continue;
            cur.push_back(cand[i]);
            if (dfs(i + 1)) return true;
            cur.pop_back();
        }
        return false;
    }
};

} // namespace

Bits max_independent(const JoinSemilattice& l, int bound) {
    IndepSearch s{l, {}, {}, 0, {}};
    for (int i = 0; i < l.size(); ++i)
        if (!l.has_bottom() || i != l.bottom()) s.cand.push_back(i);
    int hi = int(s.cand.size());
    if (bound >= 0) hi = std::min(hi, bound);
    // Largest feasible size first, then the include-first DFS over ascending
    // labels lands on the lexicographically least witness.
    for (int k = hi; k >= 1; --k) {
        s.target = k;
        s.cur.clear();
        if (s.dfs(0)) {
            Bits out(l.size());
            for (int v : s.found) out.set(v);
            return out;
        }
    }
    return Bits(l.size());
}

LatticeLaws lattice_tests(const JoinSemilattice& l) {
    LatticeLaws laws;
    if (!l.is_lattice()) return laws;
    laws.is_lattice = true;
    const int n = l.size();
    laws.is_modular = true;
    laws.is_distributive = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
                    laws.is_modular = false;
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
                    laws.is_distributive = false;
            }
    return laws;
}

} // namespace ord
