#include "ordelab/ideals.hpp"

#include <algorithm>
#include <unordered_set>

#include "ordelab/error.hpp"

namespace ord {

bool set_order_less(const Bits& a, const Bits& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
}

JoinSemilattice inclusion_semilattice(const std::vector<Bits>& members) {
    const int n = int(members.size());
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (members[i].subset_of(members[j])) up[i].set(j);
    return JoinSemilattice::from_poset(FinitePoset::from_up_sets(std::move(up)));
}

int DownSetLattice::index_of(const Bits& s) const {
    auto it = std::lower_bound(members.begin(), members.end(), s, set_order_less);
    if (it == members.end() || !(*it == s)) return -1;
    return int(it - members.begin());
}

DownSetLattice initial_segment_lattice(const FinitePoset& p, std::size_t cap) {
    DownSetLattice d;
    d.members = enumerate_down_sets(p, cap);
    if (d.members.size() > std::size_t(JoinSemilattice::table_cap))
        throw Error(Errc::CapExceeded, "down-set lattice too large to materialize",
                    {(long long)d.members.size(), JoinSemilattice::table_cap});
    d.lat = inclusion_semilattice(d.members);
    return d;
}

DownSetLattice ideal_lattice(const FinitePoset& p) {
    DownSetLattice d;
    d.members.reserve(p.size());
    for (int x = 0; x < p.size(); ++x) d.members.push_back(p.down(x));
    std::sort(d.members.begin(), d.members.end(), set_order_less);
    d.lat = inclusion_semilattice(d.members);
    return d;
}

int x_plus(const JoinSemilattice& l, int x) {
    const int n = l.size();
    Bits uppers = l.poset().up(x) - Bits::single(n, x);
    if (uppers.none()) return x;  // empty meet: x is the top
    Bits clb = Bits::full(n);
    uppers.for_each([&](int u) { clb &= l.poset().down(u); });
    // clb holds x and is closed under join, so it has a unique maximum.
    Bits maxima = maximal_elements(l.poset(), clb);
    if (maxima.count() != 1)
        throw Error(Errc::NotALattice, "strict upper bounds have no greatest common lower bound",
                    {x});
    return maxima.first();
}

Bits delta(const JoinSemilattice& l) {
    Bits out(l.size());
    for (int x = 0; x < l.size(); ++x)
        if (x_plus(l, x) != x) out.set(x);
    return out;
}

std::vector<Bits> cover_by_ideals(const FinitePoset& p, int x) {
    Bits comp = Bits::full(p.size()) - p.up(x);
    if (comp.none())
        throw Error(Errc::EmptyComplement, "every element lies above x", {x});
    // Each maximal element of the complement lies in no ideal of the
    // complement except its own principal one, so this cover is the unique
    // minimum-cardinality one.
    std::vector<Bits> out;
    maximal_elements(p, comp).for_each([&](int m) { out.push_back(p.down(m)); });
    std::sort(out.begin(), out.end(), set_order_less);
    return out;
}

PhiQReport phi_q(const FinitePoset& p, const std::vector<Bits>& q) {
    const int n = p.size(), k = int(q.size());
    for (int i = 0; i < k; ++i)
        if (!is_ideal(p, q[i]))
            throw Error(Errc::BadInput, "selection member is not an ideal", {i});
    PhiQReport r;
    r.image.assign(n, Bits(k));
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < k; ++i)
            if (!q[i].test(x)) r.image[x].set(i);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < k; ++i)
            if (r.image[x].test(i))
                for (int j = 0; j < k; ++j)
                    if (q[j].subset_of(q[i]) && !r.image[x].test(j)) r.initial_segments = false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (p.leq(x, y) && !r.image[x].subset_of(r.image[y])) r.order_preserving = false;
            if (!p.leq(x, y) && r.image[x].subset_of(r.image[y]) && r.embedding) {
                r.embedding = false;
                r.violation = {x, y};
            }
        }
    return r;
}

PhiDelta phi_delta(const JoinSemilattice& l) {
    const int n = l.size();
    PhiDelta r;
    delta(l).for_each([&](int m) { r.q_members.push_back(l.poset().down(m)); });
    std::sort(r.q_members.begin(), r.q_members.end(), set_order_less);
    const int k = int(r.q_members.size());
    r.image.assign(n, Bits(k));
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < k; ++i)
            if (!r.q_members[i].test(x)) r.image[x].set(i);
    for (int x = 0; x < n && r.injective; ++x)
        for (int y = x + 1; y < n; ++y)
            if (r.image[x] == r.image[y]) {
                r.injective = false;
                break;
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!((r.image[x] | r.image[y]) == r.image[l.join(x, y)])) r.join_preserving = false;
    return r;
}

FamilyClosure family_closures(const FinitePoset& q, const std::vector<Bits>& f) {
    if (f.empty()) throw Error(Errc::BadInput, "family is empty");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].universe() != q.size() || !is_down_set(q, f[i]))
            throw Error(Errc::BadInput, "family member is not a down-set", {(long long)i});

    // Close under non-empty finite unions (pairwise suffices).
    std::unordered_set<Bits, BitsHash> seen(f.begin(), f.end());
    std::vector<Bits> work(seen.begin(), seen.end());
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Bits u = work[i] | work[j];
            if (seen.insert(u).second) work.push_back(u);
        }
    FamilyClosure r;
    r.closure.members = std::move(work);
    std::sort(r.closure.members.begin(), r.closure.members.end(), set_order_less);
    r.closure.lat = inclusion_semilattice(r.closure.members);
    const auto& mem = r.closure.members;
    const int n = int(mem.size());

    // J(closure) -> unions: finite ideals are principal, so the union over
    // the ideal of m is m itself; the map must land in the closure bijectively
    // and preserve order both ways, which the identity embedding does. Checked
    // literally rather than assumed.
    DownSetLattice ideals = ideal_lattice(r.closure.lat.poset());
    std::vector<int> target(ideals.members.size(), -1);
    for (std::size_t i = 0; i < ideals.members.size(); ++i) {
        Bits u(q.size());
        ideals.members[i].for_each([&](int m) { u |= mem[m]; });
        int t = r.closure.index_of(u);
        target[i] = t;
        if (t < 0) r.union_iso = false;
    }
    if (r.union_iso) {
        std::vector<bool> hit(n, false);
        for (int t : target) {
            if (t < 0 || hit[t]) r.union_iso = false;
            else hit[t] = true;
        }
        for (std::size_t i = 0; i < ideals.members.size() && r.union_iso; ++i)
            for (std::size_t j = 0; j < ideals.members.size(); ++j) {
                bool a = ideals.members[i].subset_of(ideals.members[j]);
                bool b = mem[target[i]].subset_of(mem[target[j]]);
                if (a != b) {
                    r.union_iso = false;
                    break;
                }
            }
        if (int(ideals.members.size()) != n) r.union_iso = false;
    }

    r.f_not_x.assign(q.size(), Bits(n));
    for (int x = 0; x < q.size(); ++x)
        for (int m = 0; m < n; ++m)
            if (!mem[m].test(x)) r.f_not_x[x].set(m);

    Bits d = delta(r.closure.lat);
    d.for_each([&](int m) { r.delta_ideals.push_back(m); });
    for (int m : r.delta_ideals) {
        Bits ideal = r.closure.lat.poset().down(m);
        bool found = false;
        for (int x = 0; x < q.size() && !found; ++x)
            if (r.f_not_x[x] == ideal) found = true;
        if (!found) {
            r.delta_from_complements = false;
            if (!r.delta_witness) r.delta_witness = m;
        }
    }
    return r;
}

std::vector<int> element_heights(const FinitePoset& p) { return height_levels(p); }

int lattice_height(const FinitePoset& p) {
    for (int x = 0; x < p.size(); ++x)
        if (p.down(x).count() == p.size()) return height_levels(p)[x] + 1;
    throw Error(Errc::NoTop, "poset has no top");
}

} // namespace ord
