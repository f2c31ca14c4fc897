#include "ordelab/chains.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ordelab/error.hpp"

namespace ord {

const char* status_name(Status s) {
    switch (s) {
        case Status::Verified: return "Verified";
        case Status::Refuted: return "Refuted";
        case Status::UnknownAtDepth: return "UnknownAtDepth";
    }
    return "Status";
}

namespace {

void need_chain(const OraclePoset& o) {
    if (!o.has_chain()) throw Error(Errc::BadInput, o.name() + " has no ideal chain");
}

// First element in ascending (level, code) order accepted by `keep`, scanning
// one level at a time so the cost tracks the level actually reached.
template <class F>
std::optional<std::uint64_t> first_element(const OraclePoset& o, int depth, F&& keep) {
    for (int lv = 0; lv <= depth; ++lv)
        for (std::uint64_t e : o.elements_up_to(lv)) {
            if (o.level(e) != lv) continue;
            if (keep(e)) return e;
        }
    return std::nullopt;
}

std::uint64_t join_all(const OraclePoset& o, const std::vector<std::uint64_t>& v, int lo,
                       int hi) {
    std::uint64_t j = v[lo];
    for (int i = lo + 1; i < hi; ++i) j = o.join(j, v[i]);
    return j;
}

} // namespace

SepVerdict is_separating(const OraclePoset& o, int depth) {
    need_chain(o);
    SepVerdict v;
    v.depth = depth;
    auto elems = o.elements_up_to(depth);
    for (int n = 1; n <= depth; ++n)
        for (std::uint64_t x : elems) {
            if (!o.in_chain(0, x) || o.in_chain(n, x)) continue;
            if (o.chain_subset_of_join_all(n, x, 0)) {
                v.status = Status::Refuted;
                v.refutation = {{n, x}};
                return v;
            }
        }
    v.status = Status::Verified;
    return v;
}

FiniteSepVerdict is_separating(const JoinSemilattice& l, const std::vector<Bits>& chain) {
    if (chain.empty()) throw Error(Errc::BadInput, "empty chain");
    const FinitePoset& p = l.poset();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].none())
            throw Error(Errc::BadInput, "chain member is empty", {(long long)i});
        if (!is_down_set(p, chain[i]))
            throw Error(Errc::BadInput, "chain member is not a down-set", {(long long)i});
        auto mem = chain[i].to_vector();
        for (int a : mem)
            for (int b : mem)
                if (!chain[i].test(l.join(a, b)))
                    throw Error(Errc::BadInput, "chain member is not directed",
                                {(long long)i, a, b});
    }
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            if (!chain[i].subset_of(chain[j]) && !chain[j].subset_of(chain[i]))
                throw Error(Errc::BadInput, "members are incomparable",
                            {(long long)i, (long long)j});

    Bits all(l.size());
    for (const Bits& c : chain) all |= c;
    FiniteSepVerdict v;
    for (std::size_t pos = 0; pos < chain.size(); ++pos) {
        if (chain[pos] == all) continue;
        Bits outside = all - chain[pos];
        for (int x = outside.first(); x != -1; x = outside.next(x)) {
            bool separated = false;
            for (std::size_t q = 0; q < chain.size() && !separated; ++q) {
                int gen = l.join(x, l.join_set(chain[q]));
                if (!chain[pos].subset_of(p.down(gen))) separated = true;
            }
            if (!separated) {
                v.separating = false;
                v.refutation = {{int(pos), x}};
                return v;
            }
        }
    }
    return v;
}

ForwardResult lemma_3_1_forward(const JoinSemilattice& l, const std::vector<int>& xs) {
    if (!l.has_bottom()) throw Error(Errc::NoBottom, "the empty tail needs a bottom ideal");
    if (xs.size() < 2) throw Error(Errc::BadInput, "need at least two generators");
    Bits set(l.size());
    for (int x : xs) {
        if (x < 0 || x >= l.size())
            throw Error(Errc::BadInput, "generator out of range", {x});
        set.set(x);
    }
    if (set.count() != int(xs.size()) || !is_independent(l, set))
        throw Error(Errc::NotIndependent, "generators are not independent");
    ForwardResult r;
    const int k = int(xs.size());
    for (int n = 0; n < k; ++n) {
        int g = xs[n];
        for (int i = n + 1; i < k; ++i) g = l.join(g, xs[i]);
        r.ideals.push_back(l.poset().down(g));
    }
    r.ideals.push_back(l.poset().down(l.bottom()));
    r.sep = is_separating(l, r.ideals);
    return r;
}

ExtractResult lemma_3_1_extract(const OraclePoset& o, int k, int depth) {
    need_chain(o);
    if (k < 1 || k > 24) throw Error(Errc::BadInput, "k out of range", {k, 1, 24});
    ExtractResult r;
    auto x0 = first_element(o, depth, [&](std::uint64_t e) {
        return o.in_chain(0, e) && !o.in_chain(1, e);
    });
    if (!x0)
        throw Error(Errc::SeparationFailedAtStep, "I_0 \\ I_1 empty within depth", {0, depth});
    r.xs.push_back(*x0);
    r.chain_indices.push_back(1);
    for (int n = 1; n < k; ++n) {
        std::uint64_t x = join_all(o, r.xs, 0, n);
        const int cPrev = r.chain_indices.back();
        bool found = false;
        for (int c = cPrev + 1; c <= depth && !found; ++c) {
            auto z = first_element(o, depth, [&](std::uint64_t e) {
                return o.in_chain(cPrev, e) && !o.in_chain_join(e, x, c);
            });
            if (z) {
                r.xs.push_back(*z);
                r.chain_indices.push_back(c);
                found = true;
            }
        }
        if (!found)
            throw Error(Errc::SeparationFailedAtStep,
                        "no admissible (x, J) at step " + std::to_string(n), {n, depth});
    }
    // Full independence re-check: x !<= vF over every non-empty F of the rest.
    r.independent = true;
    for (int t = 0; t < k && r.independent; ++t) {
        std::vector<std::uint64_t> rest;
        for (int i = 0; i < k; ++i)
            if (i != t) rest.push_back(r.xs[i]);
        for (std::uint64_t m = 1; m < (std::uint64_t(1) << rest.size()); ++m) {
            std::uint64_t j = 0;
            bool first = true;
            for (std::size_t b = 0; b < rest.size(); ++b)
                if (m >> b & 1) {
                    j = first ? rest[b] : o.join(j, rest[b]);
                    first = false;
                }
            if (o.leq(r.xs[t], j)) {
                r.independent = false;
                break;
            }
        }
    }
    return r;
}

Lemma32Result lemma_3_2_extract(const OraclePoset& o, int k, int depth) {
    need_chain(o);
    if (k < 1 || k > 64) throw Error(Errc::BadInput, "k out of range", {k, 1, 64});
    Lemma32Result r;
    auto empty = o.e_empty();
    if (!empty) {
        r.status = Status::UnknownAtDepth;
        return r;
    }

    if (!*empty) {
        // Case (i): E meets every chain member; walk strictly down through it.
        r.case_one = true;
        int c = 0;
        for (int t = 0; t < k; ++t) {
            auto x = first_element(o, depth, [&](std::uint64_t e) {
                return o.in_chain(c, e) && o.e_member(e);
            });
            if (!x)
                throw Error(Errc::WitnessSearchExhausted,
                            "no E-member inside chain index " + std::to_string(c), {t, depth});
            auto w = o.e_witness(*x);
            if (!w)
                throw Error(Errc::WitnessSearchExhausted, "no strictness index for E-member",
                            {t, depth});
            r.xs.push_back(*x);
            r.chain_indices.push_back(*w);
            c = *w;
        }
        r.conditions_ok = true;
        for (int t = 0; t + 1 < k; ++t)
            if (!o.leq(r.xs[t + 1], r.xs[t]) || r.xs[t + 1] == r.xs[t]) r.conditions_ok = false;
        r.status = r.conditions_ok ? Status::Verified : Status::Refuted;
        return r;
    }

    // Case (ii): E empty. Harvest x_0..x_k with their indices, then correct to
    // the y-sequence whose pairwise joins realize the pair-lattice pattern.
    int cPrev = 0;
    for (int n = 0; n <= k; ++n) {
        bool found = false;
        for (int c = cPrev + 1; c <= depth && !found; ++c) {
            auto z = first_element(o, depth, [&](std::uint64_t e) {
                return o.in_chain(cPrev, e) && !o.in_chain(c, e) &&
                       o.chain_subset_of_join_all(c, e, cPrev);
            });
            if (z) {
                r.xs.push_back(*z);
                r.chain_indices.push_back(c);
                cPrev = c;
                found = true;
            }
        }
        if (!found)
            throw Error(Errc::WitnessSearchExhausted,
                        "no (x, c) witness at step " + std::to_string(n), {n, depth});
    }

    r.ys.push_back(r.xs[0]);
    for (int n = 1; n <= k; ++n) {
        const int cp = r.chain_indices[n - 1];
        std::uint64_t below = join_all(o, r.ys, 0, n);
        auto z = first_element(o, depth, [&](std::uint64_t e) {
            return o.in_chain(cp, e) && !o.leq(e, below);
        });
        if (!z)
            throw Error(Errc::WitnessSearchExhausted, "no z at step " + std::to_string(n),
                        {n, depth});
        std::uint64_t y = o.join(r.xs[n], *z);
        for (int j = 0; j + 1 < n; ++j) {
            std::uint64_t target = join_all(o, r.ys, j + 1, n);
            auto t = first_element(o, depth, [&](std::uint64_t e) {
                return o.in_chain(cp, e) && o.leq(target, o.join(r.xs[j], e));
            });
            if (!t)
                throw Error(Errc::WitnessSearchExhausted,
                            "no t_j at step " + std::to_string(n), {n, j, depth});
            y = o.join(y, *t);
        }
        r.ys.push_back(y);
    }

    r.conditions_ok = o.in_chain(0, r.ys[0]);
    for (int n = 1; n <= k; ++n) {
        if (!o.leq(r.xs[n], r.ys[n])) r.conditions_ok = false;
        if (!o.in_chain(r.chain_indices[n - 1], r.ys[n])) r.conditions_ok = false;
        if (o.leq(r.ys[n], o.join(r.ys[0], r.ys[n - 1]))) r.conditions_ok = false;
    }
    for (int n = 0; n <= k; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                if (!o.leq(r.ys[j], o.join(r.ys[i], r.ys[n]))) r.conditions_ok = false;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) pairs.push_back({i, j});
    std::map<std::pair<int, int>, std::uint64_t> f;
    for (auto pr : pairs) f[pr] = o.join(r.ys[pr.first], r.ys[pr.second]);
    r.f_injective = true;
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b)
            if (f[pairs[a]] == f[pairs[b]]) r.f_injective = false;
    r.f_join_preserving = true;
    for (auto pa : pairs)
        for (auto pb : pairs) {
            std::pair<int, int> pj = {std::min(pa.first, pb.first),
                                      std::max(pa.second, pb.second)};
            if (o.join(f[pa], f[pb]) != f[pj]) r.f_join_preserving = false;
        }
    r.status = (r.conditions_ok && r.f_injective && r.f_join_preserving) ? Status::Verified
                                                                         : Status::Refuted;
    return r;
}

DescentResult prop_1_2_descent(const FinitePoset& q, const std::vector<Bits>& chain,
                               const std::vector<Bits>& xs, int m) {
    if (m < 0 || int(chain.size()) != m + 1 || int(xs.size()) != m + 1)
        throw Error(Errc::BadInput, "need m+1 chain members and m+1 witnesses",
                    {m, (long long)chain.size(), (long long)xs.size()});
    for (int n = 0; n <= m; ++n) {
        if (!is_down_set(q, chain[n]))
            throw Error(Errc::BadInput, "chain member is not a down-set", {n});
        if (!is_down_set(q, xs[n]))
            throw Error(Errc::BadInput, "witness is not a down-set", {n});
    }
    for (int n = 0; n + 1 <= m; ++n)
        if (!(chain[n + 1].subset_of(chain[n]) && chain[n + 1] != chain[n]))
            throw Error(Errc::PreconditionViolated, "chain not strictly descending", {n});
    for (int n = 1; n <= m; ++n)
        if (!xs[n].subset_of(chain[n - 1]))
            throw Error(Errc::PreconditionViolated, "x_n escapes I_{n-1}", {n});
    for (int n = 0; n <= m; ++n)
        if (xs[n].subset_of(chain[n]))
            throw Error(Errc::PreconditionViolated, "x_n lies inside I_n", {n});
    for (int n = 0; n <= m; ++n)
        for (int j = 0; j <= m; ++j)
            if (!chain[n].subset_of(xs[n] | chain[j]))
                throw Error(Errc::PreconditionViolated, "I_n escapes {x_n} v I_j", {n, j});

    DescentResult r;
    r.i_omega = Bits::full(q.size());
    for (const Bits& c : chain) r.i_omega &= c;
    r.q_prime = Bits::full(q.size()) - r.i_omega;
    for (int n = 0; n <= m; ++n) r.ys.push_back(xs[n] - r.i_omega);
    for (int n = 0; n + 1 <= m; ++n) {
        // x_{n+1} u I_omega <= I_n < x_n u I_omega gives the strict drop; the
        // witness is any element of x_n \ I_n.
        Bits wit = xs[n] - chain[n];
        int w = wit.first();
        if (!(r.ys[n + 1].subset_of(r.ys[n])) || w < 0 || !r.ys[n].test(w) ||
            r.ys[n + 1].test(w))
            throw Error(Errc::PreconditionViolated, "descent step failed", {n});
        r.drop_witness.push_back(w);
    }
    return r;
}

RamseyResult ramsey_extract(const FamilyOracle& fam, int m) {
    if (m < 0) throw Error(Errc::BadInput, "m must be non-negative", {m});
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            if (i != j && fam.subset(i, j)) throw Error(Errc::NotAnAntichain, "F_i <= F_j", {i, j});

    RamseyResult r;
    r.f.assign(m + 1, std::vector<std::uint64_t>(m + 1, 0));
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            bool picked = false;
            for (std::uint64_t e : fam.maxima(i))
                if (!fam.member(j, e)) {
                    r.f[i][j] = e;
                    picked = true;
                    break;
                }
            if (!picked)
                throw Error(Errc::NotAnAntichain, "Max(F_i) lies inside F_j", {i, j});
        }

    std::vector<int> pool(m + 1);
    std::iota(pool.begin(), pool.end(), 0);
    while (!pool.empty()) {
        int i = pool.front();
        r.stable.push_back(i);
        if (pool.size() == 1) break;
        std::map<std::uint64_t, std::vector<int>> groups;
        for (std::size_t t = 1; t < pool.size(); ++t) groups[r.f[i][pool[t]]].push_back(pool[t]);
        const std::vector<int>* best = nullptr;
        for (const auto& kv : groups)
            if (!best || kv.second.size() > best->size()) best = &kv.second;
        pool = *best;
    }

    // G_t = union of F_j over stable j from position t on; nonincreasing by
    // construction. A drop at t is certified by w = f(X_t, X_{t+1}): it sits
    // in Max(F_{X_t}) and outside every later member.
    for (std::size_t t = 0; t + 1 < r.stable.size(); ++t) {
        std::uint64_t w = r.f[r.stable[t]][r.stable[t + 1]];
        bool outside = true;
        for (std::size_t u = t + 1; u < r.stable.size() && outside; ++u)
            if (fam.member(r.stable[u], w)) outside = false;
        if (outside) r.drops.push_back({int(t), w});
    }
    return r;
}

FiniteRamseyResult ramsey_extract(const FinitePoset& q, const std::vector<Bits>& fs) {
    const int m = int(fs.size()) - 1;
    if (m < 0) throw Error(Errc::BadInput, "empty family");
    for (int i = 0; i <= m; ++i)
        if (!is_down_set(q, fs[i]))
            throw Error(Errc::BadInput, "family member is not a down-set", {i});
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            if (i != j && fs[i].subset_of(fs[j]))
                throw Error(Errc::NotAnAntichain, "F_i <= F_j", {i, j});

    FiniteRamseyResult r;
    r.f.assign(m + 1, std::vector<int>(m + 1, -1));
    for (int i = 0; i <= m; ++i) {
        Bits mx = maximal_elements(q, fs[i]);
        for (int j = i + 1; j <= m; ++j) {
            Bits pick = mx - fs[j];
            if (pick.none())
                throw Error(Errc::NotAnAntichain, "Max(F_i) lies inside F_j", {i, j});
            r.f[i][j] = pick.first();
        }
    }

    std::vector<int> pool(m + 1);
    std::iota(pool.begin(), pool.end(), 0);
    while (!pool.empty()) {
        int i = pool.front();
        r.stable.push_back(i);
        if (pool.size() == 1) break;
        std::map<int, std::vector<int>> groups;
        for (std::size_t t = 1; t < pool.size(); ++t) groups[r.f[i][pool[t]]].push_back(pool[t]);
        const std::vector<int>* best = nullptr;
        for (const auto& kv : groups)
            if (!best || kv.second.size() > best->size()) best = &kv.second;
        pool = *best;
    }

    for (std::size_t t = 0; t < r.stable.size(); ++t) {
        Bits g(q.size());
        for (std::size_t u = t; u < r.stable.size(); ++u) g |= fs[r.stable[u]];
        r.gs.push_back(g);
    }
    for (std::size_t t = 0; t + 1 < r.gs.size(); ++t) {
        Bits diff = r.gs[t] - r.gs[t + 1];
        if (diff.any()) r.drops.push_back({int(t), diff.first()});
    }
    return r;
}

std::vector<DiagnoseRow> diagnose(const OraclePoset& o, int depth, std::uint64_t budget) {
    if (!o.has_join()) throw Error(Errc::BadInput, o.name() + " has no join oracle");
    std::vector<DiagnoseRow> rows;
    for (int d = 0; d <= depth; ++d) {
        TruncationResult tr = truncate(o, d);
        DiagnoseRow row;
        row.depth = d;
        row.width = poset_width(tr.entry.poset);
        if (tr.entry.semi) {
            const JoinSemilattice& l = *tr.entry.semi;
            row.boolK = 0;
            for (int k = 1; (1 << k) <= l.size(); ++k) {
                auto res = join_embed(JoinSemilattice::from_poset(boolean_lattice(k)), l, budget);
                if (!res.map) break;
                row.boolK = k;
            }
            row.omegaK = 0;
            for (int k = 1;; ++k) {
                FinitePoset pat = omega_pairs_with_bottom(k);
                if (pat.size() > l.size()) break;
                auto res = join_embed(JoinSemilattice::from_poset(pat), l, budget);
                if (!res.map) break;
                row.omegaK = k;
            }
        } else {
            row.boolK = row.omegaK = -1;
        }
        row.chainSteps = 0;
        if (o.has_chain()) {
            std::vector<Bits> cuts;
            for (int n = 0; n <= 2 * depth + 2; ++n) {
                Bits cut(int(tr.codes.size()));
                for (std::size_t i = 0; i < tr.codes.size(); ++i)
                    if (o.in_chain(n, tr.codes[i])) cut.set(int(i));
                cuts.push_back(cut);
            }
            for (std::size_t n = 0; n + 1 < cuts.size(); ++n)
                if (cuts[n] != cuts[n + 1]) ++row.chainSteps;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace ord
