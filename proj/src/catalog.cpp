#include "ordelab/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "ordelab/error.hpp"
#include "ordelab/ideals.hpp"

namespace ord {

namespace {

// Builders list generator pairs only; close them before validation.
FinitePoset from_rel(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < n; ++i) up[i].set(i);
    for (auto [a, b] : pairs) up[a].set(b);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (up[i].test(k)) up[i] |= up[k];
    return FinitePoset::from_up_sets(std::move(up));
}

void need_range(const std::string& what, long long v, long long lo, long long hi) {
    if (v < lo || v > hi)
        throw Error(Errc::BadSpec, what + " out of range [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]",
                    {v});
}

} // namespace

FinitePoset antichain(int n) {
    need_range("antichain:n", n, 0, JoinSemilattice::table_cap);
    return from_rel(n, {});
}

FinitePoset chain(int n) {
    need_range("chain:n", n, 0, JoinSemilattice::table_cap);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) rel.push_back({i, i + 1});
    return from_rel(n, rel);
}

FinitePoset boolean_lattice(int n) {
    need_range("boolean:n", n, 0, 12);
    const int m = 1 << n;
    std::vector<Bits> up(m, Bits(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if ((a & b) == a) up[a].set(b);
    return FinitePoset::from_up_sets(std::move(up));
}

FinitePoset omega_pairs(int n) {
    need_range("omega_pairs:n", n, 0, 91);
    std::vector<std::pair<int, int>> elems;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) elems.push_back({i, j});
    const int m = int(elems.size());
    std::vector<Bits> up(m, Bits(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (elems[b].first <= elems[a].first && elems[a].second <= elems[b].second)
                up[a].set(b);
    return FinitePoset::from_up_sets(std::move(up));
}

FinitePoset omega_pairs_with_bottom(int n) {
    FinitePoset core = omega_pairs(n);
    const int m = core.size() + 1;
    std::vector<Bits> up(m, Bits(m));
    up[0] = Bits::full(m);
    for (int a = 0; a < core.size(); ++a)
        core.up(a).for_each([&](int b) { up[a + 1].set(b + 1); });
    return FinitePoset::from_up_sets(std::move(up));
}

FinitePoset l_alpha(int n) {
    need_range("l_alpha:n", n, 0, JoinSemilattice::table_cap - 3);
    // 0 bottom, 1 side point, 2..n+1 the chain, n+2 top.
    const int m = n + 3;
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i < m; ++i) rel.push_back({0, i});
    for (int i = 0; i + 1 < m; ++i) rel.push_back({i, m - 1});
    for (int i = 2; i + 2 < m; ++i) rel.push_back({i, i + 1});
    return from_rel(m, rel);
}

FinitePoset sierp(const std::vector<int>& perm) {
    const int n = int(perm.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || pos[perm[i]] >= 0)
            throw Error(Errc::BadSpec, "sierp:perm is not a permutation", {i, perm[i]});
        pos[perm[i]] = i;
    }
    std::vector<Bits> up(n, Bits(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a <= b && pos[a] <= pos[b]) up[a].set(b);
    return FinitePoset::from_up_sets(std::move(up));
}

FinitePoset example48_Q(int n) {
    need_range("example48_Q:n", n, 0, 30);
    // (m, i) labeled 2m + i; (m, 0) < (k, 1) iff m > k.
    const int m = 2 * (n + 1);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b < a; ++b) rel.push_back({2 * a, 2 * b + 1});
    return from_rel(m, rel);
}

Example48P example48_P(int n) {
    need_range("example48_P:n", n, 0, 10);  // member count is 4 * 2^n - 3
    Example48P r{example48_Q(n), {}, {}};
    const int g = r.ground.size();
    for (int f = 0; f <= n; ++f)
        for (int ming = std::max(0, f - 1); ming <= f && ming <= n; ++ming) {
            // G = {ming} plus any subset of {ming+1 .. n}
            const int rest = n - ming;
            for (int mask = 0; mask < (1 << rest); ++mask) {
                Bits x(g);
                for (int m = f; m <= n; ++m) x.set(2 * m);
                x.set(2 * ming + 1);
                for (int t = 0; t < rest; ++t)
                    if (mask & (1 << t)) x.set(2 * (ming + 1 + t) + 1);
                r.members.push_back(x);
            }
        }
    std::sort(r.members.begin(), r.members.end(), set_order_less);
    r.lat = inclusion_semilattice(r.members);
    return r;
}

FinitePoset omega_plus_omegastar(int a, int b) {
    return direct_sum(chain(a), dual(chain(b)));
}

long long FamilySpec::get(const std::string& key, std::optional<long long> dflt) const {
    auto it = params.find(key);
    if (it == params.end()) {
        if (dflt) return *dflt;
        throw Error(Errc::BadSpec, family + " needs parameter " + key);
    }
    if (it->second.size() != 1)
        throw Error(Errc::BadSpec, family + ":" + key + " wants a single value");
    return it->second[0];
}

bool FamilySpec::get_flag(const std::string& key, bool dflt) const {
    long long v = get(key, dflt ? 1 : 0);
    if (v != 0 && v != 1) throw Error(Errc::BadSpec, family + ":" + key + " wants a boolean");
    return v == 1;
}

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    std::replace(spec.family.begin(), spec.family.end(), '-', '_');
    if (spec.family.empty()) throw Error(Errc::BadSpec, "empty family name");
    if (colon == std::string::npos) return spec;

    auto parse_value = [&](const std::string& tok) -> long long {
        if (tok == "true") return 1;
        if (tok == "false") return 0;
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw Error(Errc::BadSpec, "bad value '" + tok + "' in spec '" + text + "'");
        }
    };

    std::string rest = text.substr(colon + 1);
    std::string last_key;
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw Error(Errc::BadSpec, "empty token in spec '" + text + "'");
        auto eq = tok.find('=');
        if (eq != std::string::npos) {
            last_key = tok.substr(0, eq);
            if (last_key.empty())
                throw Error(Errc::BadSpec, "empty key in spec '" + text + "'");
            spec.params[last_key].push_back(parse_value(tok.substr(eq + 1)));
        } else if (!last_key.empty()) {
            spec.params[last_key].push_back(parse_value(tok));
        } else if (spec.params.empty()) {
            spec.params["n"].push_back(parse_value(tok));
            last_key = "n";
        } else {
            throw Error(Errc::BadSpec, "dangling token '" + tok + "' in spec '" + text + "'");
        }
    }
    return spec;
}

CatalogEntry make(const FamilySpec& spec) {
    const std::string& f = spec.family;
    CatalogEntry e;
    std::ostringstream canon;
    canon << f;
    if (f == "antichain" || f == "chain" || f == "boolean" || f == "l_alpha" ||
        f == "example48_Q" || f == "example48_P" || f == "omega_pairs") {
        long long n = spec.get("n");
        canon << ":n=" << n;
        if (f == "antichain") e.poset = antichain(int(n));
        else if (f == "chain") e.poset = chain(int(n));
        else if (f == "boolean") e.poset = boolean_lattice(int(n));
        else if (f == "l_alpha") e.poset = l_alpha(int(n));
        else if (f == "example48_Q") e.poset = example48_Q(int(n));
        else if (f == "example48_P") e.poset = example48_P(int(n)).lat.poset();
        else {
            bool bottom = spec.get_flag("bottom", false);
            e.poset = bottom ? omega_pairs_with_bottom(int(n)) : omega_pairs(int(n));
            if (bottom) canon << ",bottom=true";
        }
    } else if (f == "omega_pairs_with_bottom") {
        long long n = spec.get("n");
        canon.str("");
        canon << "omega_pairs:n=" << n << ",bottom=true";
        e.poset = omega_pairs_with_bottom(int(n));
    } else if (f == "sierp") {
        auto it = spec.params.find("perm");
        if (it == spec.params.end()) throw Error(Errc::BadSpec, "sierp needs perm=...");
        std::vector<int> perm(it->second.begin(), it->second.end());
        e.poset = sierp(perm);
        canon << ":perm=";
        for (std::size_t i = 0; i < perm.size(); ++i) canon << (i ? "," : "") << perm[i];
    } else if (f == "omega_plus_omegastar") {
        long long a = spec.get("a"), b = spec.get("b");
        e.poset = omega_plus_omegastar(int(a), int(b));
        canon << ":a=" << a << ",b=" << b;
    } else {
        throw Error(Errc::BadSpec, "unknown family '" + f + "'");
    }
    e.canonical_spec = canon.str();
    try {
        e.semi = JoinSemilattice::from_poset(e.poset);
    } catch (const Error& err) {
        if (err.code() != Errc::NoLub) throw;
    }
    return e;
}

} // namespace ord
