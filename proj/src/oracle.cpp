#include "ordelab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "ordelab/error.hpp"

namespace ord {

std::uint64_t OraclePoset::join(std::uint64_t, std::uint64_t) const {
    throw Error(Errc::BadInput, name() + " has no joins");
}
bool OraclePoset::in_chain(int, std::uint64_t) const {
    throw Error(Errc::BadInput, name() + " has no ideal chain");
}
bool OraclePoset::in_chain_join(std::uint64_t, std::uint64_t, int) const {
    throw Error(Errc::BadInput, name() + " has no ideal chain");
}
bool OraclePoset::chain_subset_of_join(int, std::uint64_t, int) const {
    throw Error(Errc::BadInput, name() + " has no ideal chain");
}
bool OraclePoset::chain_subset_of_join_all(int, std::uint64_t, int) const {
    throw Error(Errc::BadInput, name() + " has no ideal chain");
}
bool OraclePoset::e_member(std::uint64_t) const {
    throw Error(Errc::BadInput, name() + " has no ideal chain");
}
std::optional<int> OraclePoset::e_witness(std::uint64_t) const { return std::nullopt; }

namespace {

std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

int mask_level(std::uint64_t m) { return m == 0 ? 0 : 63 - std::countl_zero(m); }

void sort_by_level(std::vector<std::uint64_t>& v, const OraclePoset& o) {
    std::sort(v.begin(), v.end(), [&](std::uint64_t a, std::uint64_t b) {
        int la = o.level(a), lb = o.level(b);
        if (la != lb) return la < lb;
        return a < b;
    });
}

// Finite subsets of omega as bit masks. Level is the largest member.
// Chain: I_n = finite subsets of {m >= n}.
class FinSets final : public OraclePoset {
public:
    std::string name() const override { return "fin_sets"; }
    bool leq(std::uint64_t a, std::uint64_t b) const override { return (a & ~b) == 0; }
    int level(std::uint64_t e) const override { return mask_level(e); }
    std::vector<std::uint64_t> elements_up_to(int d) const override {
        if (d < 0) return {};
        if (d > 20) throw Error(Errc::CapExceeded, "fin_sets slice is 2^(d+1) sets", {d, 20});
        std::vector<std::uint64_t> v(std::size_t(1) << (d + 1));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
        sort_by_level(v, *this);
        return v;
    }
    std::string describe(std::uint64_t e) const override {
        std::ostringstream s;
        s << '{';
        bool first = true;
        for (int i = 0; i < 64; ++i)
            if (e >> i & 1) {
                s << (first ? "" : ",") << i;
                first = false;
            }
        s << '}';
        return s.str();
    }
    bool has_join() const override { return true; }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const override { return a | b; }
    bool has_chain() const override { return true; }
    bool in_chain(int n, std::uint64_t e) const override { return (e & low_mask(n)) == 0; }
    bool in_chain_join(std::uint64_t e, std::uint64_t x, int m) const override {
        return ((e & ~x) & low_mask(m)) == 0;
    }
    bool chain_subset_of_join(int n, std::uint64_t x, int m) const override {
        if (m <= n) return true;
        if (m > 64) return false;  // {n..m-1} outruns any finite x
        std::uint64_t seg = low_mask(m) & ~low_mask(n);
        return (seg & ~x) == 0;
    }
    bool chain_subset_of_join_all(int, std::uint64_t, int) const override {
        return false;  // some m exceeds max(x)+1, and {n..m-1} <= x then fails
    }
    bool e_member(std::uint64_t) const override { return false; }
    std::optional<bool> e_empty() const override { return true; }
};

// The chain omega. No distinguished ideal chain.
class Omega final : public OraclePoset {
public:
    std::string name() const override { return "omega"; }
    bool leq(std::uint64_t a, std::uint64_t b) const override { return a <= b; }
    int level(std::uint64_t e) const override { return int(e); }
    std::vector<std::uint64_t> elements_up_to(int d) const override {
        std::vector<std::uint64_t> v;
        for (int i = 0; i <= d; ++i) v.push_back(i);
        return v;
    }
    std::string describe(std::uint64_t e) const override { return std::to_string(e); }
    bool has_join() const override { return true; }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const override { return std::max(a, b); }
};

// The chain omega*, code k for the k-th element from the top. Levels start
// at 1 so the depth-d slice is the top d elements. Chain: I_n = down(x_n).
class OmegaStar final : public OraclePoset {
public:
    std::string name() const override { return "omega_star"; }
    bool leq(std::uint64_t a, std::uint64_t b) const override { return a >= b; }
    int level(std::uint64_t e) const override { return int(e) + 1; }
    std::vector<std::uint64_t> elements_up_to(int d) const override {
        std::vector<std::uint64_t> v;
        for (int i = 0; i < d; ++i) v.push_back(i);
        return v;
    }
    std::string describe(std::uint64_t e) const override { return "x" + std::to_string(e); }
    bool has_join() const override { return true; }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const override { return std::min(a, b); }
    bool has_chain() const override { return true; }
    bool in_chain(int n, std::uint64_t e) const override { return e >= std::uint64_t(n); }
    bool in_chain_join(std::uint64_t e, std::uint64_t x, int m) const override {
        // {x_k} v I_m = I_min(k, m)
        return e >= std::min(x, std::uint64_t(m));
    }
    bool chain_subset_of_join(int n, std::uint64_t x, int m) const override {
        return std::uint64_t(n) >= std::min(x, std::uint64_t(m));
    }
    bool chain_subset_of_join_all(int n, std::uint64_t x, int) const override {
        return std::uint64_t(n) >= x;  // m beyond x forces min(x, m) = x
    }
    bool e_member(std::uint64_t) const override { return true; }
    std::optional<int> e_witness(std::uint64_t x) const override { return int(x) + 1; }
    std::optional<bool> e_empty() const override { return false; }
};

std::uint64_t pack(std::uint64_t i, std::uint64_t j) { return (i << 32) | j; }
std::uint64_t hi32(std::uint64_t e) { return e >> 32; }
std::uint64_t lo32(std::uint64_t e) { return e & 0xFFFFFFFFu; }

// Pairs (i, j), i < j, ordered by (i,j) <= (i',j') iff i' <= i and j <= j'.
// Level is j. Chain: I_n = { (i,j) : i >= n }.
class OmegaPairs final : public OraclePoset {
public:
    std::string name() const override { return "omega_pairs"; }
    bool leq(std::uint64_t a, std::uint64_t b) const override {
        return hi32(b) <= hi32(a) && lo32(a) <= lo32(b);
    }
    int level(std::uint64_t e) const override { return int(lo32(e)); }
    std::vector<std::uint64_t> elements_up_to(int d) const override {
        std::vector<std::uint64_t> v;
        for (int j = 1; j <= d; ++j)
            for (int i = 0; i < j; ++i) v.push_back(pack(i, j));
        return v;
    }
    std::string describe(std::uint64_t e) const override {
        return "(" + std::to_string(hi32(e)) + "," + std::to_string(lo32(e)) + ")";
    }
    bool has_join() const override { return true; }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const override {
        return pack(std::min(hi32(a), hi32(b)), std::max(lo32(a), lo32(b)));
    }
    bool has_chain() const override { return true; }
    bool in_chain(int n, std::uint64_t e) const override { return hi32(e) >= std::uint64_t(n); }
    bool in_chain_join(std::uint64_t e, std::uint64_t x, int m) const override {
        return hi32(e) >= std::min(hi32(x), std::uint64_t(m));
    }
    bool chain_subset_of_join(int n, std::uint64_t x, int m) const override {
        return std::uint64_t(n) >= std::min(hi32(x), std::uint64_t(m));
    }
    bool chain_subset_of_join_all(int n, std::uint64_t x, int) const override {
        return hi32(x) <= std::uint64_t(n);
    }
    bool e_member(std::uint64_t) const override { return false; }
    std::optional<bool> e_empty() const override { return true; }
};

// Members X(f, G) of Example 4.8: the final segment {m >= f} tagged 0 plus
// the finite set G tagged 1, with min G in {f-1, f}. Code packs f and the
// mask of G; level is max(f, max G). Chain: I_n = { X : (n,0) not in X },
// i.e. f >= n+1.
class Example48 final : public OraclePoset {
public:
    std::string name() const override { return "example48"; }
    bool leq(std::uint64_t a, std::uint64_t b) const override {
        return hi32(b) <= hi32(a) && (lo32(a) & ~lo32(b)) == 0;
    }
    int level(std::uint64_t e) const override {
        return std::max(int(hi32(e)), mask_level(lo32(e)));
    }
    std::vector<std::uint64_t> elements_up_to(int d) const override {
        if (d > 30) throw Error(Errc::CapExceeded, "example48 slice mask is 32-bit", {d, 30});
        std::vector<std::uint64_t> v;
        for (int f = 0; f <= d; ++f)
            for (int ming = std::max(0, f - 1); ming <= f && ming <= d; ++ming) {
                int rest = d - ming;
                for (std::uint64_t m = 0; m < (std::uint64_t(1) << rest); ++m) {
                    std::uint64_t g = (m << (ming + 1)) | (std::uint64_t(1) << ming);
                    v.push_back(pack(f, g));
                }
            }
        sort_by_level(v, *this);
        return v;
    }
    std::string describe(std::uint64_t e) const override {
        std::ostringstream s;
        s << "F>=" << hi32(e) << "|G=";
        std::uint64_t g = lo32(e);
        s << '{';
        bool first = true;
        for (int i = 0; i < 32; ++i)
            if (g >> i & 1) {
                s << (first ? "" : ",") << i;
                first = false;
            }
        s << '}';
        return s.str();
    }
    bool has_join() const override { return true; }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const override {
        return pack(std::min(hi32(a), hi32(b)), lo32(a) | lo32(b));
    }
    bool has_chain() const override { return true; }
    bool in_chain(int n, std::uint64_t e) const override {
        return hi32(e) >= std::uint64_t(n) + 1;
    }
    bool in_chain_join(std::uint64_t e, std::uint64_t x, int m) const override {
        // Witness chain member: X(m+1, (eG \ xG) u {m}).
        return hi32(e) >= std::min(hi32(x), std::uint64_t(m) + 1) &&
               ((lo32(e) & ~lo32(x)) & low_mask(m)) == 0;
    }
    bool chain_subset_of_join(int n, std::uint64_t x, int m) const override {
        if (m <= n) return true;
        if (hi32(x) > std::uint64_t(n) + 1) return false;
        if (m > 32) return false;
        std::uint64_t seg = low_mask(m) & ~low_mask(n);
        return (seg & ~lo32(x)) == 0;  // {n..m-1} <= G
    }
    bool chain_subset_of_join_all(int, std::uint64_t, int) const override {
        return false;  // G is finite, large m always escapes
    }
    bool e_member(std::uint64_t) const override { return false; }
    std::optional<bool> e_empty() const override { return true; }
};

// omega (+) omega*: a_m coded 2m (ascending part), b_m coded 2m+1
// (descending part, b_0 on top). Parts are incomparable; no joins.
class Remark414Ground final : public OraclePoset {
public:
    std::string name() const override { return "remark414"; }
    bool leq(std::uint64_t a, std::uint64_t b) const override {
        if ((a & 1) != (b & 1)) return a == b;
        return (a & 1) ? a >= b : a <= b;
    }
    int level(std::uint64_t e) const override { return int(e >> 1); }
    std::vector<std::uint64_t> elements_up_to(int d) const override {
        std::vector<std::uint64_t> v;
        for (int m = 0; m <= d; ++m) {
            v.push_back(2 * std::uint64_t(m));
            v.push_back(2 * std::uint64_t(m) + 1);
        }
        return v;
    }
    std::string describe(std::uint64_t e) const override {
        return ((e & 1) ? "b" : "a") + std::to_string(e >> 1);
    }
};

// F_i = image of the pair (i, i+1): the tail {b_m : m >= i} plus the head
// {a_m : m <= i}. Maxima are a_i and b_i; distinct F_i are incomparable.
class Remark414Family final : public FamilyOracle {
public:
    std::string name() const override { return "remark414"; }
    const OraclePoset& ground() const override { return ground_; }
    bool member(int i, std::uint64_t e) const override {
        return (e & 1) ? (e >> 1) >= std::uint64_t(i) : (e >> 1) <= std::uint64_t(i);
    }
    bool subset(int i, int j) const override { return i == j; }
    std::vector<std::uint64_t> maxima(int i) const override {
        return {2 * std::uint64_t(i), 2 * std::uint64_t(i) + 1};
    }

private:
    Remark414Ground ground_;
};

} // namespace

std::unique_ptr<OraclePoset> oracle(const FamilySpec& spec) {
    const std::string& f = spec.family;
    if (f == "fin_sets") return std::make_unique<FinSets>();
    if (f == "omega") return std::make_unique<Omega>();
    if (f == "omega_star") return std::make_unique<OmegaStar>();
    if (f == "omega_pairs") return std::make_unique<OmegaPairs>();
    if (f == "example48") return std::make_unique<Example48>();
    if (f == "remark414") return std::make_unique<Remark414Ground>();
    throw Error(Errc::BadSpec, "unknown oracle family '" + f + "'");
}

std::unique_ptr<FamilyOracle> family_oracle(const FamilySpec& spec) {
    if (spec.family == "remark414") return std::make_unique<Remark414Family>();
    throw Error(Errc::BadSpec, "no family oracle for '" + spec.family + "'");
}

TruncationResult truncate(const OraclePoset& o, int d) {
    if (d < 0) throw Error(Errc::BadSpec, "negative truncation depth", {d});
    TruncationResult r;
    r.codes = o.elements_up_to(d);
    const int n = int(r.codes.size());
    if (n > JoinSemilattice::table_cap)
        throw Error(Errc::CapExceeded, "truncation larger than the join table cap",
                    {n, JoinSemilattice::table_cap});
    std::unordered_map<std::uint64_t, int> index;
    for (int i = 0; i < n; ++i) index[r.codes[i]] = i;
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (o.leq(r.codes[i], r.codes[j])) up[i].set(j);
    r.entry.poset = FinitePoset::from_up_sets(std::move(up));
    r.entry.canonical_spec = o.name() + ":depth=" + std::to_string(d);
    if (o.has_join()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (!index.count(o.join(r.codes[i], r.codes[j])))
                    throw Error(Errc::TruncationNotJoinClosed,
                                "join of slice members leaves the slice", {i, j});
        r.entry.semi = JoinSemilattice::from_poset(r.entry.poset);
    }
    return r;
}

DescentFixture remark414_descent_fixture(int m, int depth) {
    if (m < 1 || depth < m + 2)
        throw Error(Errc::BadInput, "descent fixture needs m >= 1 and depth >= m + 2",
                    {m, depth});
    Remark414Ground g;
    auto tr = truncate(g, depth);
    const int n = int(tr.codes.size());
    std::unordered_map<std::uint64_t, int> index;
    for (int i = 0; i < n; ++i) index[tr.codes[i]] = i;
    DescentFixture fx;
    fx.q = tr.entry.poset;
    for (auto c : tr.codes) fx.labels.push_back(g.describe(c));
    // Chain member n: union of the images of pairs (i, j) with i >= n+1,
    // i.e. the b-tail from n+1 down plus every a. Witness x_n: the image of
    // (n, n+1) itself.
    for (int k = 0; k <= m; ++k) {
        Bits ideal(n), x(n);
        for (int t = 0; t <= depth; ++t) {
            ideal.set(index[2 * std::uint64_t(t)]);
            if (t >= k + 1) ideal.set(index[2 * std::uint64_t(t) + 1]);
            if (t <= k) x.set(index[2 * std::uint64_t(t)]);
            if (t >= k) x.set(index[2 * std::uint64_t(t) + 1]);
        }
        fx.chain.push_back(ideal);
        fx.xs.push_back(x);
    }
    return fx;
}

} // namespace ord
