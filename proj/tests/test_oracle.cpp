#include "doctest.h"

#include <functional>

#include "ordelab/oracle.hpp"

using namespace ord;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an ord::Error");
    return Errc::BadInput;
}

std::unique_ptr<OraclePoset> get(const std::string& family) {
    return oracle(parse_family_spec(family));
}

// Brute-forces the ideal-chain queries on a slice deep enough to hold every
// potential witness or refuter for the probed parameters, and compares with
// the closed forms.
void cross_check_chain(const OraclePoset& o, int d, int deep) {
    auto small = o.elements_up_to(d);
    auto big = o.elements_up_to(deep);

    for (int n = 0; n + 1 <= deep; ++n)
        for (auto e : big) {
            if (o.in_chain(n + 1, e)) CHECK(o.in_chain(n, e));
            for (auto e2 : big)
                if (o.leq(e2, e) && o.in_chain(n, e)) CHECK(o.in_chain(n, e2));
        }

    for (auto e : small)
        for (auto x : small)
            for (int m = 0; m <= d; ++m) {
                bool brute = false;
                for (auto i : big)
                    if (o.in_chain(m, i) && o.leq(e, o.join(x, i))) {
                        brute = true;
                        break;
                    }
                CHECK(o.in_chain_join(e, x, m) == brute);
            }

    for (int n = 0; n <= d; ++n)
        for (auto x : small)
            for (int m = 0; m <= d; ++m) {
                bool brute = true;
                for (auto e : big)
                    if (o.in_chain(n, e) && !o.in_chain_join(e, x, m)) {
                        brute = false;
                        break;
                    }
                CHECK(o.chain_subset_of_join(n, x, m) == brute);
                if (o.chain_subset_of_join_all(n, x, m)) CHECK(brute);
            }
}

} // namespace

TEST_CASE("oracle dispatch") {
    for (const char* f : {"fin_sets", "omega", "omega_star", "omega_pairs", "example48",
                          "remark414"})
        CHECK(get(f)->name() == f);
    CHECK(code_of([] { get("boolean"); }) == Errc::BadSpec);
    CHECK(code_of([] { family_oracle(parse_family_spec("fin_sets")); }) == Errc::BadSpec);
}

TEST_CASE("slices are deterministic and level-sorted") {
    for (const char* f : {"fin_sets", "omega", "omega_star", "omega_pairs", "example48",
                          "remark414"}) {
        auto o = get(f);
        auto v = o->elements_up_to(4);
        CHECK(!v.empty());
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            int la = o->level(v[i]), lb = o->level(v[i + 1]);
            CHECK((la < lb || (la == lb && v[i] < v[i + 1])));
        }
        for (auto e : v) CHECK(o->level(e) <= 4);
        CHECK(o->elements_up_to(4) == v);
    }
}

TEST_CASE("fin_sets models finite subsets under inclusion") {
    auto o = get("fin_sets");
    CHECK(o->leq(0b101, 0b111));
    CHECK(!o->leq(0b101, 0b110));
    CHECK(o->join(0b101, 0b010) == 0b111);
    CHECK(o->level(0) == 0);
    CHECK(o->level(0b1) == 0);
    CHECK(o->level(0b100) == 2);
    CHECK(o->describe(0b101) == "{0,2}");
    CHECK(o->elements_up_to(2).size() == 8);
    CHECK(code_of([&] { o->elements_up_to(40); }) == Errc::CapExceeded);

    CHECK(o->in_chain(2, 0b100));
    CHECK(!o->in_chain(2, 0b010));
    CHECK(o->e_empty() == std::optional<bool>(true));
    CHECK(!o->e_member(0b1));
}

TEST_CASE("fin_sets chain queries match brute force") {
    cross_check_chain(*get("fin_sets"), 3, 5);
}

TEST_CASE("omega and omega_star are the two linear oracles") {
    auto w = get("omega");
    CHECK(w->leq(2, 5));
    CHECK(!w->leq(5, 2));
    CHECK(w->join(2, 5) == 5);
    CHECK(!w->has_chain());
    CHECK(code_of([&] { w->in_chain(0, 0); }) == Errc::BadInput);

    auto ws = get("omega_star");
    CHECK(ws->leq(5, 2));
    CHECK(!ws->leq(2, 5));
    CHECK(ws->join(2, 5) == 2);
    CHECK(ws->level(0) == 1);
    CHECK(ws->elements_up_to(3).size() == 3);
    CHECK(ws->has_chain());
    CHECK(ws->e_empty() == std::optional<bool>(false));
    CHECK(ws->e_member(4));
    CHECK(ws->e_witness(4) == std::optional<int>(5));
}

TEST_CASE("omega_star chain queries match brute force") {
    cross_check_chain(*get("omega_star"), 4, 8);
}

TEST_CASE("omega_pairs chain queries match brute force") {
    auto o = get("omega_pairs");
    CHECK(o->describe(o->elements_up_to(1).at(0)) == "(0,1)");
    auto slice = o->elements_up_to(3);
    CHECK(slice.size() == 6);
    cross_check_chain(*o, 4, 8);
}

TEST_CASE("example48 members join by part") {
    auto o = get("example48");
    auto slice = o->elements_up_to(3);
    CHECK(slice.size() == 29);
    for (auto a : slice) {
        CHECK(o->leq(a, a));
        for (auto b : slice) {
            auto j = o->join(a, b);
            CHECK(o->leq(a, j));
            CHECK(o->leq(b, j));
        }
    }
    cross_check_chain(*o, 3, 6);
}

TEST_CASE("truncations materialize join-closed slices") {
    auto tr = truncate(*get("fin_sets"), 3);
    CHECK(tr.entry.poset.size() == 16);
    REQUIRE(tr.entry.semi.has_value());
    CHECK(tr.entry.semi->is_lattice());
    CHECK(tr.entry.canonical_spec == "fin_sets:depth=3");
    for (std::size_t i = 0; i < tr.codes.size(); ++i)
        for (std::size_t j = 0; j < tr.codes.size(); ++j)
            CHECK(tr.entry.poset.leq(int(i), int(j)) ==
                  ((tr.codes[i] & ~tr.codes[j]) == 0));

    auto ground = truncate(*get("remark414"), 3);
    CHECK(ground.entry.poset.size() == 8);
    CHECK(!ground.entry.semi.has_value());

    CHECK(code_of([] { truncate(*get("omega"), -1); }) == Errc::BadSpec);
}

namespace {

// Two incomparable elements whose join lies one level deeper than both, so
// shallow slices are not join-closed.
class OpenJoins final : public OraclePoset {
public:
    std::string name() const override { return "open_joins"; }
    bool leq(std::uint64_t a, std::uint64_t b) const override { return a == b || b == 2; }
    int level(std::uint64_t e) const override { return e == 2 ? 1 : 0; }
    std::vector<std::uint64_t> elements_up_to(int d) const override {
        return d >= 1 ? std::vector<std::uint64_t>{0, 1, 2} : std::vector<std::uint64_t>{0, 1};
    }
    std::string describe(std::uint64_t e) const override { return std::to_string(e); }
    bool has_join() const override { return true; }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const override {
        return a == b ? a : 2;
    }
};

} // namespace

TEST_CASE("truncation validates join closure") {
    OpenJoins o;
    CHECK(truncate(o, 1).entry.poset.size() == 3);
    CHECK(code_of([&] { truncate(o, 0); }) == Errc::TruncationNotJoinClosed);
}

TEST_CASE("remark414 ground and family") {
    auto g = get("remark414");
    CHECK(g->describe(0) == "a0");
    CHECK(g->describe(1) == "b0");
    CHECK(g->leq(0, 4));
    CHECK(g->leq(5, 1));
    CHECK(!g->leq(0, 1));
    CHECK(!g->leq(1, 0));

    auto fam = family_oracle(parse_family_spec("remark414"));
    CHECK(fam->name() == "remark414");
    CHECK(fam->maxima(2) == std::vector<std::uint64_t>{4, 5});
    CHECK(fam->member(2, 0));
    CHECK(fam->member(2, 4));
    CHECK(!fam->member(2, 6));
    CHECK(fam->member(2, 5));
    CHECK(fam->member(2, 7));
    CHECK(!fam->member(2, 3));
    CHECK(fam->subset(2, 2));
    CHECK(!fam->subset(1, 2));
}

TEST_CASE("descent fixture carries the chain and witnesses") {
    auto fx = remark414_descent_fixture(2, 5);
    CHECK(fx.q.size() == 12);
    CHECK(fx.labels.size() == 12);
    CHECK(fx.labels[0] == "a0");
    REQUIRE(fx.chain.size() == 3);
    REQUIRE(fx.xs.size() == 3);
    for (std::size_t n = 0; n < fx.chain.size(); ++n) {
        CHECK(is_down_set(fx.q, fx.chain[n]));
        CHECK(is_down_set(fx.q, fx.xs[n]));
        if (n > 0) {
            CHECK(fx.chain[n].subset_of(fx.chain[n - 1]));
            CHECK(fx.chain[n] != fx.chain[n - 1]);
        }
    }
    CHECK(code_of([] { remark414_descent_fixture(3, 4); }) == Errc::BadInput);
    CHECK(code_of([] { remark414_descent_fixture(0, 9); }) == Errc::BadInput);
}
