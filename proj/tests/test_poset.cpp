#include "doctest.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "ordelab/catalog.hpp"
#include "ordelab/poset.hpp"

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

} // namespace

TEST_CASE("from_pairs closes reflexively but validates transitivity") {
    auto p = FinitePoset::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.size() == 3);
    CHECK(p.leq(0, 0));
    CHECK(p.leq(0, 2));
    CHECK(!p.leq(2, 0));
    CHECK(p.lt(0, 1));
    CHECK(!p.lt(1, 1));

    CHECK(code_of([] { FinitePoset::from_pairs(3, {{0, 1}, {1, 2}}); }) == Errc::NotTransitive);
    CHECK(code_of([] { FinitePoset::from_pairs(2, {{0, 1}, {1, 0}}); }) == Errc::NotAntisymmetric);
}

TEST_CASE("from_up_sets validates shape") {
    std::vector<Bits> up(2, Bits(2));
    up[0].set(0);
    up[0].set(1);
    CHECK(code_of([&] { FinitePoset::from_up_sets(up); }) == Errc::NotReflexive);
    up[1].set(1);
    auto p = FinitePoset::from_up_sets(up);
    CHECK(p.down(1).count() == 2);
    CHECK(p.up(1).count() == 1);
}

TEST_CASE("invariants of chains and cubes") {
    auto inv = invariants(chain(4));
    CHECK(inv.height == 4);
    CHECK(inv.width == 1);
    CHECK(inv.covers.size() == 3);
    CHECK(inv.level == std::vector<int>{0, 1, 2, 3});

    auto cube = invariants(boolean_lattice(3));
    CHECK(cube.height == 4);
    CHECK(cube.width == 3);
    CHECK(cube.covers.size() == 12);
    for (int x = 0; x < 8; ++x) CHECK(cube.level[x] == std::popcount(unsigned(x)));
    CHECK(poset_width(boolean_lattice(4)) == 6);
}

TEST_CASE("cover pairs are the transitive reduction") {
    auto covers = cover_pairs(boolean_lattice(2));
    std::set<std::pair<int, int>> got(
        [&] {
            std::set<std::pair<int, int>> s;
            for (auto c : covers) s.insert({c.lower, c.upper});
            return s;
        }());
    std::set<std::pair<int, int>> want{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    CHECK(got == want);
}

TEST_CASE("minimal and maximal elements of subsets") {
    auto p = boolean_lattice(2);
    Bits all = Bits::full(4);
    CHECK(minimal_elements(p, all) == Bits::single(4, 0));
    CHECK(maximal_elements(p, all) == Bits::single(4, 3));
    Bits atoms(4);
    atoms.set(1);
    atoms.set(2);
    CHECK(minimal_elements(p, atoms) == atoms);
    CHECK(maximal_elements(p, atoms) == atoms);
}

TEST_CASE("down-set predicates and closures") {
    auto p = boolean_lattice(2);
    Bits a(4);
    a.set(1);
    CHECK(!is_down_set(p, a));
    Bits closed = down_closure(p, a);
    CHECK(is_down_set(p, closed));
    CHECK(closed.count() == 2);
    CHECK(up_closure(p, a).count() == 2);

    Bits v(4);
    v.set(0);
    v.set(1);
    v.set(2);
    CHECK(is_down_set(p, v));
    CHECK(!is_directed(p, v));
    CHECK(!is_ideal(p, v));
    CHECK(is_ideal(p, p.down(3)));
    CHECK(!is_ideal(p, Bits(4)));
}

TEST_CASE("down-set enumeration counts") {
    CHECK(enumerate_down_sets(chain(4)).size() == 5);
    CHECK(enumerate_down_sets(antichain(4)).size() == 16);
    CHECK(enumerate_down_sets(boolean_lattice(2)).size() == 6);
    CHECK(code_of([] { enumerate_down_sets(antichain(8), 100); }) == Errc::CapExceeded);
}

TEST_CASE("linear extension respects the order") {
    auto p = boolean_lattice(3);
    auto ext = linear_extension(p);
    REQUIRE(ext.size() == 8);
    std::vector<int> position(8);
    for (int i = 0; i < 8; ++i) position[ext[i]] = i;
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            if (p.lt(x, y)) CHECK(position[x] < position[y]);
}

TEST_CASE("poset constructions compose") {
    auto d = dual(chain(3));
    CHECK(d.leq(2, 0));
    CHECK(!d.leq(0, 2));

    auto s = direct_sum(chain(2), chain(3));
    CHECK(s.size() == 5);
    CHECK(s.leq(0, 1));
    CHECK(!s.leq(0, 2));
    CHECK(!s.leq(2, 0));

    auto o = ordinal_sum(antichain(2), antichain(2));
    CHECK(o.leq(0, 2));
    CHECK(o.leq(1, 3));
    CHECK(!o.leq(2, 3));

    auto pr = product(chain(2), chain(2));
    CHECK(pr.size() == 4);
    CHECK(iso(pr, boolean_lattice(2)).has_value());

    std::vector<int> old_labels;
    auto ind = induced(boolean_lattice(2), Bits::full(4) - Bits::single(4, 3), &old_labels);
    CHECK(ind.size() == 3);
    CHECK(old_labels == std::vector<int>{0, 1, 2});
    CHECK(iso(ind, ordinal_sum(chain(1), antichain(2))).has_value());
}

TEST_CASE("iso finds bijections exactly when they exist") {
    auto a = FinitePoset::from_pairs(3, {{2, 1}, {1, 0}, {2, 0}});
    auto m = iso(a, chain(3));
    REQUIRE(m.has_value());
    CHECK((*m)[2] == 0);
    CHECK((*m)[0] == 2);
    CHECK(!iso(chain(3), antichain(3)).has_value());
    CHECK(!iso(chain(3), chain(4)).has_value());
}

TEST_CASE("canonical keys classify up to isomorphism") {
    auto a = FinitePoset::from_pairs(3, {{2, 1}, {1, 0}, {2, 0}});
    CHECK(canonical_key(a) == canonical_key(chain(3)));
    CHECK(canonical_key(chain(3)) != canonical_key(antichain(3)));
    CHECK(canonical_key(product(chain(2), chain(2))) == canonical_key(boolean_lattice(2)));
}

TEST_CASE("poset enumeration matches the known census") {
    std::vector<std::size_t> want{1, 1, 2, 5, 16, 63};
    for (int n = 0; n < int(want.size()); ++n) CHECK(enumerate_posets(n).size() == want[n]);
    CHECK(code_of([] { enumerate_posets(9); }) == Errc::CapExceeded);
}

TEST_CASE("enumeration returns canonical representatives without repeats") {
    auto all = enumerate_posets(4);
    std::set<std::vector<std::uint8_t>> keys;
    for (const auto& p : all) {
        CHECK(p.size() == 4);
        keys.insert(canonical_key(p));
    }
    CHECK(keys.size() == all.size());
}
