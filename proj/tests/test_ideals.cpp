#include "doctest.h"

#include <bit>
#include <functional>

#include "ordelab/catalog.hpp"
#include "ordelab/ideals.hpp"

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

Bits of(int n, std::initializer_list<int> xs) {
    Bits b(n);
    for (int x : xs) b.set(x);
    return b;
}

} // namespace

TEST_CASE("set_order_less sorts by cardinality then value") {
    CHECK(set_order_less(of(3, {0}), of(3, {0, 1})));
    CHECK(set_order_less(of(3, {2}), of(3, {0, 1})));
    CHECK(set_order_less(of(3, {0}), of(3, {1})));
    CHECK(!set_order_less(of(3, {1}), of(3, {1})));
}

TEST_CASE("inclusion_semilattice orders member sets") {
    auto l = inclusion_semilattice({of(2, {0}), of(2, {0, 1})});
    CHECK(l.size() == 2);
    CHECK(l.leq(0, 1));
    CHECK(code_of([] { inclusion_semilattice({of(2, {0}), of(2, {1})}); }) == Errc::NoLub);
}

TEST_CASE("initial segment lattices have the expected shape") {
    CHECK(initial_segment_lattice(chain(4)).members.size() == 5);
    CHECK(initial_segment_lattice(antichain(3)).members.size() == 8);

    auto dl = initial_segment_lattice(boolean_lattice(2));
    REQUIRE(dl.members.size() == 6);
    for (std::size_t i = 0; i + 1 < dl.members.size(); ++i)
        CHECK(set_order_less(dl.members[i], dl.members[i + 1]));
    for (int i = 0; i < dl.lat.size(); ++i) {
        CHECK(is_down_set(boolean_lattice(2), dl.members[i]));
        for (int j = 0; j < dl.lat.size(); ++j) {
            CHECK(dl.lat.leq(i, j) == dl.members[i].subset_of(dl.members[j]));
            CHECK(dl.members[dl.lat.join(i, j)] == (dl.members[i] | dl.members[j]));
        }
    }
    CHECK(dl.index_of(of(4, {0, 1})) >= 0);
    CHECK(dl.index_of(of(4, {1})) == -1);

    CHECK(code_of([] { initial_segment_lattice(antichain(6), 10); }) == Errc::CapExceeded);
}

TEST_CASE("ideals of a finite poset are its principal down-sets") {
    auto p = boolean_lattice(2);
    auto jl = ideal_lattice(p);
    REQUIRE(jl.members.size() == 4);
    for (const Bits& m : jl.members) CHECK(is_ideal(p, m));
    auto m = iso(jl.lat.poset(), p);
    CHECK(m.has_value());
}

TEST_CASE("x_plus is the meet of strict upper bounds") {
    auto c = JoinSemilattice::from_poset(chain(3));
    CHECK(x_plus(c, 0) == 1);
    CHECK(x_plus(c, 1) == 2);
    CHECK(x_plus(c, 2) == 2);

    auto cube = JoinSemilattice::from_poset(boolean_lattice(3));
    CHECK(x_plus(cube, 0) == 0);
    CHECK(x_plus(cube, 1) == 1);
    CHECK(x_plus(cube, 3) == 7);
    CHECK(x_plus(cube, 7) == 7);

    Bits coatoms(8);
    coatoms.set(3);
    coatoms.set(5);
    coatoms.set(6);
    CHECK(delta(cube) == coatoms);

    Bits below_top = Bits::full(3) - Bits::single(3, 2);
    CHECK(delta(c) == below_top);
}

TEST_CASE("cover_by_ideals is the minimum ideal cover of a complement") {
    auto p = boolean_lattice(2);
    auto cover = cover_by_ideals(p, 1);
    REQUIRE(cover.size() == 1);
    CHECK(cover[0] == of(4, {0, 2}));

    auto cover_top = cover_by_ideals(p, 3);
    REQUIRE(cover_top.size() == 2);
    Bits joined(4);
    for (const Bits& c : cover_top) {
        CHECK(is_ideal(p, c));
        joined |= c;
    }
    CHECK(joined == of(4, {0, 1, 2}));

    CHECK(code_of([&] { cover_by_ideals(p, 0); }) == Errc::EmptyComplement);
}

TEST_CASE("phi_q embeds exactly when the selection separates") {
    auto p = boolean_lattice(2);
    std::vector<Bits> q;
    for (int x = 0; x < 4; ++x) q.push_back(p.down(x));
    auto rep = phi_q(p, q);
    CHECK(rep.initial_segments);
    CHECK(rep.order_preserving);
    CHECK(rep.embedding);
    CHECK(!rep.violation.has_value());

    auto starved = phi_q(antichain(2), {});
    CHECK(!starved.embedding);
    REQUIRE(starved.violation.has_value());
    CHECK(starved.violation->first == 0);
    CHECK(starved.violation->second == 1);
}

TEST_CASE("phi_delta separates every finite join-semilattice") {
    auto cube = JoinSemilattice::from_poset(boolean_lattice(3));
    auto pd = phi_delta(cube);
    REQUIRE(pd.q_members.size() == 3);
    CHECK(pd.injective);
    CHECK(pd.join_preserving);
    for (int x = 0; x < 8; ++x) CHECK(pd.image[x].count() == std::popcount(unsigned(x)));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            CHECK(pd.image[cube.join(x, y)] == (pd.image[x] | pd.image[y]));

    auto pairs = phi_delta(JoinSemilattice::from_poset(omega_pairs(4)));
    CHECK(pairs.injective);
    CHECK(pairs.join_preserving);
}

TEST_CASE("family closures certify the union isomorphism") {
    auto fc = family_closures(antichain(2), {of(2, {0}), of(2, {1})});
    CHECK(fc.closure.members.size() == 3);
    CHECK(fc.union_iso);
    CHECK(fc.f_not_x[0] == Bits::single(3, fc.closure.index_of(of(2, {1}))));
    CHECK(fc.f_not_x[1] == Bits::single(3, fc.closure.index_of(of(2, {0}))));
    REQUIRE(fc.delta_ideals.size() == 2);
    CHECK(fc.delta_from_complements);
    CHECK(!fc.delta_witness.has_value());

    auto fat = family_closures(boolean_lattice(2),
                               {of(4, {0, 1}), of(4, {0, 2}), Bits::full(4)});
    CHECK(fat.closure.members.size() == 4);
    CHECK(fat.union_iso);
    CHECK(fat.delta_from_complements);

    CHECK(code_of([] { family_closures(chain(2), {}); }) == Errc::BadInput);
    CHECK(code_of([] { family_closures(chain(2), {of(2, {1})}); }) == Errc::BadInput);
}

TEST_CASE("heights count strictly ascending chains") {
    auto p = boolean_lattice(3);
    auto h = element_heights(p);
    for (int x = 0; x < 8; ++x) CHECK(h[x] == std::popcount(unsigned(x)));
    CHECK(lattice_height(p) == 4);
    CHECK(lattice_height(chain(5)) == 5);
    CHECK(code_of([] { lattice_height(antichain(2)); }) == Errc::NoTop);
}
