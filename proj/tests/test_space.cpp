#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "selgames/space.hpp"

using namespace selgames;

namespace {

FiniteSpace c3() { return from_subbasis(3, {PointSet{0}, PointSet{0, 1}}); }

std::vector<PointSet> sets(std::initializer_list<std::initializer_list<int>> l) {
    std::vector<PointSet> out;
    for (auto s : l) out.emplace_back(s);
    return out;
}

}  // namespace

TEST_CASE("from_subbasis examples") {
    CHECK(from_subbasis(2, sets({{0}, {1}})).opens() == sets({{}, {0}, {1}, {0, 1}}));
    CHECK(from_subbasis(3, sets({{0}, {0, 1}})).opens() == sets({{}, {0}, {0, 1}, {0, 1, 2}}));
    CHECK(from_subbasis(2, {}).opens() == sets({{}, {0, 1}}));
    CHECK_THROWS_AS(from_subbasis(2, sets({{2}})), RangeError);
}

TEST_CASE("FiniteSpace rejects broken opens and names the invariant") {
    CHECK_THROWS_WITH_AS(FiniteSpace(2, sets({{0, 1}})), doctest::Contains("empty set"), InvariantError);
    CHECK_THROWS_WITH_AS(FiniteSpace(2, sets({{}, {0}})), doctest::Contains("full point set"), InvariantError);
    CHECK_THROWS_WITH_AS(FiniteSpace(3, sets({{}, {0}, {1}, {0, 1, 2}})), doctest::Contains("union"),
                         InvariantError);
    CHECK_THROWS_WITH_AS(FiniteSpace(3, sets({{}, {0, 1}, {1, 2}, {0, 1, 2}})), doctest::Contains("intersection"),
                         InvariantError);
}

TEST_CASE("closure on the chain space") {
    const FiniteSpace s = c3();
    CHECK(closure(s, PointSet{0}) == PointSet{0, 1, 2});
    CHECK(closure(s, PointSet{1}) == PointSet{1, 2});
    CHECK(closure(s, PointSet{}) == PointSet{});
    CHECK(closure(discrete_space(3), PointSet{}) == PointSet{});
}

TEST_CASE("regularity") {
    CHECK(is_regular(discrete_space(2)));
    CHECK_FALSE(is_regular(c3()));
    CHECK(is_regular(indiscrete_space(2)));
}

TEST_CASE("Cantor-Bendixson derivative and scatteredness") {
    CHECK(cb_derivative(c3(), PointSet{0, 1, 2}) == PointSet{1, 2});
    CHECK(cb_derivative(indiscrete_space(2), PointSet{0, 1}) == PointSet{0, 1});
    CHECK(cb_derivative(c3(), PointSet{}) == PointSet{});
    auto c = is_scattered(c3());
    CHECK(c.scattered);
    CHECK(c.cb_rank == 3);
    CHECK_FALSE(is_scattered(indiscrete_space(2)).scattered);
    auto one = is_scattered(discrete_space(1));
    CHECK(one.scattered);
    CHECK(one.cb_rank == 1);
    CHECK(cb_point_ranks(c3()) == std::vector<int>{1, 2, 3});
}

TEST_CASE("random_model is deterministic and valid") {
    SpaceModel a = random_model(7, 3, 2);
    SpaceModel b = random_model(7, 3, 2);
    CHECK_NOTHROW(validate_model(a));
    CHECK(a.space.opens() == b.space.opens());
    CHECK(a.compact_pool == b.compact_pool);
    CHECK(a.small_ideal == b.small_ideal);
    for (int p = 0; p < 3; ++p)
        CHECK(std::find(a.compact_pool.begin(), a.compact_pool.end(), PointSet::singleton(p)) != a.compact_pool.end());
}

TEST_CASE("validate_model names the failing invariant") {
    SpaceModel m = make_model(discrete_space(2));
    m.compact_pool = {PointSet{0}};
    CHECK_THROWS_WITH_AS(validate_model(m), doctest::Contains("singleton"), InvariantError);
    m = make_model(discrete_space(2));
    m.small_ideal = sets({{}, {0}, {1}});
    CHECK_THROWS_WITH_AS(validate_model(m), doctest::Contains("union"), InvariantError);
    m.small_ideal = sets({{0}});
    CHECK_THROWS_AS(validate_model(m), InvariantError);
}

TEST_CASE("property: topology, closure and derivative agree with the definitions") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int k = static_cast<int>(rng() % 5);
        std::vector<PointSet> sub;
        for (int i = 0; i < k; ++i) sub.emplace_back(rng() & PointSet::full(n).bits());
        FiniteSpace sp = from_subbasis(n, sub);
        REQUIRE(sp.opens() == oracle::topology_from_subbasis(n, sub));
        CHECK(is_regular(sp) == oracle::regular(sp));
        std::size_t iterations = 0;
        PointSet cur = sp.points();
        while (!cur.empty() && iterations <= static_cast<std::size_t>(n)) {
            PointSet next = cb_derivative(sp, cur);
            if (next == cur) break;
            cur = next;
            ++iterations;
        }
        auto sc = is_scattered(sp);
        CHECK(sc.scattered == cur.empty());
        if (sc.scattered) CHECK(sc.cb_rank == static_cast<int>(iterations));
        CHECK(sc.cb_rank <= n);
        for (PointSet a : oracle::all_subsets(n)) {
            PointSet cl = closure(sp, a);
            CHECK(cl == oracle::closure(sp, a));
            CHECK(a.subset_of(cl));
            CHECK(closure(sp, cl) == cl);
            CHECK(cb_derivative(sp, a) == oracle::derivative(sp, a));
            CHECK(cb_derivative(sp, a).subset_of(a));
            PointSet b(rng() & PointSet::full(n).bits());
            CHECK(closure(sp, a | b) == (cl | closure(sp, b)));
            if (a.subset_of(b)) CHECK(cb_derivative(sp, a).subset_of(cb_derivative(sp, b)));
        }
        for (PointSet o : sp.opens()) CHECK(sp.interior(o) == o);
    }
}

TEST_CASE("property: Boolean-algebra topologies are regular") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        // A partition generates a topology whose opens form a Boolean algebra.
        std::vector<PointSet> blocks(n);
        for (int p = 0; p < n; ++p) blocks[rng() % n].insert(p);
        std::vector<PointSet> sub;
        for (PointSet b : blocks)
            if (!b.empty()) sub.push_back(b);
        CHECK(is_regular(from_subbasis(n, sub)));
    }
}
