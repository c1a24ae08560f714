#include <doctest.h>

#include "oracles.hpp"
#include "selgames/constructions.hpp"
#include "selgames/solver.hpp"

using namespace selgames;

namespace {

std::vector<GameKind> all_kinds() {
    return {GameKind::rothberger(),
            GameKind::menger(),
            GameKind::point_open(),
            GameKind::compact_open(),
            GameKind::compact_gdelta(),
            GameKind::g1(CoverClass::O, CoverClass::O),
            GameKind::g1(CoverClass::Ostar, CoverClass::O),
            GameKind::g1(CoverClass::K, CoverClass::O),
            GameKind::g1(CoverClass::Alster, CoverClass::Odelta)};
}

}  // namespace

TEST_CASE("solver examples") {
    auto model = make_model(discrete_space(2));
    Move c = Move::cover(CoverFamily{PointSet{0}, PointSet{1}});
    CHECK(solve(make_spec(GameKind::rothberger(), model, {c}, 1)).winner == Side::One);
    CHECK(solve(make_spec(GameKind::rothberger(), model, {c}, 2)).winner == Side::Two);
    CHECK(solve(make_spec(GameKind::point_open(), model, {}, 1)).winner == Side::Two);
    CHECK(solve(make_spec(GameKind::point_open(), model, {}, 2)).winner == Side::One);
}

TEST_CASE("sufficient_horizon") {
    CHECK(sufficient_horizon(make_spec(GameKind::rothberger(), make_model(discrete_space(3)), {}, 1)) == 3);
    CHECK(sufficient_horizon(make_spec(GameKind::rothberger(), make_model(discrete_space(1)), {}, 1)) == 1);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto model = random_model(seed, 3, 3);
        for (const auto& kind : all_kinds()) {
            auto a = make_spec(kind, model, {}, 3);
            auto b = make_spec(kind, model, {}, 4);
            CHECK(solve(a).winner == solve(b).winner);
        }
    }
}

TEST_CASE("property: solver agrees with plain minimax and its strategies certify") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto model = random_model(seed, 2 + static_cast<int>(seed % 3), 3);
        for (const auto& kind : all_kinds()) {
            auto pool = default_one_pool(kind, model);
            if (pool.size() > 5) pool.resize(5);
            for (int h = 1; h <= 3; ++h) {
                auto spec = make_spec(kind, model, pool, h);
                auto r = solve(spec);
                REQUIRE(r.winner == oracle::winner(spec));
                CHECK(r.strategy.side() == r.winner);
                CHECK(certify(spec, r.strategy).certified);
                CHECK(side_wins(spec, r.winner));
                CHECK_FALSE(side_wins(spec, opponent(r.winner)));
                CHECK(solve(spec, {10'000'000, false}).winner == r.winner);
                // The table answers every play it can meet.
                auto other_two = one_plays_covers(kind) ? countable_enumeration_strategy(model) : minimal_open_strategy();
                auto t = r.winner == Side::One ? play(spec, r.strategy, other_two)
                                               : play(spec, constant_strategy(spec.one_pool.back()), r.strategy);
                CHECK(judge(spec, t) == r.winner);
            }
        }
    }
}

TEST_CASE("property: the covering side keeps winning as the horizon grows") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto model = random_model(seed, 3, 3);
        for (const auto& kind : all_kinds()) {
            const Side cov = covering_side(kind);
            bool won = false;
            for (int h = 1; h <= 4; ++h) {
                bool w = solve(make_spec(kind, model, {}, h)).winner == cov;
                if (won) CHECK(w);
                won = won || w;
            }
        }
    }
}

TEST_CASE("solver budget") {
    auto spec = make_spec(GameKind::rothberger(), make_model(discrete_space(4)), {}, 3);
    CHECK_THROWS_AS(solve(spec, {5, true}), BudgetExceeded);
}
