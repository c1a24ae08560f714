#include <doctest.h>

#include "selgames/constructions.hpp"
#include "selgames/duality.hpp"
#include "selgames/solver.hpp"

using namespace selgames;

TEST_CASE("dual_spec examples") {
    auto model = make_model(discrete_space(2));
    auto r = make_spec(GameKind::rothberger(), model, {}, 2);
    auto d = dual_spec(r, DualityPair::PointOpenRothberger);
    CHECK(d.kind == GameKind::point_open());
    CHECK(d.horizon == 2);
    REQUIRE(d.one_pool.size() == 2);
    CHECK(d.one_pool[0] == Move::point(0));
    CHECK(d.one_pool[1] == Move::point(1));
    CHECK(dual_spec(d, DualityPair::PointOpenRothberger).kind == r.kind);

    auto c3 = make_model(chain_space(3));
    auto co = make_spec(GameKind::compact_open(), c3, {}, 2);
    auto k = dual_spec(co, DualityPair::CompactOpenK);
    CHECK(k.kind == GameKind::g1(CoverClass::K, CoverClass::O));
    std::vector<Move> expected;
    for (const auto& c : minimal_k_covers(c3)) expected.push_back(Move::cover(c));
    CHECK(k.one_pool == expected);
    CHECK_THROWS_AS(dual_spec(co, DualityPair::MengerOstar), Error);
}

TEST_CASE("translate_easy examples") {
    auto model = make_model(discrete_space(2));
    auto po = make_spec(GameKind::point_open(), model, {}, 2);
    auto two = translate_easy(least_uncovered_point_strategy(), po);
    auto dual = dual_spec(po, DualityPair::PointOpenRothberger);
    CHECK(two.side() == Side::Two);
    CHECK(certify(dual, two).certified);
    po.horizon = 1;
    auto dual1 = dual_spec(po, DualityPair::PointOpenRothberger);
    CHECK_FALSE(certify(dual1, translate_easy(least_uncovered_point_strategy(), po)).certified);
}

TEST_CASE("translate_hard examples") {
    auto model = make_model(discrete_space(2));
    auto po = make_spec(GameKind::point_open(), model, {}, 1);
    CHECK(certify(po, minimal_open_strategy()).certified);
    auto one = translate_hard(minimal_open_strategy(), po);
    auto dual = dual_spec(po, DualityPair::PointOpenRothberger);
    PlayContext ctx{&dual, {}, nullptr, PointSet{}, 0};
    CHECK(one.choose(ctx) == Move::cover(CoverFamily{PointSet{0}, PointSet{1}}));
    CHECK(certify(dual, one).certified);

    auto c3 = make_model(chain_space(3));
    for (int h = 1; h <= 3; ++h) {
        auto co = make_spec(GameKind::compact_open(), c3, {}, h);
        const bool src = certify(co, minimal_open_strategy()).certified;
        auto kd = dual_spec(co, DualityPair::CompactOpenK);
        CHECK(certify(kd, translate_hard(minimal_open_strategy(), co)).certified == src);
    }
}

TEST_CASE("translate_hard witness map replays a legal source history") {
    auto model = random_model(4, 4, 3);
    auto co = make_spec(GameKind::compact_open(), model, {}, 3);
    auto tau = minimal_open_strategy();
    auto one = translate_hard(tau, co);
    auto dual = dual_spec(co, DualityPair::CompactOpenK);
    auto t = play(dual, one, countable_enumeration_strategy(model));
    std::vector<Inning> src;
    for (const auto& inn : t.innings) {
        auto w = hard_witness(tau, co, src, inn.two);
        REQUIRE(w);
        CHECK(is_legal_one_move(co, *w));
        CHECK(is_legal_two_move(co, *w, inn.two));
        src.push_back({*w, inn.two});
    }
}

TEST_CASE("menger_equivalence examples") {
    auto model = make_model(discrete_space(2));
    auto me = make_spec(GameKind::menger(), model, {Move::cover(CoverFamily{PointSet{0}, PointSet{1}})}, 1);
    auto both = make_rule_strategy(Side::Two, "both", Memory::Stationary, [](const PlayContext& ctx) {
        return Move::sublist(ctx.pending->members);
    });
    auto g = menger_equivalence(both, me);
    auto os = dual_spec(me, DualityPair::MengerOstar);
    Move v = os.one_pool.front();
    PlayContext ctx{&os, {}, &v, PointSet{}, 0};
    CHECK(g.choose(ctx) == Move::pick(PointSet{0, 1}));
    CHECK(minimal_sublist({PointSet{0}, PointSet{1}, PointSet{0, 1}}, PointSet{0, 1}) ==
          std::vector<PointSet>{PointSet{0, 1}});
    CHECK_FALSE(minimal_sublist({PointSet{0}, PointSet{1}}, PointSet{0, 2}));
}

TEST_CASE("property: winners flip across dual pairs and agree across the Menger bridge") {
    const GameKind sources[] = {GameKind::point_open(), GameKind::rothberger(), GameKind::compact_open(),
                                GameKind::g1(CoverClass::K, CoverClass::O), GameKind::compact_gdelta(),
                                GameKind::g1(CoverClass::Alster, CoverClass::Odelta), GameKind::menger()};
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto model = random_model(seed, 2 + static_cast<int>(seed % 3), 3);
        for (const auto& kind : sources) {
            for (int h = 1; h <= 3; ++h) {
                auto spec = make_spec(kind, model, {}, h);
                auto pair = *pair_of(kind);
                auto d = dual_spec(spec, pair);
                Side w = solve(spec).winner;
                Side wd = solve(d).winner;
                if (pair == DualityPair::MengerOstar)
                    CHECK(w == wd);
                else
                    CHECK(w != wd);
            }
        }
    }
}
