#include <doctest.h>

#include "selgames/constructions.hpp"
#include "selgames/duality.hpp"
#include "selgames/io.hpp"

using namespace selgames;
using io::json;

TEST_CASE("space files round-trip and reject invariant violations") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto m = random_model(seed, 1 + static_cast<int>(seed % 5), 3);
        auto back = io::model_from_json(io::model_to_json(m));
        CHECK(back.space.opens() == m.space.opens());
        CHECK(back.compact_pool == m.compact_pool);
        CHECK(back.small_ideal == m.small_ideal);
    }
    json ok = {{"point_count", 2}, {"opens", {json::array(), {0}, {0, 1}}}, {"label", "s"}};
    CHECK(io::model_from_json(ok).space.opens().size() == 3);

    auto rejects = [](json j, const char* needle) {
        CHECK_THROWS_WITH(io::model_from_json(j), doctest::Contains(needle));
    };
    json no_empty = ok;
    no_empty["opens"] = {{0}, {0, 1}};
    rejects(no_empty, "invariant");
    json unsorted = ok;
    unsorted["opens"] = {json::array(), {1, 0}};
    rejects(unsorted, "sorted");
    json outside = ok;
    outside["opens"] = {json::array(), {0, 2}, {0, 1}};
    rejects(outside, "outside the point set");
    json not_closed = {{"point_count", 3}, {"opens", {json::array(), {0, 1}, {1, 2}, {0, 1, 2}}}};
    rejects(not_closed, "intersection");
    json bad_pool = ok;
    bad_pool["compact_pool"] = {{0, 5}};
    rejects(bad_pool, "outside");
    CHECK_THROWS_AS(io::model_from_json(json{{"opens", json::array()}}), io::ParseError);
}

TEST_CASE("cover files and classify output") {
    json s = {{"point_count", 2}, {"opens", {json::array(), {0}, {1}, {0, 1}}}};
    auto m = io::model_from_json(s);
    auto c = io::cover_from_json(json{{"elements", {{0}, {1}}}}, 2);
    REQUIRE(std::holds_alternative<CoverFamily>(c));
    CHECK(io::class_set_to_json(classify(m, std::get<CoverFamily>(c))) == json({"K", "O", "R"}));

    GdeltaCover g({GdeltaPresentedSet::of({PointSet{0}, PointSet{0, 1}}), GdeltaPresentedSet::of({PointSet{1}})});
    auto back = io::cover_from_json(io::cover_to_json(g), 2);
    REQUIRE(std::holds_alternative<GdeltaCover>(back));
    CHECK(std::get<GdeltaCover>(back) == g);
    CHECK_THROWS_WITH(io::cover_from_json(json{{"elements", {{0}}}, {"factors", {{{0, 1}}}}}, 2),
                      doctest::Contains("intersection of its factors"));
}

TEST_CASE("game files, solve results and table strategies") {
    json g = {{"kind", "Rothberger"}, {"space_ref", "catalog:discrete(2)"}, {"horizon", 1}};
    auto spec = io::spec_from_json(g);
    auto r = solve(spec);
    CHECK(r.winner == Side::One);
    auto rj = io::solve_result_to_json(r, "s.json");
    CHECK(rj["winner"] == "One");
    CHECK(rj["stats"].contains("states_expanded"));

    auto again = io::spec_from_json(io::spec_to_json(spec, "catalog:discrete(2)"));
    CHECK(again.one_pool == spec.one_pool);
    CHECK(again.kind == spec.kind);

    json g1 = {{"kind", "G1"}, {"g1_params", {"K", "O"}}, {"space_ref", "catalog:chain(3)"}, {"horizon", 2}};
    CHECK(io::spec_from_json(g1).kind == GameKind::g1(CoverClass::K, CoverClass::O));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto m = random_model(seed, 2 + static_cast<int>(seed % 3), 3);
        for (auto kind : {GameKind::rothberger(), GameKind::point_open(), GameKind::menger()}) {
            auto sp = make_spec(kind, m, default_one_pool(kind, m), 2);
            auto sol = solve(sp);
            auto loaded = io::strategy_from_json(io::strategy_to_json(sol.strategy), sp);
            CHECK(certify(sp, loaded).certified);
            auto tab = make_table_strategy(sol.strategy.side(), "t", io::tabulate(sp, sol.strategy));
            CHECK(certify(sp, tab).certified);
        }
    }
}

TEST_CASE("rule strategies reload by name") {
    auto m = make_model(chain_space(3), "chain(3)");
    auto spec = make_spec(GameKind::rothberger(), m, {}, 3);
    auto s = io::strategy_from_json(io::strategy_to_json(scattered_rank_strategy(m)), spec);
    CHECK(certify(spec, s).certified);
    auto c = io::strategy_from_json(io::strategy_to_json(constant_strategy(Move::point(1))),
                                    make_spec(GameKind::point_open(), m, {}, 1));
    CHECK(c.choose(PlayContext{}) == Move::point(1));
    CHECK_THROWS_AS(io::strategy_from_json(json{{"side", "Two"}, {"rule", "nope"}}, spec), io::ParseError);

    auto f = io::catalog_space("fortissimo(5,2)");
    auto fs = make_spec(GameKind::rothberger(), f, fortissimo_pool(make_fortissimo(5, 2)), 3);
    CHECK(certify(fs, io::strategy_from_json(json{{"side", "Two"}, {"rule", "fortissimo"}}, fs)).certified);
}

TEST_CASE("translated strategies reload with their source") {
    auto m = make_model(discrete_space(2));
    auto src = make_spec(GameKind::point_open(), m, {}, 2);
    auto sol = solve(src);
    REQUIRE(sol.winner == Side::One);
    auto dual = dual_spec(src, DualityPair::PointOpenRothberger);
    auto j = io::derived_strategy_to_json("translate_easy", sol.strategy, src, "catalog:discrete(2)");
    auto t = io::strategy_from_json(j, dual);
    CHECK(t.side() == Side::Two);
    CHECK(certify(dual, t).certified);

    auto src3 = make_spec(GameKind::point_open(), m, {}, 1);
    auto two = solve(src3);
    REQUIRE(two.winner == Side::Two);
    auto dual3 = dual_spec(src3, DualityPair::PointOpenRothberger);
    auto jh = io::derived_strategy_to_json("translate_hard", two.strategy, src3, "catalog:discrete(2)");
    CHECK(certify(dual3, io::strategy_from_json(jh, dual3)).certified);
    auto wm = io::witness_map(two.strategy, src3, dual3);
    CHECK_FALSE(wm["entries"].empty());
    for (const auto& e : wm["entries"])
        for (const auto& w : e["witnesses"]) CHECK_FALSE(w["source_move"].is_null());
}

TEST_CASE("transcripts carry covered snapshots") {
    auto m = make_model(discrete_space(2));
    auto spec = make_spec(GameKind::rothberger(), m, {}, 2);
    auto t = play(spec, constant_strategy(spec.one_pool.front()), countable_enumeration_strategy(m));
    auto j = io::transcript_to_json(spec, t);
    CHECK(j["innings"].size() == t.innings.size());
    CHECK(j["innings"].back()["covered"] == json({0, 1}));
    CHECK(j["winner"] == "Two");
}

TEST_CASE("catalog spaces") {
    CHECK(io::catalog_space("chain(4)").point_count() == 4);
    CHECK(io::catalog_space("random(3, 4, 2)").point_count() == 4);
    CHECK(io::catalog_space("refined(1,4)").point_count() == 4);
    CHECK_THROWS_AS(io::catalog_space("moon(2)"), io::ParseError);
    CHECK_THROWS_AS(io::catalog_space("chain(1,2)"), io::ParseError);
    CHECK_FALSE(io::catalog().empty());
}
