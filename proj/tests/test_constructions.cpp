#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "selgames/constructions.hpp"
#include "selgames/solver.hpp"

using namespace selgames;

namespace {

GdeltaCover gcover(std::initializer_list<PointSet> l) { return GdeltaCover::from_opens(CoverFamily(l)); }

}  // namespace

TEST_CASE("alster_diagonal_selection examples") {
    auto m = make_model(discrete_space(2));
    const PointSet x{0, 1};
    auto sel = alster_diagonal_selection(m, {gcover({PointSet{0}, PointSet{1}}), gcover({PointSet{0}, x})}, 2);
    REQUIRE(sel.picks.size() == 2);
    CHECK(sel.picks[0].target == PointSet{0});
    CHECK(sel.picks[1].target == x);
    CHECK(sel.choices[0] == std::vector<std::size_t>{0, 0});
    CHECK(sel.choices[1] == std::vector<std::size_t>{1, 1});

    auto whole = alster_diagonal_selection(m, {gcover({x})}, 1);
    CHECK(whole.picks[0].target == x);

    auto big = m;
    big.compact_pool.push_back(x);
    CHECK_THROWS_WITH(alster_diagonal_selection(big, {gcover({PointSet{0}, PointSet{1}})}, 2), "not an Alster cover");
}

TEST_CASE("property: diagonal selection success implies a brute-force selection") {
    std::mt19937_64 rng(23);
    int agreed_full = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto m = random_model(seed, 2 + static_cast<int>(seed % 3), 3);
        auto pool = minimal_alster_covers(m);
        const std::size_t k = 1 + rng() % 3;
        std::vector<GdeltaCover> covers;
        for (std::size_t i = 0; i < k; ++i) covers.push_back(pool[rng() % pool.size()]);
        for (int r = 1; r <= m.point_count(); ++r) {
            std::vector<GdeltaCover> seq;
            for (int n = 0; n < r; ++n) seq.push_back(covers[static_cast<std::size_t>(n) % k]);
            const bool brute = s1_select(m, seq, CoverClass::Odelta).selection.has_value();
            try {
                auto sel = alster_diagonal_selection(m, covers, r);
                CHECK(brute);
                PointSet u;
                for (std::size_t n = 0; n < sel.picks.size(); ++n) {
                    CHECK(covers[n % k][sel.indices[n]] == sel.picks[n]);
                    u |= sel.picks[n].target;
                }
                CHECK(u == m.points());
                if (r == m.point_count()) ++agreed_full;
            } catch (const Error&) {
                CHECK(r < m.point_count());
            }
        }
    }
    CHECK(agreed_full == 150);
}

TEST_CASE("Menger extraction examples") {
    auto m = make_model(discrete_space(2));
    auto spec = make_spec(GameKind::menger(), m, {}, 2);
    auto sol = solve(spec);
    REQUIRE(sol.winner == Side::Two);
    auto w = gcover({PointSet{0}, PointSet{1}});
    auto ex = extract_alster_subcover_from_menger(spec, sol.strategy, w);
    CHECK(ex.covers);
    CHECK(ex.subfamily.size() <= 2);
    CHECK_FALSE(falsify_menger_extraction(spec, sol.strategy, w));

    auto whole = extract_alster_subcover_from_menger(spec, sol.strategy, gcover({PointSet{0, 1}}));
    REQUIRE(whole.subfamily.size() == 1);
    CHECK(whole.subfamily[0].target == PointSet{0, 1});

    auto bad = first_element_strategy();
    CHECK_FALSE(certify(spec, bad).certified);
    auto t = falsify_menger_extraction(spec, bad, w);
    REQUIRE(t);
    CHECK(judge(spec, *t) == Side::One);
    for (const auto& inn : t->innings) CHECK(is_legal_two_move(spec, inn.one, inn.two));

    CHECK_THROWS_WITH(extract_alster_subcover_from_menger(make_spec(GameKind::menger(), make_model(chain_space(3)), {}, 2),
                                                          bad, gcover({PointSet{0, 1, 2}})),
                      doctest::Contains("regular"));
}

TEST_CASE("point-open extraction examples") {
    auto m = make_model(discrete_space(2));
    auto spec = make_spec(GameKind::point_open(), m, {}, 2);
    auto sol = solve(spec);
    REQUIRE(sol.winner == Side::One);
    GdeltaCover w({GdeltaPresentedSet::of({PointSet{0}, PointSet{0, 1}}), GdeltaPresentedSet::of({PointSet{1}})});
    auto ex = extract_gdelta_subcover_from_pointopen(spec, sol.strategy, w);
    CHECK(ex.covers);
    CHECK(ex.subfamily.size() == 2);
    for (const auto& n : ex.nodes) CHECK(n.path.size() < 2);
    CHECK_FALSE(falsify_pointopen_extraction(spec, sol.strategy, w));

    GdeltaCover x({GdeltaPresentedSet::of({PointSet{0, 1}})});
    auto wx = extract_gdelta_subcover_from_pointopen(spec, sol.strategy, x);
    REQUIRE(wx.subfamily.size() == 1);
    CHECK(wx.covers);

    // A One strategy that repeats point 0 loses; the falsifier exhibits the play.
    auto lazy = constant_strategy(Move::point(0));
    auto t = falsify_pointopen_extraction(spec, lazy, w);
    REQUIRE(t);
    CHECK(judge(spec, *t) == Side::Two);
}

TEST_CASE("catalog strategies") {
    for (int n = 1; n <= 4; ++n) {
        auto m = make_model(discrete_space(n));
        auto spec = make_spec(GameKind::rothberger(), m, {}, n);
        CHECK(certify(spec, countable_enumeration_strategy(m)).certified);
        if (n > 1) {
            std::vector<PointSet> singles;
            for (int x = 0; x < n; ++x) singles.push_back(PointSet::singleton(x));
            auto s1 = make_spec(GameKind::rothberger(), m, {Move::cover(CoverFamily(singles))}, n - 1);
            CHECK_FALSE(certify(s1, countable_enumeration_strategy(m)).certified);
        }
    }
    auto c3 = make_model(chain_space(3));
    CHECK(certify(make_spec(GameKind::rothberger(), c3, {}, 3), scattered_rank_strategy(c3)).certified);
    CHECK_THROWS_WITH(scattered_rank_strategy(make_model(indiscrete_space(2))), "space not scattered");
}

TEST_CASE("property: catalog strategies win at horizon = point count") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto m = random_model(seed, 1 + static_cast<int>(seed % 5), 3);
        auto spec = make_spec(GameKind::rothberger(), m, {}, m.point_count());
        CHECK(certify(spec, countable_enumeration_strategy(m)).certified);
        if (is_scattered(m.space).scattered) {
            auto s = scattered_rank_strategy(m);
            CHECK(certify(spec, s).certified);
            auto t = play(spec, constant_strategy(spec.one_pool.front()), s);
            CHECK(static_cast<int>(t.innings.size()) <= m.point_count());
        }
    }
}

TEST_CASE("Cantor witness") {
    auto r = cantor_witness(3, [](int, const Cylinder&) { return 0; });
    REQUIRE_FALSE(r.empty());
    CHECK(r.cylinder->constraints == std::map<int, int>{{0, 1}, {1, 1}, {2, 1}});
    for (std::uint32_t line = 0; line < 1024; ++line) {
        auto reg = cantor_witness(10, [line](int n, const Cylinder&) { return static_cast<int>((line >> n) & 1U); });
        REQUIRE_FALSE(reg.empty());
        CHECK(reg.cylinder->constraints.size() == 10);
        for (auto [coord, bit] : reg.cylinder->constraints) CHECK(bit == 1 - static_cast<int>((line >> coord) & 1U));
    }
}

TEST_CASE("fortissimo model") {
    auto fm = make_fortissimo(5, 2);
    const auto& sp = fm.model->space;
    CHECK(sp.is_open(PointSet{0, 1}));
    CHECK(sp.is_open(PointSet{0, 1, 2, 5}));
    CHECK_FALSE(make_fortissimo(5, 0).model->space.is_open(PointSet{5}));
    CHECK(make_fortissimo(5, 0).model->space.is_open(PointSet::full(6)));
    // Explicit enumeration satisfies the topology invariants.
    std::vector<PointSet> opens;
    for (PointSet s : oracle::all_subsets(6))
        if (sp.is_open(s)) opens.push_back(s);
    CHECK_NOTHROW(FiniteSpace(6, opens));
    for (PointSet s : oracle::all_subsets(6)) {
        PointSet best;
        for (PointSet o : opens)
            if (o.subset_of(s) && o.size() > best.size()) best = o;
        CHECK(sp.interior(s) == best);
    }

    auto pool = fortissimo_pool(fm);
    CHECK(pool.size() == 16);
    auto spec = make_spec(GameKind::rothberger(), fm.model, pool, 3);
    CHECK(certify(spec, fortissimo_strategy(fm)).certified);
    spec.horizon = 1;
    auto r = certify(spec, fortissimo_strategy(fm));
    REQUIRE_FALSE(r.certified);
    CHECK(judge(spec, *r.counterplay) == Side::One);

    auto f0 = make_fortissimo(5, 0);
    CHECK(certify(make_spec(GameKind::rothberger(), f0.model, fortissimo_pool(f0), 1), fortissimo_strategy(f0))
              .certified);
}

TEST_CASE("refinement combinator") {
    auto base = make_model(from_subbasis(4, {PointSet{0, 1}, PointSet{1, 2, 3}, PointSet{2, 3}}));
    base.small_ideal = subsets_of(PointSet{3});
    auto inst = make_refined_instance(std::make_shared<const SpaceModel>(base));
    CHECK(inst.refined->space.is_open(PointSet{2}));
    std::vector<Move> pool;
    for (const auto& c : refined_pool(inst)) pool.push_back(Move::cover(c));
    auto bspec = base_spec_for(inst, pool, base.point_count());
    auto rho = solve(bspec);
    REQUIRE(rho.winner == Side::Two);
    const int q = 1;
    const int h = refined_horizon(bspec.horizon, max_queued_points(inst, pool), q);
    auto refined = make_spec(GameKind::menger(), inst.refined, pool, h);
    auto s = refine_menger_strategy(bspec, rho.strategy, inst, q, 2);
    CHECK(certify(refined, s).certified);
    CHECK_THROWS_AS(refine_menger_strategy(bspec, rho.strategy, inst, 0, 2), Error);
}

TEST_CASE("refinement with an empty ideal replays the base strategy") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto base = random_model(seed, 3 + static_cast<int>(seed % 2), 3);
        base.small_ideal = {PointSet{}};
        auto inst = make_refined_instance(std::make_shared<const SpaceModel>(base));
        std::vector<Move> pool;
        for (const auto& c : refined_pool(inst)) pool.push_back(Move::cover(c));
        auto bspec = base_spec_for(inst, pool, 2);
        auto rho = solve(bspec);
        if (rho.winner != Side::Two) continue;
        auto refined = make_spec(GameKind::menger(), inst.refined, pool, refined_horizon(2, 0, 1));
        auto s = refine_menger_strategy(bspec, rho.strategy, inst, 1, 2);
        for (const Move& u : pool) {
            auto t = play(refined, constant_strategy(u), s);
            auto tb = play(bspec, constant_strategy(u), rho.strategy);
            for (std::size_t k = 0; 2 * k < t.innings.size() && k < tb.innings.size(); ++k) {
                PointSet even;
                for (std::size_t i = 0; i <= 2 * k; i += 2) even |= t.innings[i].two.set;
                CHECK(even == tb.covered_after[k]);
            }
        }
    }
}
