#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "selgames/covers.hpp"

using namespace selgames;

namespace {

SpaceModel discrete(int n) { return make_model(discrete_space(n)); }

std::vector<std::string> names(const ClassSet& c) { return class_names(c); }

// Subfamilies of the nonempty opens that satisfy every requirement and lose that property
// when any single member is dropped.
std::vector<CoverFamily> oracle_minimal(const SpaceModel& m, const std::vector<PointSet>& reqs) {
    std::vector<PointSet> opens;
    for (PointSet o : m.space.opens())
        if (!o.empty()) opens.push_back(o);
    auto ok = [&](const std::vector<PointSet>& fam) {
        for (PointSet r : reqs) {
            bool in = false;
            for (PointSet e : fam) in = in || r.subset_of(e);
            if (!in) return false;
        }
        return true;
    };
    std::vector<CoverFamily> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << opens.size()); ++mask) {
        std::vector<PointSet> fam;
        for (std::size_t i = 0; i < opens.size(); ++i)
            if ((mask >> i) & 1U) fam.push_back(opens[i]);
        if (!ok(fam)) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < fam.size() && minimal; ++j) {
            auto less = fam;
            less.erase(less.begin() + static_cast<long>(j));
            if (ok(less)) minimal = false;
        }
        if (minimal) out.emplace_back(fam);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("is_open_cover") {
    CHECK(is_open_cover(discrete(2), {PointSet{0}, PointSet{1}}).ok);
    auto v = is_open_cover(discrete(2), {PointSet{0}});
    CHECK_FALSE(v.ok);
    CHECK(v.diagnostic.find("union misses") != std::string::npos);
    SpaceModel c3 = make_model(chain_space(3));
    CHECK_FALSE(is_open_cover(c3, {PointSet{0}, PointSet{0, 1}}).ok);
    auto bad = is_open_cover(c3, {PointSet{1}, PointSet{0, 1, 2}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.diagnostic.find("element not open") != std::string::npos);
}

TEST_CASE("finite_union_closure") {
    auto m = discrete(3);
    CHECK(finite_union_closure(discrete(2), {PointSet{0}, PointSet{1}}) ==
          CoverFamily{PointSet{0}, PointSet{1}, PointSet{0, 1}});
    CHECK(finite_union_closure(discrete(2), {PointSet{0, 1}}) == CoverFamily{PointSet{0, 1}});
    auto c = finite_union_closure(m, {PointSet{0}, PointSet{1}, PointSet{2}});
    CHECK(c.size() == 7);
    CHECK(finite_union_closure(m, c) == c);
}

TEST_CASE("classify examples") {
    auto m = discrete(2);
    CHECK(names(classify(m, {PointSet{0}, PointSet{1}})) == std::vector<std::string>{"K", "O", "R"});
    auto big = m;
    big.compact_pool = subsets_of(m.points());
    CHECK(names(classify(big, {PointSet{0}, PointSet{1}})) == std::vector<std::string>{"O", "R"});
    CHECK(names(classify(big, {PointSet{0, 1}})) == std::vector<std::string>{"K", "O", "Ostar", "R"});
    // An explicit Rothberger pool of all subsets makes R mean "some element is X".
    big.rothberger_pool = subsets_of(m.points());
    CHECK(names(classify(big, {PointSet{0}, PointSet{1}})) == std::vector<std::string>{"O"});
    auto g = GdeltaCover({GdeltaPresentedSet::of({PointSet{0}, PointSet{0, 1}}), GdeltaPresentedSet::of({PointSet{1}})});
    CHECK(names(classify(m, g)) == std::vector<std::string>{"Alster", "Odelta"});
    CHECK(names(classify(big, g)) == std::vector<std::string>{"Odelta"});
}

TEST_CASE("cover families reject duplicates and bad presentations") {
    CHECK_THROWS_AS(CoverFamily({PointSet{0}, PointSet{0}}), InvariantError);
    CHECK_THROWS_AS(GdeltaCover({GdeltaPresentedSet{PointSet{0}, {PointSet{0, 1}}}}), InvariantError);
}

TEST_CASE("s1_select") {
    auto m = discrete(2);
    CoverFamily c{PointSet{0}, PointSet{1}};
    auto r = s1_select(m, {c, c}, CoverClass::O);
    REQUIRE(r.selection);
    CHECK(r.selection->picks == std::vector<PointSet>{PointSet{0}, PointSet{1}});
    auto none = s1_select(m, {c}, CoverClass::O);
    CHECK_FALSE(none.selection);
    CHECK(none.exhaustive);
    CHECK_THROWS_WITH(s1_select(m, {c, CoverFamily{}}, CoverClass::O), "empty cover");
}

TEST_CASE("s1_holds_over_pool") {
    auto m = discrete(2);
    CoverFamily c{PointSet{0}, PointSet{1}};
    CHECK(s1_holds_over_pool(m, {c}, 2, CoverClass::O).holds);
    auto r = s1_holds_over_pool(m, {c}, 1, CoverClass::O);
    CHECK_FALSE(r.holds);
    CHECK(r.counterexample == std::vector<std::size_t>{0});
    for (int k = 1; k <= 3; ++k) CHECK(s1_holds_over_pool(m, {CoverFamily{PointSet{0, 1}}}, k, CoverClass::O).holds);
}

TEST_CASE("property: minimal cover pools match exhaustive enumeration") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        SpaceModel m = random_model(seed, 2 + static_cast<int>(seed % 4), 3);
        std::vector<PointSet> pts;
        for (int x = 0; x < m.point_count(); ++x) pts.push_back(PointSet::singleton(x));
        auto irr = irredundant_covers(m);
        std::sort(irr.begin(), irr.end());
        CHECK(irr == oracle_minimal(m, pts));
        auto reqs = pts;
        reqs.insert(reqs.end(), m.compact_pool.begin(), m.compact_pool.end());
        auto kc = minimal_k_covers(m);
        std::sort(kc.begin(), kc.end());
        CHECK(kc == oracle_minimal(m, reqs));
        for (const auto& g : minimal_alster_covers(m)) CHECK(in_class(m, g, CoverClass::Alster));
    }
}

TEST_CASE("property: class laws on random families") {
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        SpaceModel m = random_model(seed, 1 + static_cast<int>(seed % 5), 3);
        const auto& opens = m.space.opens();
        std::vector<PointSet> els;
        for (PointSet o : opens)
            if (rng() % 2) els.push_back(o);
        els.push_back(opens[rng() % opens.size()]);
        CoverFamily fam = CoverFamily::dedup(els);
        ClassSet cs = classify(m, fam);
        if (cs.contains(CoverClass::K)) CHECK(cs.contains(CoverClass::O));
        if (cs.contains(CoverClass::O)) {
            CHECK(classify(m, finite_union_closure(m, fam)).contains(CoverClass::K));
            auto singles = m;
            singles.compact_pool.clear();
            for (int x = 0; x < m.point_count(); ++x) singles.compact_pool.push_back(PointSet::singleton(x));
            CHECK(classify(singles, fam).contains(CoverClass::K));
            // R-covers are k-covers whenever the Rothberger pool contains the compact pool.
            auto rp = m;
            std::vector<PointSet> pool = m.compact_pool;
            pool.emplace_back(rng() & m.points().bits());
            canonicalize(pool);
            rp.rothberger_pool = pool;
            ClassSet rc = classify(rp, fam);
            if (rc.contains(CoverClass::R)) CHECK(rc.contains(CoverClass::K));
        }
        // Adding an element never loses O, K, R or Alster.
        auto more = els;
        more.push_back(opens[rng() % opens.size()]);
        ClassSet bigger = classify(m, CoverFamily::dedup(more));
        for (CoverClass c : {CoverClass::O, CoverClass::K, CoverClass::R})
            if (cs.contains(c)) CHECK(bigger.contains(c));
        auto g = GdeltaCover::from_opens(fam);
        ClassSet gc = classify(m, g);
        if (gc.contains(CoverClass::Alster)) {
            CHECK(gc.contains(CoverClass::Odelta));
            CHECK(classify(m, GdeltaCover::from_opens(CoverFamily::dedup(more))).contains(CoverClass::Alster));
        }
    }
}

TEST_CASE("property: S1 over longer sequences only gets easier") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        SpaceModel m = random_model(seed, 2 + static_cast<int>(seed % 3), 2);
        auto pool = irredundant_covers(m);
        if (pool.size() > 6) pool.resize(6);
        for (int k = 1; k <= 2; ++k)
            if (s1_holds_over_pool(m, pool, k, CoverClass::O).holds)
                CHECK(s1_holds_over_pool(m, pool, k + 1, CoverClass::O).holds);
    }
}
