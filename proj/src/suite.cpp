#include "selgames/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "selgames/constructions.hpp"
#include "selgames/duality.hpp"
#include "selgames/solver.hpp"

namespace selgames {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

nlohmann::json suite_report_to_json(const SuiteReport& report, bool with_elapsed) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json j = {{"id", c.id},
                            {"name", c.name},
                            {"instances", c.instances},
                            {"violations", c.violations},
                            {"notes", c.notes},
                            {"pass", c.passed()}};
        if (with_elapsed) j["elapsed_ms"] = c.elapsed_ms;
        checks.push_back(std::move(j));
    }
    return {{"checks", checks}, {"pass", report.passed()}};
}

// ---- generators ----

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

PointSet random_open_superset(const SpaceModel& m, std::mt19937_64& rng, PointSet s) {
    std::vector<PointSet> sup;
    for (PointSet o : m.space.opens())
        if (s.subset_of(o)) sup.push_back(o);
    return sup[below(rng, sup.size())];
}

}  // namespace

SpaceModel small_model(std::mt19937_64& rng, int max_points, std::size_t max_opens) {
    for (;;) {
        const int n = 2 + static_cast<int>(below(rng, static_cast<std::size_t>(max_points - 1)));
        const int k = 2 + static_cast<int>(below(rng, 4));
        SpaceModel m = random_model(rng(), n, k);
        if (m.space.opens().size() > max_opens) continue;
        if (below(rng, 2) == 0) {
            m.compact_pool.clear();
            for (int x = 0; x < n; ++x) m.compact_pool.push_back(PointSet::singleton(x));
        }
        return m;
    }
}

SpaceModel regular_model(std::mt19937_64& rng, int max_points) {
    const int n = 2 + static_cast<int>(below(rng, static_cast<std::size_t>(max_points - 1)));
    std::vector<int> block(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) block[static_cast<std::size_t>(x)] = static_cast<int>(below(rng, static_cast<std::size_t>(x + 1)));
    std::map<int, PointSet> parts;
    for (int x = 0; x < n; ++x) parts[block[static_cast<std::size_t>(x)]].insert(x);
    std::vector<PointSet> sub;
    for (const auto& [b, p] : parts) sub.push_back(p);
    return make_model(from_subbasis(n, sub), "partition");
}

GdeltaCover random_gdelta_cover(const SpaceModel& model, std::mt19937_64& rng,
                                const std::vector<PointSet>& requirements) {
    std::vector<PointSet> targets;
    PointSet covered;
    auto want = requirements;
    std::shuffle(want.begin(), want.end(), rng);
    for (PointSet r : want) {
        if (std::any_of(targets.begin(), targets.end(), [r](PointSet t) { return r.subset_of(t); })) continue;
        PointSet t = below(rng, 3) == 0 ? random_open_superset(model, rng, r)
                                        : minimal_open_containing(model.space, r);
        targets.push_back(t);
        covered |= t;
    }
    for (PointSet left = model.points() - covered; !left.empty(); left = model.points() - covered) {
        PointSet t = minimal_open_containing(model.space, PointSet::singleton(left.min()));
        targets.push_back(t);
        covered |= t;
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    std::vector<GdeltaPresentedSet> els;
    for (PointSet t : targets) {
        std::vector<PointSet> factors{t};
        if (below(rng, 2) == 0) factors.push_back(random_open_superset(model, rng, t));
        std::sort(factors.begin(), factors.end());
        factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
        els.push_back(GdeltaPresentedSet::of(std::move(factors)));
    }
    return GdeltaCover(std::move(els));
}

std::vector<PointSet> menger_kernels(const GameSpec& spec, const Strategy& sigma) {
    std::set<PointSet> out;
    const PointSet all = spec.points();
    std::vector<Inning> hist;
    std::function<void(PointSet)> walk = [&](PointSet covered) {
        const int inning = static_cast<int>(hist.size());
        if (inning >= spec.horizon) return;
        PointSet kernel = all;
        std::vector<Move> replies;
        for (const Move& u : spec.one_pool) {
            Move r = covered == all ? Move::sublist({})
                                    : sigma.choose(PlayContext{&spec, hist, &u, covered, inning});
            kernel &= closure(spec.model->space, r.set);
            replies.push_back(std::move(r));
        }
        out.insert(kernel);
        for (std::size_t i = 0; i < spec.one_pool.size(); ++i) {
            hist.push_back({spec.one_pool[i], replies[i]});
            walk(covered | replies[i].set);
            hist.pop_back();
        }
    };
    walk(PointSet{});
    return {out.begin(), out.end()};
}

// ---- checks ----

namespace {

using Clock = std::chrono::steady_clock;

std::mt19937_64 rng_for(std::uint64_t seed, int check, std::size_t index) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(check), static_cast<std::uint64_t>(index)};
    return std::mt19937_64(seq);
}

std::string describe_instance(const GameSpec& spec) {
    std::ostringstream os;
    os << spec.kind.str() << " h=" << spec.horizon << " n=" << spec.model->point_count() << " opens=[";
    bool first = true;
    for (PointSet o : spec.model->space.opens()) {
        os << (first ? "" : " ") << o.str();
        first = false;
    }
    os << "]";
    return os.str();
}

// Runs body(i) for each instance; exceptions become violations.
template <class F>
void each_instance(CheckReport& rep, std::size_t count, F&& body) {
    for (std::size_t i = 0; i < count; ++i) {
        ++rep.instances;
        try {
            body(i);
        } catch (const std::exception& e) {
            rep.violations.push_back("instance " + std::to_string(i) + ": " + e.what());
        }
    }
}

const GameKind kSources[] = {GameKind::point_open(),
                             GameKind::rothberger(),
                             GameKind::compact_open(),
                             GameKind::g1(CoverClass::K, CoverClass::O),
                             GameKind::compact_gdelta(),
                             GameKind::g1(CoverClass::Alster, CoverClass::Odelta),
                             GameKind::menger()};

GameSpec corpus_spec(std::mt19937_64& rng, std::size_t i, int max_h = 4) {
    SpaceModel m = small_model(rng);
    const GameKind kind = kSources[i % std::size(kSources)];
    const int h = 1 + static_cast<int>(below(rng, static_cast<std::size_t>(std::clamp(m.point_count() - 1, 1, max_h))));
    return make_spec(kind, std::move(m), {}, h);
}

void check_duality_flip(const SuiteOptions& o, CheckReport& rep) {
    std::size_t divergent = 0;
    each_instance(rep, o.instances, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 1, i);
        GameSpec spec = corpus_spec(rng, i);
        const DualityPair pair = *pair_of(spec.kind);
        GameSpec dual = dual_spec(spec, pair);
        SolveOptions so{o.node_budget, true};
        const Side w = solve(spec, so).winner;
        const Side wd = solve(dual, so).winner;
        const bool ok = pair == DualityPair::MengerOstar ? w == wd : w != wd;
        if (!ok)
            rep.violations.push_back(describe_instance(spec) + ": winner " + std::string(to_string(w)) +
                                     ", dual winner " + std::string(to_string(wd)));
        if (spec.kind.tag == GameTag::Menger) {
            // Menger vs compact-open: logged only.
            const Side wc = solve(make_spec(GameKind::compact_open(), spec.model, {}, spec.horizon), so).winner;
            if (w != opponent(wc)) ++divergent;
        }
    });
    rep.notes.push_back(std::to_string(divergent) +
                        " Menger instances where the Menger winner is not the compact-open loser");
}

void check_translation(const SuiteOptions& o, CheckReport& rep) {
    const GameKind point_kinds[] = {GameKind::point_open(), GameKind::compact_open(), GameKind::compact_gdelta()};
    std::size_t translated = 0;
    each_instance(rep, o.instances, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 2, i);
        SpaceModel m = small_model(rng);
        const GameKind kind = point_kinds[i % 3];
        const int h = 1 + static_cast<int>(below(rng, 4));
        GameSpec src = make_spec(kind, std::move(m), {}, h);
        GameSpec dual = dual_spec(src, *pair_of(kind));
        CertifyOptions co{o.node_budget};
        std::vector<Strategy> candidates{solve(src, {o.node_budget, true}).strategy, minimal_open_strategy(),
                                         kind.tag == GameTag::PointOpen ? least_uncovered_point_strategy()
                                                                        : uncovered_compact_strategy()};
        for (const Strategy& s : candidates) {
            if (!certify(src, s, co).certified) continue;
            ++translated;
            const Strategy t = s.side() == Side::One ? translate_easy(s, src) : translate_hard(s, src);
            if (!certify(dual, t, co).certified)
                rep.violations.push_back(describe_instance(src) + ": " + s.name() + " certified but its " +
                                         (s.side() == Side::One ? "translate_easy" : "translate_hard") +
                                         " image is not");
        }
    });
    rep.notes.push_back(std::to_string(translated) + " certified source strategies translated");
}

void check_menger_bridge(const SuiteOptions& o, CheckReport& rep) {
    const std::size_t count = std::max<std::size_t>(50, o.instances / 4);
    constexpr std::size_t kNodeCap = 50000;
    each_instance(rep, count, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 3, i);
        SpaceModel m = small_model(rng, 4);
        const int h = 1 + static_cast<int>(below(rng, 3));
        GameSpec spec = make_spec(GameKind::menger(), std::move(m), {}, h);
        GameSpec dual = dual_spec(spec, DualityPair::MengerOstar);
        SolveOptions so{o.node_budget, true};
        auto sol = solve(spec, so);
        const Side wd = solve(dual, so).winner;
        const std::string tag = describe_instance(spec);
        if (sol.winner != wd) {
            rep.violations.push_back(tag + ": Menger and G1(Ostar,O) winners differ");
            return;
        }
        const Strategy& s = sol.strategy;
        const Strategy there = menger_equivalence(s, spec);
        const Strategy back = menger_equivalence(there, dual);
        CertifyOptions co{o.node_budget};
        if (!certify(dual, there, co).certified) rep.violations.push_back(tag + ": translated strategy loses");
        if (!certify(spec, back, co).certified) rep.violations.push_back(tag + ": round-tripped strategy loses");

        const PointSet all = spec.points();
        std::size_t nodes = 0;
        std::string bad;
        std::vector<Inning> hs, hd, hr;
        auto closure_of = [&](const Move& cover) { return Move::cover(finite_union_closure(*spec.model, cover.as_cover())); };
        std::function<void(PointSet)> walk = [&](PointSet covered) {
            const int inning = static_cast<int>(hs.size());
            if (!bad.empty() || covered == all || inning >= spec.horizon || ++nodes > kNodeCap) return;
            if (s.side() == Side::Two) {
                for (const Move& u : spec.one_pool) {
                    const Move v = closure_of(u);
                    Move a = s.choose(PlayContext{&spec, hs, &u, covered, inning});
                    Move b = there.choose(PlayContext{&dual, hd, &v, covered, inning});
                    Move c = back.choose(PlayContext{&spec, hr, &u, covered, inning});
                    if (a.set != b.set || a.set != c.set) {
                        bad = "inning " + std::to_string(inning) + ": covered sets " + a.set.str() + ", " +
                              b.set.str() + ", " + c.set.str();
                        return;
                    }
                    hs.push_back({u, a});
                    hd.push_back({v, b});
                    hr.push_back({u, c});
                    walk(covered | a.set);
                    hs.pop_back();
                    hd.pop_back();
                    hr.pop_back();
                }
            } else {
                Move a = s.choose(PlayContext{&spec, hs, nullptr, covered, inning});
                Move b = there.choose(PlayContext{&dual, hd, nullptr, covered, inning});
                Move c = back.choose(PlayContext{&spec, hr, nullptr, covered, inning});
                if (b != closure_of(a) || closure_of(c) != b) {
                    bad = "inning " + std::to_string(inning) + ": One's covers do not correspond";
                    return;
                }
                for (const Move& r : two_replies(spec, a)) {
                    const Move pick = Move::pick(r.set);
                    auto sub = minimal_sublist(c.members, r.set);
                    if (!is_legal_two_move(dual, b, pick) || !sub) {
                        bad = "inning " + std::to_string(inning) + ": reply " + r.str() + " has no image";
                        return;
                    }
                    hs.push_back({a, r});
                    hd.push_back({b, pick});
                    hr.push_back({c, Move::sublist(*sub)});
                    walk(covered | r.set);
                    hs.pop_back();
                    hd.pop_back();
                    hr.pop_back();
                }
            }
        };
        walk(PointSet{});
        if (!bad.empty()) rep.violations.push_back(tag + ": " + bad);
    });
}

void check_diagonal(const SuiteOptions& o, CheckReport& rep) {
    const std::size_t count = std::max<std::size_t>(100, o.instances / 2);
    std::size_t below_n_disagreements = 0;
    each_instance(rep, count, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 4, i);
        SpaceModel m = small_model(rng, 4);
        auto req = m.compact_pool;
        const std::size_t k = 1 + below(rng, 3);
        std::vector<GdeltaCover> covers;
        for (std::size_t j = 0; j < k; ++j) covers.push_back(random_gdelta_cover(m, rng, req));
        for (int r = 1; r <= m.point_count(); ++r) {
            std::vector<GdeltaCover> seq;
            for (int n = 0; n < r; ++n) seq.push_back(covers[static_cast<std::size_t>(n) % k]);
            const bool brute = s1_select(m, seq, CoverClass::Odelta).selection.has_value();
            bool diag = false;
            try {
                auto sel = alster_diagonal_selection(m, covers, r);
                diag = true;
                PointSet u;
                for (std::size_t n = 0; n < sel.picks.size(); ++n) {
                    if (covers[n % k][sel.indices[n]] != sel.picks[n])
                        rep.violations.push_back("instance " + std::to_string(i) + ": A_" + std::to_string(n) +
                                                 " not in covers[n mod k]");
                    u |= sel.picks[n].target;
                }
                if (u != m.points())
                    rep.violations.push_back("instance " + std::to_string(i) + ": selection misses points");
            } catch (const Error&) {
                diag = false;
            }
            if (diag && !brute)
                rep.violations.push_back("instance " + std::to_string(i) + " r=" + std::to_string(r) +
                                         ": diagonal succeeds where s1_select finds nothing");
            if (r == m.point_count() && diag != brute)
                rep.violations.push_back("instance " + std::to_string(i) + " r=" + std::to_string(r) +
                                         ": diagonal and s1_select disagree");
            if (r < m.point_count() && diag != brute) ++below_n_disagreements;
        }
    });
    rep.notes.push_back(std::to_string(below_n_disagreements) +
                        " (instance, r < n) pairs where s1_select succeeds and the diagonal needs more rounds");
}

SpaceModel with_kernels(const GameSpec& spec, const Strategy& sigma) {
    SpaceModel m = *spec.model;
    for (PointSet k : menger_kernels(spec, sigma))
        if (std::find(m.compact_pool.begin(), m.compact_pool.end(), k) == m.compact_pool.end())
            m.compact_pool.push_back(k);
    return m;
}

std::string transcript_problem(const GameSpec& spec, const Strategy& two, const Transcript& t) {
    std::vector<Move> ones;
    for (const auto& inn : t.innings) {
        if (!is_legal_one_move(spec, inn.one)) return "illegal One move " + inn.one.str();
        if (!is_legal_two_move(spec, inn.one, inn.two)) return "illegal Two move " + inn.two.str();
        ones.push_back(inn.one);
    }
    auto replay = replay_two(spec, two, ones);
    for (std::size_t i = 0; i < replay.size(); ++i)
        if (replay[i] != t.innings[i].two) return "transcript does not follow the strategy";
    if (judge(spec, t) != Side::One) return "transcript is not a One win";
    return {};
}

void check_menger_extraction(const SuiteOptions& o, CheckReport& rep) {
    const std::size_t count = std::max<std::size_t>(50, o.instances / 4);
    each_instance(rep, count, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 5, i);
        SpaceModel m = regular_model(rng);
        const int h = 1 + static_cast<int>(below(rng, static_cast<std::size_t>(m.point_count())));
        GameSpec spec = make_spec(GameKind::menger(), m, {}, h);
        auto sol = solve(spec, {o.node_budget, true});
        if (sol.winner != Side::Two || !certify(spec, sol.strategy, {o.node_budget}).certified) {
            rep.violations.push_back(describe_instance(spec) + ": solver strategy not certified");
            return;
        }
        GameSpec aug = spec;
        aug.model = std::make_shared<const SpaceModel>(with_kernels(spec, sol.strategy));
        GdeltaCover w = random_gdelta_cover(*aug.model, rng, aug.model->compact_pool);
        auto ex = extract_alster_subcover_from_menger(aug, sol.strategy, w);
        PointSet u;
        for (const auto& e : ex.subfamily) {
            if (std::find(w.begin(), w.end(), e) == w.end())
                rep.violations.push_back(describe_instance(spec) + ": extracted element outside W");
            u |= e.target;
        }
        if (u != spec.points() || !ex.covers)
            rep.violations.push_back(describe_instance(spec) + ": extracted family misses points");
    });
    // Deliberately non-winning strategies.
    std::size_t found = 0, covered_anyway = 0;
    for (std::size_t i = 0; found < 20 && i < 2000; ++i) {
        auto rng = rng_for(o.seed, 55, i);
        SpaceModel m = regular_model(rng);
        if (m.point_count() < 2) continue;
        const Strategy sigma = first_element_strategy();
        GameSpec spec = make_spec(GameKind::menger(), m, {}, 1 + static_cast<int>(below(rng, 2)));
        if (certify(spec, sigma, {o.node_budget}).certified) continue;
        ++found;
        ++rep.instances;
        try {
            GameSpec aug = spec;
            aug.model = std::make_shared<const SpaceModel>(with_kernels(spec, sigma));
            // Finest Alster cover first, then random ones, until the extraction misses a point.
            std::vector<PointSet> finest;
            for (PointSet k : aug.model->compact_pool) finest.push_back(minimal_open_containing(aug.model->space, k));
            for (int x = 0; x < m.point_count(); ++x)
                finest.push_back(minimal_open_containing(aug.model->space, PointSet::singleton(x)));
            std::optional<Transcript> t =
                falsify_menger_extraction(aug, sigma, GdeltaCover::from_opens(CoverFamily::dedup(finest)));
            for (int tries = 0; !t && tries < 20; ++tries)
                t = falsify_menger_extraction(aug, sigma, random_gdelta_cover(*aug.model, rng, aug.model->compact_pool));
            if (!t) {
                ++covered_anyway;
                rep.violations.push_back(describe_instance(spec) + ": every tried W is covered by the extraction");
                continue;
            }
            if (auto p = transcript_problem(aug, sigma, *t); !p.empty())
                rep.violations.push_back(describe_instance(spec) + ": " + p);
        } catch (const std::exception& e) {
            rep.violations.push_back(describe_instance(spec) + ": " + e.what());
        }
    }
    if (found < 20) rep.violations.push_back("only " + std::to_string(found) + " non-winning strategies found");
    rep.notes.push_back(std::to_string(found) + " non-winning first-element strategies, " + std::to_string(covered_anyway) +
                        " without a W whose extraction misses a point");
}

void check_pointopen_extraction(const SuiteOptions& o, CheckReport& rep) {
    const std::size_t count = std::max<std::size_t>(50, o.instances / 4);
    each_instance(rep, count, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 6, i);
        for (;;) {
            SpaceModel m = small_model(rng, 4);
            const int h = 1 + static_cast<int>(below(rng, static_cast<std::size_t>(m.point_count())));
            GameSpec spec = make_spec(GameKind::point_open(), m, {}, h);
            auto sol = solve(spec, {o.node_budget, true});
            if (sol.winner != Side::One) continue;
            if (!certify(spec, sol.strategy, {o.node_budget}).certified) {
                rep.violations.push_back(describe_instance(spec) + ": solver strategy not certified");
                return;
            }
            std::vector<PointSet> singles;
            for (int x = 0; x < m.point_count(); ++x) singles.push_back(PointSet::singleton(x));
            GdeltaCover w = random_gdelta_cover(m, rng, singles);
            auto ex = extract_gdelta_subcover_from_pointopen(spec, sol.strategy, w);
            PointSet u;
            for (const auto& e : ex.subfamily) u |= e.target;
            if (u != spec.points() || !ex.covers)
                rep.violations.push_back(describe_instance(spec) + ": W_s tree misses points");
            for (const auto& node : ex.nodes)
                if (static_cast<int>(node.path.size()) >= h)
                    rep.violations.push_back(describe_instance(spec) + ": tree deeper than the horizon");
            return;
        }
    });
}

void check_cantor(const SuiteOptions&, CheckReport& rep) {
    constexpr int d = 10;
    each_instance(rep, std::size_t{1} << d, [&](std::size_t line) {
        auto region = cantor_witness(d, [line](int n, const Cylinder&) { return static_cast<int>((line >> n) & 1U); });
        if (region.empty() || region.cylinder->constraints.size() != d)
            rep.violations.push_back("line " + std::to_string(line) + ": region empty or wrong constraint count");
    });
}

void check_fortissimo(const SuiteOptions& o, CheckReport& rep) {
    for (int n : {5, 10, 30})
        for (int c : {0, 2, 5}) {
            ++rep.instances;
            const std::string tag = "fortissimo(" + std::to_string(n) + "," + std::to_string(c) + ")";
            try {
                auto fm = make_fortissimo(n, c);
                auto pool = fortissimo_pool(fm);
                auto s = fortissimo_strategy(fm);
                auto spec = make_spec(GameKind::rothberger(), fm.model, pool, c + 1);
                if (!certify(spec, s, {o.node_budget}).certified)
                    rep.violations.push_back(tag + ": not certified at horizon c+1");
                if (n > c + 1) {
                    if (c == 0) {
                        rep.notes.push_back(tag + ": horizon 0 is the empty play, which leaves X uncovered");
                    } else {
                        spec.horizon = c;
                        auto r = certify(spec, s, {o.node_budget});
                        if (r.certified || !r.counterplay || judge(spec, *r.counterplay) != Side::One)
                            rep.violations.push_back(tag + ": no counterplay at horizon c");
                    }
                }
            } catch (const std::exception& e) {
                rep.violations.push_back(tag + ": " + e.what());
            }
        }
}

void check_refinement(const SuiteOptions& o, CheckReport& rep) {
    const std::size_t count = std::max<std::size_t>(30, o.instances / 6);
    std::size_t empty_ideal = 0;
    each_instance(rep, count, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 9, i);
        const bool with_ideal = i % 3 != 2;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200) throw Error("no instance with a winning base strategy");
            const int n = 3 + static_cast<int>(below(rng, 2));
            SpaceModel base = random_model(rng(), n, 3);
            if (with_ideal) {
                base.small_ideal = subsets_of(PointSet::singleton(static_cast<int>(below(rng, static_cast<std::size_t>(n)))));
            } else {
                base.small_ideal = {PointSet{}};
            }
            auto inst = make_refined_instance(std::make_shared<const SpaceModel>(base));
            std::vector<Move> pool;
            for (const auto& c : refined_pool(inst)) pool.push_back(Move::cover(c));
            const int h = 1 + static_cast<int>(below(rng, 2));
            auto bspec = base_spec_for(inst, pool, h);
            auto rho = solve(bspec, {o.node_budget, true});
            if (rho.winner != Side::Two) continue;
            const int q = 1 + static_cast<int>(below(rng, 2));
            const int period = 1 + static_cast<int>(below(rng, 3));
            const int rh = refined_horizon(h, max_queued_points(inst, pool), q);
            auto refined = make_spec(GameKind::menger(), inst.refined, pool, rh);
            auto s = refine_menger_strategy(bspec, rho.strategy, inst, q, period);
            const std::string tag = describe_instance(refined);
            if (!certify(refined, s, {o.node_budget}).certified)
                rep.violations.push_back(tag + ": refined strategy not certified at horizon " + std::to_string(rh));
            if (!with_ideal) {
                ++empty_ideal;
                for (const Move& u : pool) {
                    auto t = play(refined, constant_strategy(u), s);
                    auto tb = play(bspec, constant_strategy(u), rho.strategy);
                    PointSet even;
                    for (std::size_t k = 0; 2 * k < t.innings.size() && k < tb.innings.size(); ++k) {
                        even |= t.innings[2 * k].two.set;
                        if (even != tb.covered_after[k]) {
                            rep.violations.push_back(tag + ": even inning " + std::to_string(2 * k) +
                                                     " differs from the base play");
                            break;
                        }
                    }
                }
            }
            return;
        }
    });
    rep.notes.push_back(std::to_string(empty_ideal) + " instances with an empty ideal compared against the base play");
}

// Definition-level derivative iteration.
std::pair<bool, int> brute_scattered(const FiniteSpace& sp) {
    PointSet a = sp.points();
    int steps = 0;
    while (!a.empty()) {
        PointSet isolated;
        a.for_each([&](int x) {
            for (PointSet u : sp.opens())
                if ((u & a) == PointSet::singleton(x)) {
                    isolated.insert(x);
                    break;
                }
        });
        if (isolated.empty()) return {false, steps};
        a = a - isolated;
        ++steps;
    }
    return {true, steps};
}

void check_scattered(const SuiteOptions& o, CheckReport& rep) {
    std::size_t scattered = 0;
    each_instance(rep, o.instances, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 10, i);
        SpaceModel m = i % 5 == 4 ? make_model(chain_space(1 + static_cast<int>(below(rng, 6))), "chain")
                                  : random_model(rng(), 1 + static_cast<int>(below(rng, 6)), 2 + static_cast<int>(below(rng, 3)));
        auto [bs, rank] = brute_scattered(m.space);
        auto sc = is_scattered(m.space);
        auto spec = make_spec(GameKind::rothberger(), m, {}, m.point_count());
        if (sc.scattered != bs || (bs && sc.cb_rank != rank))
            rep.violations.push_back(describe_instance(spec) + ": is_scattered disagrees with derivative iteration");
        if (!sc.scattered) return;
        ++scattered;
        if (!certify(spec, scattered_rank_strategy(m), {o.node_budget}).certified)
            rep.violations.push_back(describe_instance(spec) + ": scattered_rank not certified");
    });
    rep.notes.push_back(std::to_string(scattered) + " scattered spaces");
}

void check_self_consistency(const SuiteOptions& o, CheckReport& rep) {
    each_instance(rep, o.instances, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 11, i);
        GameSpec spec = corpus_spec(rng, i);
        SolveOptions so{o.node_budget, true};
        auto sol = solve(spec, so);
        if (!certify(spec, sol.strategy, {o.node_budget}).certified)
            rep.violations.push_back(describe_instance(spec) + ": solver strategy not certified");
        const int n = sufficient_horizon(spec);
        GameSpec a = spec, b = spec;
        a.horizon = n;
        b.horizon = n + 1;
        if (solve(a, so).winner != solve(b, so).winner)
            rep.violations.push_back(describe_instance(spec) + ": winner changes between h=n and h=n+1");
    });
}

void check_classifier(const SuiteOptions& o, CheckReport& rep) {
    const std::size_t count = std::max<std::size_t>(200, o.instances);
    each_instance(rep, count, [&](std::size_t i) {
        auto rng = rng_for(o.seed, 12, i);
        SpaceModel m = small_model(rng);
        const auto& opens = m.space.opens();
        std::vector<PointSet> els;
        const std::size_t k = 1 + below(rng, 4);
        for (std::size_t j = 0; j < k; ++j) els.push_back(opens[below(rng, opens.size())]);
        PointSet u = union_of(els);
        for (PointSet left = m.points() - u; !left.empty(); left = m.points() - u) {
            els.push_back(minimal_open_containing(m.space, PointSet::singleton(left.min())));
            u |= els.back();
        }
        CoverFamily fam = CoverFamily::dedup(els);
        const std::uint64_t all_bits = m.points().bits();
        m.compact_pool.clear();
        for (std::size_t j = below(rng, 4); j > 0; --j) m.compact_pool.push_back(PointSet(rng() & all_bits));
        std::vector<PointSet> rp = m.compact_pool;
        for (std::size_t j = below(rng, 3); j > 0; --j) rp.push_back(PointSet(rng() & all_bits));
        m.rothberger_pool = rp;
        const std::string tag = "instance " + std::to_string(i) + " " + fam.str();
        if (!classify(m, finite_union_closure(m, fam)).contains(CoverClass::K))
            rep.violations.push_back(tag + ": union closure is not a k-cover");
        const auto cls = classify(m, fam);
        if (cls.contains(CoverClass::R) && !cls.contains(CoverClass::K))
            rep.violations.push_back(tag + ": R-cover that is not a k-cover");
    });
}

struct CheckDef {
    int id;
    const char* name;
    void (*run)(const SuiteOptions&, CheckReport&);
};

const CheckDef kChecks[] = {
    {1, "duality flip", check_duality_flip},
    {2, "translation soundness", check_translation},
    {3, "Menger / G1(Ostar,O) equivalence", check_menger_bridge},
    {4, "Alster diagonal selection", check_diagonal},
    {5, "Menger to Alster extraction", check_menger_extraction},
    {6, "point-open to Gdelta extraction", check_pointopen_extraction},
    {7, "Cantor witness", check_cantor},
    {8, "fortissimo model", check_fortissimo},
    {9, "refinement combinator", check_refinement},
    {10, "scattered rank strategy", check_scattered},
    {11, "engine / solver self-consistency", check_self_consistency},
    {12, "classifier laws", check_classifier},
};

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
    SuiteReport report;
    for (const auto& def : kChecks) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), def.id) == options.only.end())
            continue;
        CheckReport rep;
        rep.id = def.id;
        rep.name = def.name;
        const auto start = Clock::now();
        try {
            def.run(options, rep);
        } catch (const std::exception& e) {
            rep.violations.push_back(std::string("aborted: ") + e.what());
        }
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (options.on_check) options.on_check(rep);
        report.checks.push_back(std::move(rep));
    }
    return report;
}

}  // namespace selgames
