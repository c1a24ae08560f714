#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "selgames/constructions.hpp"
#include "selgames/duality.hpp"
#include "selgames/io.hpp"
#include "selgames/solver.hpp"
#include "selgames/suite.hpp"

namespace fs = std::filesystem;
using namespace selgames;
using io::json;

namespace {

struct Flags {
    std::string game, space, pair, side, out;
    std::vector<std::string> covers, strategies;
    std::uint64_t seed = 7;
    std::size_t instances = 200;
    int horizon = 0;
    std::uint64_t budget = 10'000'000;
};

struct CheckFailed {};

void emit(const Flags& f, const json& j) {
    if (f.out.empty())
        std::cout << j.dump(2) << '\n';
    else
        io::write_file(f.out, j);
}

fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

json game_json(const Flags& f) {
    if (f.game.empty()) throw io::ParseError("--game is required");
    return io::read_file(f.game);
}

GameSpec load_game(const Flags& f) {
    GameSpec spec = io::spec_from_json(game_json(f), dir_of(f.game));
    if (f.horizon > 0) spec.horizon = f.horizon;
    return spec;
}

SpaceModel load_space(const std::string& ref) {
    if (ref.rfind("catalog:", 0) == 0) return io::catalog_space(ref.substr(8));
    return io::model_from_json(io::read_file(ref));
}

Strategy load_strategy(const std::string& path, const GameSpec& spec) {
    return io::strategy_from_json(io::read_file(path), spec, dir_of(path));
}

// The game file's space reference, rewritten relative to where the output goes.
json space_ref_for_output(const Flags& f) {
    json g = game_json(f);
    if (g.contains("space")) return json{{"space", g["space"]}};
    std::string ref = g.at("space_ref").get<std::string>();
    if (ref.rfind("catalog:", 0) != 0 && !f.out.empty()) {
        const fs::path target = fs::absolute(dir_of(f.game) / ref);
        ref = fs::relative(target, fs::absolute(dir_of(f.out).empty() ? fs::path(".") : dir_of(f.out))).string();
    }
    return json{{"space_ref", ref}};
}

json game_to_json(const GameSpec& spec, const json& where) {
    json j = io::spec_to_json(spec, where.value("space_ref", std::string{}));
    if (where.contains("space")) {
        j.erase("space_ref");
        j["space"] = where["space"];
    }
    return j;
}

std::string ref_string(const json& where) { return where.value("space_ref", std::string("inline")); }

int cmd_solve(const Flags& f) {
    const GameSpec spec = load_game(f);
    auto r = solve(spec, {f.budget, true});
    json strat = io::strategy_to_json(r.strategy);
    std::string ref;
    if (!f.out.empty()) {
        fs::path sp = fs::path(f.out);
        sp.replace_extension(".strategy.json");
        io::write_file(sp, strat);
        ref = sp.filename().string();
        emit(f, io::solve_result_to_json(r, ref));
    } else {
        json j = io::solve_result_to_json(r, ref);
        j["strategy"] = strat;
        emit(f, j);
    }
    return 0;
}

int cmd_certify(const Flags& f) {
    if (f.strategies.size() != 1) throw io::ParseError("certify takes exactly one --strategy");
    const GameSpec spec = load_game(f);
    const Strategy s = load_strategy(f.strategies[0], spec);
    auto r = certify(spec, s, {f.budget});
    if (r.certified) {
        std::cout << "Certified\n";
        return 0;
    }
    std::cout << "CounterPlay\n";
    emit(f, io::transcript_to_json(spec, *r.counterplay));
    return 1;
}

Strategy default_opponent(const GameSpec& spec, Side side) {
    if (side == Side::Two) return one_plays_covers(spec.kind) ? first_element_strategy() : minimal_open_strategy();
    if (spec.kind.tag == GameTag::PointOpen) return least_uncovered_point_strategy();
    if (!one_plays_covers(spec.kind)) return uncovered_compact_strategy();
    return constant_strategy(spec.one_pool.at(0));
}

int cmd_play(const Flags& f) {
    const GameSpec spec = load_game(f);
    std::optional<Strategy> one, two;
    for (const auto& p : f.strategies) {
        Strategy s = load_strategy(p, spec);
        (s.side() == Side::One ? one : two) = s;
    }
    if (!one) one = default_opponent(spec, Side::One);
    if (!two) two = default_opponent(spec, Side::Two);
    emit(f, io::transcript_to_json(spec, play(spec, *one, *two)));
    return 0;
}

int cmd_classify(const Flags& f) {
    if (f.space.empty() || f.covers.size() != 1) throw io::ParseError("classify needs --space and one --cover");
    const SpaceModel m = load_space(f.space);
    auto c = io::cover_from_json(io::read_file(f.covers[0]), m.point_count());
    ClassSet cls = std::visit([&](const auto& fam) { return classify(m, fam); }, c);
    emit(f, io::class_set_to_json(cls));
    return 0;
}

int cmd_dualize(const Flags& f) {
    const GameSpec spec = load_game(f);
    const DualityPair pair = f.pair.empty() ? pair_of(spec.kind).value() : duality_pair_from_string(f.pair);
    const GameSpec dual = dual_spec(spec, pair);
    const json where = space_ref_for_output(f);
    json out = {{"game", game_to_json(dual, where)}};
    std::optional<Strategy> s;
    if (!f.strategies.empty()) {
        s = load_strategy(f.strategies[0], spec);
    } else if (!f.side.empty()) {
        const Side side = side_from_string(f.side);
        auto r = solve(spec, {f.budget, true});
        if (r.winner != side) {
            std::cerr << "side " << f.side << " has no winning strategy in the source game\n";
            return 1;
        }
        s = r.strategy;
    }
    if (s) {
        if (!f.side.empty() && side_from_string(f.side) != s->side())
            throw io::ParseError("--side does not match the strategy's side");
        std::string rule;
        if (pair == DualityPair::MengerOstar) rule = "menger_equivalence";
        else rule = s->side() == Side::One ? "translate_easy" : "translate_hard";
        json t = io::derived_strategy_to_json(rule, *s, spec, ref_string(where));
        if (where.contains("space")) {
            t["source_game"].erase("space_ref");
            t["source_game"]["space"] = where["space"];
        }
        if (rule == "translate_hard") t["witness_map"] = io::witness_map(*s, spec, dual);
        out["strategy"] = t;
    }
    emit(f, out);
    return 0;
}

json provenance_menger(const MengerExtraction& ex) {
    json steps = json::array();
    for (const auto& st : ex.steps)
        steps.push_back({{"history", st.history},
                         {"chosen", st.chosen},
                         {"kernel", io::to_json(st.kernel)},
                         {"witnesses", st.witnesses}});
    return steps;
}

json provenance_tree(const GdeltaExtraction& ex) {
    json nodes = json::array();
    for (const auto& n : ex.nodes) nodes.push_back({{"path", n.path}, {"chosen", n.chosen}, {"point", n.point}});
    return nodes;
}

GdeltaCover as_gdelta(const io::CoverInput& c) {
    if (auto g = std::get_if<GdeltaCover>(&c)) return *g;
    return GdeltaCover::from_opens(std::get<CoverFamily>(c));
}

int cmd_extract(const Flags& f) {
    if (f.game.empty()) {
        // Diagonal selection over the given covers.
        if (f.space.empty() || f.covers.empty()) throw io::ParseError("extract needs --game, or --space with --cover");
        const SpaceModel m = load_space(f.space);
        std::vector<GdeltaCover> covers;
        for (const auto& c : f.covers) covers.push_back(as_gdelta(io::cover_from_json(io::read_file(c), m.point_count())));
        const int rounds = f.horizon > 0 ? f.horizon : m.point_count();
        auto sel = alster_diagonal_selection(m, covers, rounds);
        std::vector<GdeltaPresentedSet> picks = sel.picks;
        json prov = json::array();
        for (std::size_t n = 0; n < sel.picks.size(); ++n)
            prov.push_back({{"cover", n % covers.size()}, {"index", sel.indices[n]}, {"choice", sel.choices[n]}});
        std::vector<GdeltaPresentedSet> unique_picks;
        for (const auto& p : picks)
            if (std::find(unique_picks.begin(), unique_picks.end(), p) == unique_picks.end()) unique_picks.push_back(p);
        emit(f, {{"subcover", io::cover_to_json(GdeltaCover(unique_picks))}, {"provenance", prov}});
        return 0;
    }
    const GameSpec spec = load_game(f);
    if (f.strategies.size() != 1 || f.covers.size() != 1)
        throw io::ParseError("extract needs one --strategy and one --cover");
    const Strategy s = load_strategy(f.strategies[0], spec);
    const GdeltaCover w = as_gdelta(io::cover_from_json(io::read_file(f.covers[0]), spec.model->point_count()));
    json out;
    bool covers = false;
    std::optional<Transcript> falsified;
    if (spec.kind.tag == GameTag::Menger) {
        auto ex = extract_alster_subcover_from_menger(spec, s, w);
        out = {{"subcover", io::cover_to_json(GdeltaCover(ex.subfamily))}, {"provenance", provenance_menger(ex)}};
        covers = ex.covers;
        if (!covers) falsified = falsify_menger_extraction(spec, s, w);
    } else if (spec.kind.tag == GameTag::PointOpen) {
        auto ex = extract_gdelta_subcover_from_pointopen(spec, s, w);
        out = {{"subcover", io::cover_to_json(GdeltaCover(ex.subfamily))}, {"provenance", provenance_tree(ex)}};
        covers = ex.covers;
        if (!covers) falsified = falsify_pointopen_extraction(spec, s, w);
    } else {
        throw io::ParseError("extract needs a Menger or PointOpen game");
    }
    out["covers"] = covers;
    if (falsified) out["counterplay"] = io::transcript_to_json(spec, *falsified);
    emit(f, out);
    return covers ? 0 : 1;
}

int cmd_catalog(const Flags& f) {
    if (!f.space.empty()) {
        emit(f, io::model_to_json(load_space(f.space.rfind("catalog:", 0) == 0 ? f.space : "catalog:" + f.space)));
        return 0;
    }
    for (const auto& e : io::catalog()) std::cout << e.kind << '\t' << e.name << '\t' << e.summary << '\n';
    return 0;
}

int cmd_suite(const Flags& f) {
    SuiteOptions o;
    o.seed = f.seed;
    o.instances = f.instances;
    o.node_budget = f.budget;
    o.on_check = [](const CheckReport& c) {
        std::cerr << (c.passed() ? "PASS " : "FAIL ") << c.id << ' ' << c.name << " (" << c.instances
                  << " instances, " << c.violations.size() << " violations)\n";
    };
    auto rep = run_suite(o);
    emit(f, suite_report_to_json(rep));
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Selection games on finite spaces"};
    app.require_subcommand(1, 1);
    Flags f;
    auto game = [&](CLI::App* c) { c->add_option("--game", f.game, "game file"); };
    auto space = [&](CLI::App* c) { c->add_option("--space", f.space, "space file or catalog:<name>"); };
    auto strategy = [&](CLI::App* c) { c->add_option("--strategy", f.strategies, "strategy file"); };
    auto cover = [&](CLI::App* c) { c->add_option("--cover", f.covers, "cover file"); };
    auto horizon = [&](CLI::App* c) { c->add_option("--horizon", f.horizon, "override the horizon")->check(CLI::PositiveNumber); };
    auto budget = [&](CLI::App* c) { c->add_option("--budget", f.budget, "node budget"); };
    auto out = [&](CLI::App* c) { c->add_option("--out", f.out, "output file"); };

    auto* solve_c = app.add_subcommand("solve", "solve a game by backward induction");
    game(solve_c), horizon(solve_c), budget(solve_c), out(solve_c);
    auto* certify_c = app.add_subcommand("certify", "check a strategy against every opposing line");
    game(certify_c), strategy(certify_c), horizon(certify_c), budget(certify_c), out(certify_c);
    auto* play_c = app.add_subcommand("play", "play two strategies against each other");
    game(play_c), strategy(play_c), horizon(play_c), out(play_c);
    auto* classify_c = app.add_subcommand("classify", "cover classes of a family");
    space(classify_c), cover(classify_c), out(classify_c);
    auto* dualize_c = app.add_subcommand("dualize", "dual game and translated strategy");
    game(dualize_c), strategy(dualize_c), budget(dualize_c), out(dualize_c);
    dualize_c->add_option("--pair", f.pair, "duality pair");
    dualize_c->add_option("--side", f.side, "side whose strategy to translate");
    auto* extract_c = app.add_subcommand("extract", "subcover extraction or diagonal selection");
    game(extract_c), space(extract_c), strategy(extract_c), cover(extract_c), horizon(extract_c), out(extract_c);
    auto* catalog_c = app.add_subcommand("catalog", "built-in spaces, strategies and constructions");
    space(catalog_c), out(catalog_c);
    auto* suite_c = app.add_subcommand("suite", "run the acceptance batteries");
    suite_c->add_option("--seed", f.seed, "seed");
    suite_c->add_option("--instances", f.instances, "instances per battery");
    budget(suite_c), out(suite_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*solve_c) return cmd_solve(f);
        if (*certify_c) return cmd_certify(f);
        if (*play_c) return cmd_play(f);
        if (*classify_c) return cmd_classify(f);
        if (*dualize_c) return cmd_dualize(f);
        if (*extract_c) return cmd_extract(f);
        if (*catalog_c) return cmd_catalog(f);
        if (*suite_c) return cmd_suite(f);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
