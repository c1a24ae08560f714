#include "selgames/io.hpp"

#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

#include "selgames/constructions.hpp"
#include "selgames/duality.hpp"

namespace selgames::io {

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    return v.get<int>();
}

std::vector<PointSet> sets_from_json(const json& j, int point_count, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of point arrays");
    std::vector<PointSet> out;
    for (const auto& e : j) out.push_back(point_set_from_json(e, point_count));
    return out;
}

}  // namespace

json to_json(PointSet s) {
    json a = json::array();
    s.for_each([&](int x) { a.push_back(x); });
    return a;
}

PointSet point_set_from_json(const json& j, int point_count) {
    if (!j.is_array()) throw ParseError("a set must be an array of integers");
    PointSet s;
    int last = -1;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("a set must be an array of integers");
        const int x = e.get<int>();
        if (x < 0 || x >= point_count)
            throw InvariantError("invariant violated: point " + std::to_string(x) + " outside the point set");
        if (x <= last) throw InvariantError("invariant violated: sets are sorted arrays of distinct points");
        last = x;
        s.insert(x);
    }
    return s;
}

json to_json(const std::vector<PointSet>& sets) {
    json a = json::array();
    for (PointSet s : sets) a.push_back(to_json(s));
    return a;
}

json model_to_json(const SpaceModel& model) {
    json j;
    j["point_count"] = model.point_count();
    if (model.space.enumerable()) {
        j["opens"] = to_json(model.space.opens());
    } else {
        if (model.point_count() > 20) throw Error("space too large to enumerate its opens");
        std::vector<PointSet> opens;
        const std::uint64_t n = std::uint64_t{1} << model.point_count();
        for (std::uint64_t b = 0; b < n; ++b)
            if (model.space.is_open(PointSet(b))) opens.push_back(PointSet(b));
        j["opens"] = to_json(opens);
    }
    j["compact_pool"] = to_json(model.compact_pool);
    j["small_ideal"] = to_json(model.small_ideal);
    if (model.rothberger_pool) j["rothberger_pool"] = to_json(*model.rothberger_pool);
    j["label"] = model.label;
    return j;
}

SpaceModel model_from_json(const json& j) {
    const int n = int_field(j, "point_count");
    if (n < 0 || n > kMaxPoints) throw InvariantError("invariant violated: point_count must lie in 0..64");
    auto opens = sets_from_json(field(j, "opens"), n, "opens");
    std::set<PointSet> distinct(opens.begin(), opens.end());
    if (distinct.size() != opens.size()) throw InvariantError("invariant violated: opens are distinct");
    SpaceModel m = make_model(FiniteSpace(n, std::move(opens)), j.value("label", std::string{}));
    if (j.contains("compact_pool")) m.compact_pool = sets_from_json(j["compact_pool"], n, "compact_pool");
    if (j.contains("small_ideal")) m.small_ideal = sets_from_json(j["small_ideal"], n, "small_ideal");
    if (j.contains("rothberger_pool"))
        m.rothberger_pool = sets_from_json(j["rothberger_pool"], n, "rothberger_pool");
    validate_model(m);
    return m;
}

json cover_to_json(const CoverFamily& fam) { return {{"elements", to_json(fam.elements())}}; }

json cover_to_json(const GdeltaCover& cover) {
    json els = json::array(), fac = json::array();
    for (const auto& e : cover) {
        els.push_back(to_json(e.target));
        fac.push_back(to_json(e.factors));
    }
    return {{"elements", els}, {"factors", fac}};
}

CoverInput cover_from_json(const json& j, int point_count) {
    auto elements = sets_from_json(field(j, "elements"), point_count, "elements");
    if (!j.contains("factors")) return CoverFamily(std::move(elements));
    const json& f = j["factors"];
    if (!f.is_array() || f.size() != elements.size())
        throw ParseError("factors must give one factor list per element");
    std::vector<GdeltaPresentedSet> out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        auto g = GdeltaPresentedSet::of(sets_from_json(f[i], point_count, "factors"));
        if (g.target != elements[i])
            throw InvariantError("invariant violated: element " + std::to_string(i) +
                                 " is not the intersection of its factors");
        out.push_back(std::move(g));
    }
    return GdeltaCover(std::move(out));
}

json move_to_json(const Move& m) {
    json j = {{"set", to_json(m.set)}};
    if (!m.members.empty()) j["members"] = to_json(m.members);
    if (!m.factors.empty()) {
        json f = json::array();
        for (const auto& fs : m.factors) f.push_back(to_json(fs));
        j["factors"] = f;
    }
    return j;
}

Move move_from_json(const json& j) {
    Move m;
    m.set = point_set_from_json(field(j, "set"));
    if (j.contains("members")) m.members = sets_from_json(j["members"], kMaxPoints, "members");
    if (j.contains("factors"))
        for (const auto& f : j["factors"]) m.factors.push_back(sets_from_json(f, kMaxPoints, "factors"));
    return m;
}

json class_set_to_json(const ClassSet& classes) { return class_names(classes); }

json spec_to_json(const GameSpec& spec, const std::string& space_ref) {
    json j;
    j["kind"] = spec.kind.tag == GameTag::G1 ? std::string("G1") : spec.kind.str();
    if (spec.kind.tag == GameTag::G1) j["g1_params"] = {to_string(spec.kind.a), to_string(spec.kind.b)};
    j["space_ref"] = space_ref;
    json pool = json::array();
    for (const Move& m : spec.one_pool) pool.push_back(move_to_json(m));
    j["one_pool"] = pool;
    j["horizon"] = spec.horizon;
    return j;
}

GameSpec spec_from_json(const json& j, const std::filesystem::path& base_dir) {
    const json& kind_j = field(j, "kind");
    if (!kind_j.is_string()) throw ParseError("field 'kind' must be a string");
    std::optional<std::pair<CoverClass, CoverClass>> g1;
    if (j.contains("g1_params")) {
        const json& p = j["g1_params"];
        if (!p.is_array() || p.size() != 2) throw ParseError("g1_params must be a pair of class names");
        g1 = {cover_class_from_string(p[0].get<std::string>()), cover_class_from_string(p[1].get<std::string>())};
    }
    GameKind kind = game_kind_from_string(kind_j.get<std::string>(), g1);
    SpaceModel model;
    if (j.contains("space")) {
        model = model_from_json(j["space"]);
    } else {
        const std::string ref = field(j, "space_ref").get<std::string>();
        if (ref.rfind("catalog:", 0) == 0)
            model = catalog_space(ref.substr(8));
        else
            model = model_from_json(read_file(base_dir / ref));
    }
    const int h = int_field(j, "horizon");
    std::vector<Move> pool;
    auto it = j.find("one_pool");
    if (it == j.end() || (it->is_string() && it->get<std::string>() == "default")) {
        pool = default_one_pool(kind, model);
    } else {
        if (!it->is_array()) throw ParseError("one_pool must be an array of moves or \"default\"");
        for (const auto& m : *it) pool.push_back(move_from_json(m));
    }
    return make_spec(kind, std::move(model), std::move(pool), h);
}

SpaceModel catalog_space(const std::string& name) {
    static const std::regex re(R"(\s*([a-z_]+)\s*\(\s*([0-9,\s]*)\)\s*)");
    std::smatch mt;
    if (!std::regex_match(name, mt, re)) throw ParseError("unknown catalog space '" + name + "'");
    std::vector<long long> args;
    std::stringstream ss(mt[2].str());
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        args.push_back(std::stoll(tok));
    }
    const std::string kind = mt[1].str();
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw ParseError("catalog space '" + kind + "' takes " + std::to_string(k) + " arguments");
    };
    auto small = [](long long v) {
        if (v < 1 || v >= kMaxPoints) throw RangeError("catalog size out of range");
        return static_cast<int>(v);
    };
    SpaceModel m;
    if (kind == "discrete") {
        need(1);
        m = make_model(discrete_space(small(args[0])));
    } else if (kind == "indiscrete") {
        need(1);
        m = make_model(indiscrete_space(small(args[0])));
    } else if (kind == "chain") {
        need(1);
        m = make_model(chain_space(small(args[0])));
    } else if (kind == "random") {
        need(3);
        m = random_model(static_cast<std::uint64_t>(args[0]), small(args[1]), small(args[2]));
    } else if (kind == "fortissimo") {
        need(2);
        m = *make_fortissimo(small(args[0]), static_cast<int>(args[1])).model;
    } else if (kind == "refined") {
        need(2);
        const int n = small(args[1]);
        auto base = random_model(static_cast<std::uint64_t>(args[0]), n, 3);
        base.small_ideal = subsets_of(PointSet::singleton(n - 1));
        m = *make_refined_instance(std::make_shared<const SpaceModel>(std::move(base))).refined;
    } else {
        throw ParseError("unknown catalog space '" + kind + "'");
    }
    m.label = kind + "(" + mt[2].str() + ")";
    return m;
}

std::vector<CatalogEntry> catalog() {
    return {
        {"space", "discrete(n)", "every subset open"},
        {"space", "indiscrete(n)", "only the empty set and the whole space open"},
        {"space", "chain(n)", "opens {0..k-1}; scattered of rank n"},
        {"space", "random(seed,n,k)", "topology generated by k random subbasic sets"},
        {"space", "fortissimo(N,c)", "N isolated points plus a special point; basic covers with co-size <= c"},
        {"space", "refined(seed,n)", "random base refined by the ideal of subsets of the last point"},
        {"strategy", "countable_enumeration", "Two: element containing the least uncovered point"},
        {"strategy", "scattered_rank", "Two: element containing an uncovered point of highest rank"},
        {"strategy", "first_element", "Two: first element of One's cover"},
        {"strategy", "least_uncovered_point", "One: least uncovered point"},
        {"strategy", "uncovered_compact", "One: first compact not yet covered"},
        {"strategy", "minimal_open", "Two: minimal open around One's point or compact"},
        {"strategy", "constant", "One: the same move every inning (params.move)"},
        {"strategy", "fortissimo", "Two: cover the special point first, then enumerate"},
        {"construction", "diagonal", "Alster diagonal selection over a list of covers"},
        {"construction", "menger-alster", "Alster subcover extracted from a Two-Menger strategy"},
        {"construction", "pointopen-gdelta", "Gdelta subcover extracted from a One-PointOpen strategy"},
        {"construction", "cantor(d)", "uncovered cylinder against every Two line of depth d"},
        {"construction", "refine", "refinement of a Menger strategy along a small ideal"},
    };
}

namespace {

json table_to_json(const StrategyTable& table) {
    json rows = json::array();
    for (const auto& [k, mv] : table) {
        json r = {{"covered", to_json(k.covered)}, {"remaining", k.remaining}};
        if (k.pending) r["pending"] = move_to_json(*k.pending);
        r["move"] = move_to_json(mv);
        rows.push_back(std::move(r));
    }
    return rows;
}

StrategyTable table_from_json(const json& rows) {
    if (!rows.is_array()) throw ParseError("table must be an array of entries");
    StrategyTable t;
    for (const auto& r : rows) {
        TableKey k{point_set_from_json(field(r, "covered")), int_field(r, "remaining"), std::nullopt};
        if (r.contains("pending")) k.pending = move_from_json(r["pending"]);
        t[std::move(k)] = move_from_json(field(r, "move"));
    }
    return t;
}

GameSpec source_game(const json& j, const std::filesystem::path& base_dir) {
    return spec_from_json(field(j, "source_game"), base_dir);
}

}  // namespace

json strategy_to_json(const Strategy& s) {
    json j = {{"side", to_string(s.side())}, {"name", s.name()}};
    if (const auto* t = strategy_table(s)) {
        j["table"] = table_to_json(*t);
        return j;
    }
    json d = s.describe();
    j["rule"] = s.name();
    j["params"] = d.contains("params") ? d["params"] : json::object();
    return j;
}

Strategy strategy_from_json(const json& j, const GameSpec& spec, const std::filesystem::path& base_dir) {
    const Side side = side_from_string(field(j, "side").get<std::string>());
    const std::string name = j.value("name", std::string("strategy"));
    if (j.contains("table")) return make_table_strategy(side, name, table_from_json(j["table"]));
    const std::string rule = field(j, "rule").get<std::string>();
    const json params = j.value("params", json::object());
    Strategy s;
    if (rule == "countable_enumeration") s = countable_enumeration_strategy(*spec.model);
    else if (rule == "scattered_rank") s = scattered_rank_strategy(*spec.model);
    else if (rule == "first_element") s = first_element_strategy();
    else if (rule == "least_uncovered_point") s = least_uncovered_point_strategy();
    else if (rule == "uncovered_compact") s = uncovered_compact_strategy();
    else if (rule == "minimal_open") s = minimal_open_strategy();
    else if (rule == "constant") s = constant_strategy(move_from_json(field(params, "move")));
    else if (rule == "fortissimo") {
        static const std::regex re(R"(fortissimo\(\s*(\d+)\s*,\s*(\d+)\s*\))");
        std::smatch mt;
        if (!std::regex_match(spec.model->label, mt, re))
            throw ParseError("rule 'fortissimo' needs a fortissimo(N,c) space");
        s = fortissimo_strategy(make_fortissimo(std::stoi(mt[1].str()), std::stoi(mt[2].str())));
    } else if (rule == "translate_easy" || rule == "translate_hard" || rule == "menger_equivalence") {
        const GameSpec src = source_game(j, base_dir);
        const Strategy inner = strategy_from_json(field(j, "source"), src, base_dir);
        if (rule == "translate_easy") s = translate_easy(inner, src);
        else if (rule == "translate_hard") s = translate_hard(inner, src);
        else s = menger_equivalence(inner, src);
    } else {
        throw ParseError("unknown strategy rule '" + rule + "'");
    }
    if (s.side() != side)
        throw InvariantError("invariant violated: rule '" + rule + "' plays for " + std::string(to_string(s.side())));
    return s;
}

StrategyTable tabulate(const GameSpec& spec, const Strategy& s) {
    if (s.memory() != Memory::Stationary && s.memory() != Memory::Positional)
        throw Error("only stationary or positional strategies can be tabulated");
    StrategyTable table;
    const PointSet all = spec.points();
    std::vector<Inning> hist;
    std::function<void(PointSet)> walk = [&](PointSet covered) {
        const int inning = static_cast<int>(hist.size());
        if (covered == all || inning >= spec.horizon) return;
        const int rem = spec.horizon - inning;
        auto descend = [&](const Move& one, const Move& two) {
            hist.push_back({one, two});
            walk(covered | two.set);
            hist.pop_back();
        };
        if (s.side() == Side::One) {
            TableKey k{covered, rem, std::nullopt};
            if (table.contains(k)) return;
            Move one = s.choose(PlayContext{&spec, hist, nullptr, covered, inning});
            table[k] = one;
            for (const Move& two : two_replies(spec, one)) descend(one, two);
        } else {
            for (const Move& one : spec.one_pool) {
                TableKey k{covered, rem, one};
                if (table.contains(k)) continue;
                Move two = s.choose(PlayContext{&spec, hist, &one, covered, inning});
                table[k] = two;
                descend(one, two);
            }
        }
    };
    walk(PointSet{});
    return table;
}

json derived_strategy_to_json(const std::string& rule, const Strategy& source, const GameSpec& source_spec,
                              const std::string& space_ref) {
    Side side = source.side();
    if (rule == "translate_easy" || rule == "translate_hard") side = opponent(side);
    json src = strategy_to_json(source);
    return {{"side", to_string(side)},
            {"name", rule + "(" + source.name() + ")"},
            {"rule", rule},
            {"source", std::move(src)},
            {"source_game", spec_to_json(source_spec, space_ref)}};
}

json witness_map(const Strategy& source_two, const GameSpec& source_spec, const GameSpec& dual) {
    constexpr std::size_t kMaxEntries = 20000;
    const Strategy one = translate_hard(source_two, source_spec);
    json entries = json::array();
    bool truncated = false;
    std::vector<Inning> dual_hist, src_hist;
    const PointSet all = dual.points();
    std::function<void(PointSet)> walk = [&](PointSet covered) {
        const int inning = static_cast<int>(dual_hist.size());
        if (covered == all || inning >= dual.horizon) return;
        if (entries.size() >= kMaxEntries) {
            truncated = true;
            return;
        }
        const Move cover = one.choose(PlayContext{&dual, dual_hist, nullptr, covered, inning});
        json hist = json::array();
        for (const auto& inn : dual_hist) hist.push_back(to_json(inn.two.set));
        json ws = json::array();
        std::vector<std::pair<Move, Move>> next;
        for (const Move& pick : two_replies(dual, cover)) {
            auto w = hard_witness(source_two, source_spec, src_hist, pick);
            ws.push_back({{"pick", move_to_json(pick)}, {"source_move", w ? move_to_json(*w) : json(nullptr)}});
            if (w) next.emplace_back(pick, *w);
        }
        entries.push_back({{"history", hist}, {"one", move_to_json(cover)}, {"witnesses", ws}});
        for (const auto& [pick, w] : next) {
            dual_hist.push_back({cover, pick});
            src_hist.push_back({w, pick});
            walk(covered | pick.set);
            dual_hist.pop_back();
            src_hist.pop_back();
        }
    };
    walk(PointSet{});
    return {{"entries", entries}, {"truncated", truncated}};
}

json transcript_to_json(const GameSpec& spec, const Transcript& t) {
    json inns = json::array();
    for (std::size_t i = 0; i < t.innings.size(); ++i)
        inns.push_back({{"one", move_to_json(t.innings[i].one)},
                        {"two", move_to_json(t.innings[i].two)},
                        {"covered", to_json(t.covered_after[i])}});
    return {{"innings", inns}, {"winner", to_string(judge(spec, t))}};
}

json solve_result_to_json(const SolveResult& r, const std::string& strategy_ref) {
    return {{"winner", to_string(r.winner)},
            {"strategy_ref", strategy_ref},
            {"stats",
             {{"states_expanded", r.stats.states_expanded},
              {"memo_hits", r.stats.memo_hits},
              {"elapsed_ms", r.stats.elapsed_ms}}}};
}

json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("'" + path.string() + "': " + e.what());
    }
}

void write_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

}  // namespace selgames::io
