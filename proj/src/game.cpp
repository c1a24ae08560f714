#include "selgames/game.hpp"

#include "selgames/engine.hpp"

#include <algorithm>

namespace selgames {

std::string_view to_string(Side s) { return s == Side::One ? "One" : "Two"; }

Side side_from_string(std::string_view s) {
    if (s == "One" || s == "one") return Side::One;
    if (s == "Two" || s == "two") return Side::Two;
    throw Error("unknown side '" + std::string(s) + "'");
}

GameKind GameKind::g1(CoverClass a, CoverClass b) {
    const bool a_ok = a == CoverClass::O || a == CoverClass::Ostar || a == CoverClass::K || a == CoverClass::Alster;
    const bool b_ok = b == CoverClass::O || b == CoverClass::Odelta;
    if (!a_ok || !b_ok)
        throw Error("G1 parameters out of range: G1(" + std::string(to_string(a)) + "," +
                    std::string(to_string(b)) + ")");
    return {GameTag::G1, a, b};
}

std::string GameKind::str() const {
    switch (tag) {
        case GameTag::Rothberger: return "Rothberger";
        case GameTag::Menger: return "Menger";
        case GameTag::PointOpen: return "PointOpen";
        case GameTag::CompactOpen: return "CompactOpen";
        case GameTag::CompactGdelta: return "CompactGdelta";
        case GameTag::G1: return "G1(" + std::string(to_string(a)) + "," + std::string(to_string(b)) + ")";
    }
    return "?";
}

GameKind game_kind_from_string(std::string_view name, std::optional<std::pair<CoverClass, CoverClass>> g1) {
    if (name == "Rothberger") return GameKind::rothberger();
    if (name == "Menger") return GameKind::menger();
    if (name == "PointOpen") return GameKind::point_open();
    if (name == "CompactOpen") return GameKind::compact_open();
    if (name == "CompactGdelta") return GameKind::compact_gdelta();
    if (name == "G1") {
        if (!g1) throw Error("G1 game requires g1_params");
        return GameKind::g1(g1->first, g1->second);
    }
    throw Error("unknown game kind '" + std::string(name) + "'");
}

bool one_plays_covers(const GameKind& k) {
    return k.tag == GameTag::Rothberger || k.tag == GameTag::Menger || k.tag == GameTag::G1;
}

Side covering_side(const GameKind& k) { return one_plays_covers(k) ? Side::Two : Side::One; }

Move Move::cover(const CoverFamily& fam) { return {fam.union_set(), fam.elements(), {}}; }

Move Move::cover(const GdeltaCover& cover) {
    Move m;
    for (const auto& e : cover) {
        m.members.push_back(e.target);
        m.factors.push_back(e.factors);
        m.set |= e.target;
    }
    return m;
}

Move Move::sublist(std::vector<PointSet> elems) {
    Move m;
    m.set = union_of(elems);
    m.members = std::move(elems);
    return m;
}

GdeltaCover Move::as_gdelta_cover() const {
    if (factors.size() != members.size()) throw IllegalMove("cover move lacks Gdelta presentations");
    std::vector<GdeltaPresentedSet> els;
    for (std::size_t i = 0; i < members.size(); ++i) els.push_back({members[i], factors[i]});
    return GdeltaCover(std::move(els));
}

std::string Move::str() const {
    if (!members.empty()) {
        std::string s = "[";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) s += ",";
            s += members[i].str();
        }
        return s + "]";
    }
    return set.str();
}

GameSpec make_spec(GameKind kind, SpaceModel model, std::vector<Move> one_pool, int horizon) {
    return make_spec(kind, std::make_shared<const SpaceModel>(std::move(model)), std::move(one_pool), horizon);
}

GameSpec make_spec(GameKind kind, std::shared_ptr<const SpaceModel> model, std::vector<Move> one_pool, int horizon) {
    GameSpec spec{kind, std::move(model), std::move(one_pool), horizon};
    if (spec.one_pool.empty()) spec.one_pool = default_one_pool(kind, *spec.model);
    validate_spec(spec);
    return spec;
}

std::vector<Move> default_one_pool(const GameKind& kind, const SpaceModel& model) {
    std::vector<Move> pool;
    switch (kind.tag) {
        case GameTag::PointOpen:
            for (int x = 0; x < model.point_count(); ++x) pool.push_back(Move::point(x));
            break;
        case GameTag::CompactOpen:
        case GameTag::CompactGdelta: {
            auto ks = model.compact_pool;
            canonicalize(ks);
            for (PointSet k : ks) pool.push_back(Move::compact(k));
            break;
        }
        case GameTag::Rothberger:
        case GameTag::Menger:
            for (const auto& c : irredundant_covers(model)) pool.push_back(Move::cover(c));
            break;
        case GameTag::G1:
            if (kind.a == CoverClass::O) {
                for (const auto& c : irredundant_covers(model)) pool.push_back(Move::cover(c));
            } else if (kind.a == CoverClass::Ostar) {
                std::vector<CoverFamily> closed;
                for (const auto& c : irredundant_covers(model)) closed.push_back(finite_union_closure(model, c));
                std::sort(closed.begin(), closed.end());
                closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
                for (const auto& c : closed) pool.push_back(Move::cover(c));
            } else if (kind.a == CoverClass::K) {
                for (const auto& c : minimal_k_covers(model)) pool.push_back(Move::cover(c));
            } else {
                for (const auto& c : minimal_alster_covers(model)) pool.push_back(Move::cover(c));
            }
            break;
    }
    return pool;
}

void validate_spec(const GameSpec& spec) {
    if (!spec.model) throw InvariantError("invariant violated: game spec has no space model");
    if (spec.horizon < 1) throw InvariantError("invariant violated: horizon must be >= 1");
    if (spec.kind.tag == GameTag::G1) GameKind::g1(spec.kind.a, spec.kind.b);
    for (std::size_t i = 0; i < spec.one_pool.size(); ++i) {
        if (!is_legal_one_move(spec, spec.one_pool[i]))
            throw InvariantError("invariant violated: one_pool entry " + std::to_string(i) + " (" +
                                 spec.one_pool[i].str() + ") is not a legal One move for " + spec.kind.str());
    }
}

nlohmann::json Strategy::describe() const {
    nlohmann::json j = rule_ ? rule_->describe() : nlohmann::json::object();
    j["side"] = std::string(to_string(side_));
    j["name"] = name_;
    return j;
}

namespace {

class LambdaRule final : public Strategy::Rule {
public:
    LambdaRule(Memory memory, std::function<Move(const PlayContext&)> choose, nlohmann::json params,
               std::function<std::optional<std::uint64_t>(const PlayContext&)> focus)
        : memory_(memory), choose_(std::move(choose)), params_(std::move(params)), focus_(std::move(focus)) {}

    Move choose(const PlayContext& ctx) const override { return choose_(ctx); }
    Memory memory() const override { return memory_; }
    std::optional<std::uint64_t> focus(const PlayContext& ctx) const override {
        return focus_ ? focus_(ctx) : std::nullopt;
    }
    nlohmann::json describe() const override { return {{"rule", true}, {"params", params_}}; }

private:
    Memory memory_;
    std::function<Move(const PlayContext&)> choose_;
    nlohmann::json params_;
    std::function<std::optional<std::uint64_t>(const PlayContext&)> focus_;
};

}  // namespace

Strategy make_rule_strategy(Side side, std::string name, Memory memory, std::function<Move(const PlayContext&)> choose,
                            nlohmann::json params, std::function<std::optional<std::uint64_t>(const PlayContext&)> focus) {
    return Strategy(side, std::move(name),
                    std::make_shared<LambdaRule>(memory, std::move(choose), std::move(params), std::move(focus)));
}

}  // namespace selgames
