#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selgames/covers.hpp"

namespace selgames {

enum class Side { One, Two };

inline Side opponent(Side s) { return s == Side::One ? Side::Two : Side::One; }
std::string_view to_string(Side s);
Side side_from_string(std::string_view s);

enum class GameTag { Rothberger, Menger, PointOpen, CompactOpen, CompactGdelta, G1 };

/// A game kind; G1 carries its cover-class parameters (A in {O,Ostar,K,Alster}, B in {O,Odelta}).
struct GameKind {
    GameTag tag = GameTag::Rothberger;
    CoverClass a = CoverClass::O;
    CoverClass b = CoverClass::O;

    static GameKind rothberger() { return {GameTag::Rothberger}; }
    static GameKind menger() { return {GameTag::Menger}; }
    static GameKind point_open() { return {GameTag::PointOpen}; }
    static GameKind compact_open() { return {GameTag::CompactOpen}; }
    static GameKind compact_gdelta() { return {GameTag::CompactGdelta}; }
    /// Throws Error for parameters outside the allowed ranges.
    static GameKind g1(CoverClass a, CoverClass b);

    bool operator==(const GameKind&) const = default;
    std::string str() const;
};

GameKind game_kind_from_string(std::string_view name, std::optional<std::pair<CoverClass, CoverClass>> g1 = {});

/// True when One's moves are covers (selection games).
bool one_plays_covers(const GameKind& k);
/// The player who wins by covering the space with Two's replies.
Side covering_side(const GameKind& k);

/// One move of either player.
///
///  - One, selection games: `members` is the cover (with `factors` for Gdelta covers).
///  - One, point/compact games: `set` is the point (as a singleton) or the compact set.
///  - Two: `set` is what the reply contributes to coverage (the picked element, the open,
///    the Gdelta target, or the union of a Menger sublist); `members` lists a Menger sublist;
///    `factors[0]` is the presentation of a Gdelta pick.
struct Move {
    PointSet set;
    std::vector<PointSet> members;
    std::vector<std::vector<PointSet>> factors;

    static Move point(int x) { return {PointSet::singleton(x), {}, {}}; }
    static Move compact(PointSet k) { return {k, {}, {}}; }
    static Move cover(const CoverFamily& fam);
    static Move cover(const GdeltaCover& cover);
    static Move pick(PointSet e) { return {e, {}, {}}; }
    static Move pick(const GdeltaPresentedSet& e) { return {e.target, {}, {e.factors}}; }
    static Move sublist(std::vector<PointSet> elems);

    CoverFamily as_cover() const { return CoverFamily(members); }
    GdeltaCover as_gdelta_cover() const;

    auto operator<=>(const Move&) const = default;
    std::string str() const;
};

struct Inning {
    Move one;
    Move two;
    bool operator==(const Inning&) const = default;
};

struct GameSpec {
    GameKind kind;
    std::shared_ptr<const SpaceModel> model;
    std::vector<Move> one_pool;
    int horizon = 1;

    const SpaceModel& space_model() const { return *model; }
    PointSet points() const { return model->points(); }
};

GameSpec make_spec(GameKind kind, SpaceModel model, std::vector<Move> one_pool, int horizon);
GameSpec make_spec(GameKind kind, std::shared_ptr<const SpaceModel> model, std::vector<Move> one_pool, int horizon);
/// Pool One may draw from when none is given: every point, the compact pool, or the
/// minimal covers of the class One must play (irredundant, minimal k-covers, minimal Alster covers,
/// union closures of irredundant covers).
std::vector<Move> default_one_pool(const GameKind& kind, const SpaceModel& model);

/// Throws InvariantError when the horizon is < 1 or a pool entry is illegal for the kind.
void validate_spec(const GameSpec& spec);

struct Transcript {
    std::vector<Inning> innings;
    /// Union of Two's contributions after each inning.
    std::vector<PointSet> covered_after;

    PointSet covered() const { return covered_after.empty() ? PointSet{} : covered_after.back(); }
    bool operator==(const Transcript&) const = default;
};

/// What a strategy may look at when asked for a move.
struct PlayContext {
    const GameSpec* spec = nullptr;
    std::span<const Inning> history;  // completed innings
    const Move* pending = nullptr;     // One's move of the current inning, when Two is to move
    PointSet covered;
    int inning = 0;

    int remaining() const { return spec->horizon - inning; }
};

/// How much of the play a strategy's answers depend on. The certifier uses this to merge states.
enum class Memory {
    Stationary,  // covered set and pending move only
    Positional,  // covered set, inning and pending move
    Keyed,       // covered set, inning, pending move and Rule::state_key
    Full,        // the whole history
};

/// A deterministic move rule for one side.
class Strategy {
public:
    class Rule {
    public:
        virtual ~Rule() = default;
        virtual Move choose(const PlayContext& ctx) const = 0;
        virtual Memory memory() const { return Memory::Full; }
        /// Digest of the history sufficient to determine all later answers (Memory::Keyed).
        virtual std::string state_key(const PlayContext&) const { return {}; }
        /// Optional coarser key for Stationary Two rules: the answer depends only on
        /// (focus, pending). Lets the certifier reuse answers across states.
        virtual std::optional<std::uint64_t> focus(const PlayContext&) const { return std::nullopt; }
        virtual nlohmann::json describe() const { return nlohmann::json::object(); }
    };

    Strategy() = default;
    Strategy(Side side, std::string name, std::shared_ptr<const Rule> rule)
        : side_(side), name_(std::move(name)), rule_(std::move(rule)) {}

    Side side() const { return side_; }
    const std::string& name() const { return name_; }
    Memory memory() const { return rule_->memory(); }
    Move choose(const PlayContext& ctx) const { return rule_->choose(ctx); }
    std::string state_key(const PlayContext& ctx) const { return rule_->state_key(ctx); }
    std::optional<std::uint64_t> focus(const PlayContext& ctx) const { return rule_->focus(ctx); }
    const Rule& rule() const { return *rule_; }
    std::shared_ptr<const Rule> rule_ptr() const { return rule_; }
    nlohmann::json describe() const;
    explicit operator bool() const { return static_cast<bool>(rule_); }

private:
    Side side_ = Side::One;
    std::string name_;
    std::shared_ptr<const Rule> rule_;
};

/// Wraps a callable as a rule strategy.
Strategy make_rule_strategy(Side side, std::string name, Memory memory,
                            std::function<Move(const PlayContext&)> choose,
                            nlohmann::json params = nlohmann::json::object(),
                            std::function<std::optional<std::uint64_t>(const PlayContext&)> focus = {});

}  // namespace selgames
