#include "selgames/solver.hpp"

#include <chrono>
#include <unordered_map>

namespace selgames {

namespace {

class TableRule : public Strategy::Rule {
public:
    explicit TableRule(StrategyTable t) : table_(std::move(t)) {}

    Move choose(const PlayContext& ctx) const override {
        TableKey k{ctx.covered, ctx.remaining(), ctx.pending ? std::optional<Move>(*ctx.pending) : std::nullopt};
        auto it = table_.find(k);
        if (it == table_.end())
            throw Error("strategy table has no entry for covered " + ctx.covered.str() + " with " +
                        std::to_string(k.remaining) + " innings left" +
                        (ctx.pending ? " after " + ctx.pending->str() : std::string()));
        return it->second;
    }
    Memory memory() const override { return Memory::Positional; }
    nlohmann::json describe() const override { return {{"entries", table_.size()}}; }

    const StrategyTable& table() const { return table_; }

private:
    StrategyTable table_;
};

struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
        return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
};

// `hero` is the side whose win is evaluated; the covering side wins iff X gets covered.
class Search {
public:
    Search(const GameSpec& spec, Side hero, const SolveOptions& opts)
        : spec_(spec), hero_(hero), cov_(covering_side(spec.kind)), opts_(opts), all_(spec.points()) {
        replies_.reserve(spec.one_pool.size());
        for (const Move& m : spec.one_pool) replies_.push_back(two_replies(spec, m));
    }

    bool root() { return one_node(PointSet{}, spec_.horizon); }

    StrategyTable take_table() { return std::move(table_); }
    SolveStats stats() const { return stats_; }

private:
    bool terminal(PointSet covered, int remaining, bool& value) const {
        if (covered == all_) {
            value = hero_ == cov_;
            return true;
        }
        if (remaining == 0) {
            value = hero_ != cov_;
            return true;
        }
        return false;
    }

    bool one_node(PointSet covered, int remaining) {
        bool v;
        if (terminal(covered, remaining, v)) return v;
        const std::pair<std::uint64_t, std::uint64_t> key{covered.bits(), static_cast<std::uint64_t>(remaining)};
        if (opts_.memoize) {
            if (auto it = memo_.find(key); it != memo_.end()) {
                ++stats_.memo_hits;
                return it->second;
            }
        }
        if (++stats_.states_expanded > opts_.node_budget) throw BudgetExceeded();
        bool result;
        if (hero_ == Side::One) {
            result = false;
            for (std::size_t i = 0; i < spec_.one_pool.size(); ++i) {
                if (two_node(covered, remaining, i)) {
                    table_.emplace(TableKey{covered, remaining, std::nullopt}, spec_.one_pool[i]);
                    result = true;
                    break;
                }
            }
        } else {
            result = true;
            for (std::size_t i = 0; i < spec_.one_pool.size() && result; ++i) result = two_node(covered, remaining, i);
        }
        if (opts_.memoize) memo_.emplace(key, result);
        return result;
    }

    bool two_node(PointSet covered, int remaining, std::size_t i) {
        const auto& rs = replies_[i];
        if (hero_ == Side::Two) {
            for (const Move& r : rs) {
                if (one_node(covered | r.set, remaining - 1)) {
                    table_.emplace(TableKey{covered, remaining, spec_.one_pool[i]}, r);
                    return true;
                }
            }
            return false;
        }
        for (const Move& r : rs)
            if (!one_node(covered | r.set, remaining - 1)) return false;
        return true;
    }

    const GameSpec& spec_;
    Side hero_;
    Side cov_;
    SolveOptions opts_;
    PointSet all_;
    std::vector<std::vector<Move>> replies_;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool, KeyHash> memo_;
    StrategyTable table_;
    SolveStats stats_;
};

}  // namespace

Strategy make_table_strategy(Side side, std::string name, StrategyTable table) {
    return Strategy(side, std::move(name), std::make_shared<TableRule>(std::move(table)));
}

const StrategyTable* strategy_table(const Strategy& s) {
    if (!s) return nullptr;
    auto* t = dynamic_cast<const TableRule*>(&s.rule());
    return t ? &t->table() : nullptr;
}

SolveResult solve(const GameSpec& spec, const SolveOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    // Search from One's side first; if One loses, redo from Two's side to get Two's table.
    SolveResult res;
    Search one(spec, Side::One, options);
    SolveStats stats;
    if (one.root()) {
        res.winner = Side::One;
        stats = one.stats();
        res.strategy = make_table_strategy(Side::One, "solver", one.take_table());
    } else {
        Search two(spec, Side::Two, options);
        if (!two.root()) throw Error("solver: neither side wins (internal error)");
        res.winner = Side::Two;
        stats = two.stats();
        stats.states_expanded += one.stats().states_expanded;
        stats.memo_hits += one.stats().memo_hits;
        res.strategy = make_table_strategy(Side::Two, "solver", two.take_table());
    }
    stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    res.stats = stats;
    return res;
}

bool side_wins(const GameSpec& spec, Side side, const SolveOptions& options) {
    Search s(spec, side, options);
    return s.root();
}

int sufficient_horizon(const GameSpec& spec) { return spec.model->point_count(); }

}  // namespace selgames
