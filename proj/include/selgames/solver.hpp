#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "selgames/engine.hpp"

namespace selgames {

/// Position key of a table strategy: covered set, innings remaining, and One's pending move
/// when Two is to answer.
struct TableKey {
    PointSet covered;
    int remaining = 0;
    std::optional<Move> pending;

    auto operator<=>(const TableKey&) const = default;
};

using StrategyTable = std::map<TableKey, Move>;

Strategy make_table_strategy(Side side, std::string name, StrategyTable table);
/// The table behind a strategy built by make_table_strategy, or nullptr.
const StrategyTable* strategy_table(const Strategy& s);

struct SolveOptions {
    std::uint64_t node_budget = 10'000'000;
    bool memoize = true;
};

struct SolveStats {
    std::uint64_t states_expanded = 0;
    std::uint64_t memo_hits = 0;
    double elapsed_ms = 0;
};

struct SolveResult {
    Side winner = Side::One;
    Strategy strategy;
    SolveStats stats;
};

/// Backward induction over (covered, remaining, pending). The winner's strategy answers
/// every reachable position with the canonically least winning move.
SolveResult solve(const GameSpec& spec, const SolveOptions& options = {});

/// Whether `side` has a winning strategy, searched from that side's point of view.
bool side_wins(const GameSpec& spec, Side side, const SolveOptions& options = {});

/// A horizon past which the verdict no longer changes: the number of points.
int sufficient_horizon(const GameSpec& spec);

}  // namespace selgames
