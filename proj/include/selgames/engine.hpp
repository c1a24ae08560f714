#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "selgames/game.hpp"

namespace selgames {

struct History {
    std::vector<Inning> innings;
    std::optional<Move> pending;
};

/// Legal moves for `side` after `history`, in canonical order. Throws IllegalMove
/// ("illegal transcript") when the history itself is not a legal play of the game.
std::vector<Move> legal_moves(const GameSpec& spec, const History& history, Side side);

/// Two's legal replies to One's move, in canonical order (Menger: nonempty sublists by index mask).
std::vector<Move> two_replies(const GameSpec& spec, const Move& one_move);

/// Two's reply taking element i of One's cover (a one-element sublist in the Menger game).
Move reply_with_element(const GameSpec& spec, const Move& one_move, std::size_t i);

bool is_legal_one_move(const GameSpec& spec, const Move& move);
bool is_legal_two_move(const GameSpec& spec, const Move& one_move, const Move& two_move);

/// Runs the game to the horizon, stopping as soon as the space is covered.
/// Throws IllegalMove naming the side and inning of an illegal answer.
Transcript play(const GameSpec& spec, const Strategy& one, const Strategy& two);

/// Winner of a finished (or early-decided) play. Throws Error on an incomplete transcript.
Side judge(const GameSpec& spec, const Transcript& transcript);

/// Two's answers along a sequence of One moves, replaying the strategy. Stops early
/// (returning fewer answers) once the space is covered.
std::vector<Move> replay_two(const GameSpec& spec, const Strategy& two, const std::vector<Move>& one_moves);

/// One's moves along a sequence of Two answers: element i is One's move of inning i,
/// given Two's answers 0..i-1. Stops early once the space is covered.
std::vector<Move> replay_one(const GameSpec& spec, const Strategy& one, const std::vector<Move>& two_moves);

/// Transcript from explicit innings with covered-set snapshots.
Transcript make_transcript(const GameSpec& spec, std::vector<Inning> innings);

struct CertifyOptions {
    std::uint64_t node_budget = 10'000'000;
};

struct CertifyStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
};

struct CertifyResult {
    bool certified = false;
    /// The lexicographically least opposing line that defeats the strategy.
    std::optional<Transcript> counterplay;
    CertifyStats stats;
};

/// Exhaustive adversary: checks that `strategy` wins against every opposing line up to the
/// horizon. Throws BudgetExceeded rather than answer past the node budget.
CertifyResult certify(const GameSpec& spec, const Strategy& strategy, const CertifyOptions& options = {});

}  // namespace selgames
