#pragma once

#include <optional>

#include "selgames/engine.hpp"

namespace selgames {

enum class DualityPair { PointOpenRothberger, CompactOpenK, CompactGdeltaAlster, MengerOstar };

std::string_view to_string(DualityPair p);
DualityPair duality_pair_from_string(std::string_view s);
/// The pair a game kind belongs to, if any.
std::optional<DualityPair> pair_of(const GameKind& kind);
/// The other kind of the pair. Throws Error when `kind` is not in `pair`.
GameKind partner(const GameKind& kind, DualityPair pair);

/// Same model and horizon, partner kind, derived pool: all points, the compact pool, the
/// irredundant covers, minimal k-covers, minimal Alster covers; for the Menger pair the
/// union closures of the source pool (and irredundant covers going back).
GameSpec dual_spec(const GameSpec& spec, DualityPair pair);

/// One strategy of a point/compact game -> Two strategy of the dual selection game:
/// pick the least element containing the source strategy's point or compact.
Strategy translate_easy(const Strategy& one, const GameSpec& source);

/// Two strategy of a point/compact game -> One strategy of the dual selection game:
/// play {tau(h + m) : m a source One-move}, advancing along the least witness m of Two's pick.
Strategy translate_hard(const Strategy& two, const GameSpec& source);

/// Least source One-move whose reply under `two` after `history` is `pick` (the witness map).
std::optional<Move> hard_witness(const Strategy& two, const GameSpec& source, std::span<const Inning> history,
                                 const Move& pick);

/// Either side, Menger <-> G1(Ostar,O): sublists become their unions, covers their union
/// closures, and back (least Menger-pool preimage, least minimal sublist).
Strategy menger_equivalence(const Strategy& s, const GameSpec& source);

/// Least sublist of `cover` (fewest elements, then lexicographic) whose union is `target`.
std::optional<std::vector<PointSet>> minimal_sublist(const std::vector<PointSet>& cover, PointSet target);

}  // namespace selgames
