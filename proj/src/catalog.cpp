#include "selgames/constructions.hpp"
#include "selgames/io.hpp"

namespace selgames {

PointSet minimal_open_containing(const FiniteSpace& space, PointSet s) {
    PointSet m = space.points();
    for (PointSet o : space.opens())
        if (s.subset_of(o)) m &= o;
    return m;
}

namespace {

constexpr std::uint64_t kNoPoint = 64;

int least_uncovered(const PlayContext& ctx) {
    PointSet left = ctx.spec->points() - ctx.covered;
    return left.empty() ? -1 : left.min();
}

// Two's reply taking the least element of One's cover containing `point` (the first element when none does).
Move element_containing(const PlayContext& ctx, int point) {
    const Move& m = *ctx.pending;
    std::size_t pick = 0;
    if (point >= 0)
        for (std::size_t i = 0; i < m.members.size(); ++i)
            if (m.members[i].contains(point)) {
                pick = i;
                break;
            }
    return reply_with_element(*ctx.spec, m, pick);
}

}  // namespace

Strategy countable_enumeration_strategy(const SpaceModel& model) {
    return make_rule_strategy(
        Side::Two, "countable_enumeration", Memory::Stationary,
        [](const PlayContext& ctx) { return element_containing(ctx, least_uncovered(ctx)); },
        {{"points", model.point_count()}},
        [](const PlayContext& ctx) -> std::optional<std::uint64_t> {
            int p = least_uncovered(ctx);
            return p < 0 ? kNoPoint : static_cast<std::uint64_t>(p);
        });
}

Strategy scattered_rank_strategy(const SpaceModel& model) {
    if (!is_scattered(model.space).scattered) throw Error("space not scattered");
    auto ranks = std::make_shared<const std::vector<int>>(cb_point_ranks(model.space));
    auto target = [ranks](const PlayContext& ctx) {
        int best = -1;
        for (int x : (ctx.spec->points() - ctx.covered).points())
            if (best < 0 || (*ranks)[x] > (*ranks)[best]) best = x;
        return best;
    };
    return make_rule_strategy(
        Side::Two, "scattered_rank", Memory::Stationary,
        [target](const PlayContext& ctx) { return element_containing(ctx, target(ctx)); }, {{"ranks", *ranks}},
        [target](const PlayContext& ctx) -> std::optional<std::uint64_t> {
            int p = target(ctx);
            return p < 0 ? kNoPoint : static_cast<std::uint64_t>(p);
        });
}

Strategy first_element_strategy() {
    return make_rule_strategy(
        Side::Two, "first_element", Memory::Stationary,
        [](const PlayContext& ctx) { return reply_with_element(*ctx.spec, *ctx.pending, 0); }, {},
        [](const PlayContext&) -> std::optional<std::uint64_t> { return 0; });
}

Strategy least_uncovered_point_strategy() {
    return make_rule_strategy(Side::One, "least_uncovered_point", Memory::Stationary, [](const PlayContext& ctx) {
        int p = least_uncovered(ctx);
        return Move::point(p < 0 ? 0 : p);
    });
}

Strategy uncovered_compact_strategy() {
    return make_rule_strategy(Side::One, "uncovered_compact", Memory::Stationary, [](const PlayContext& ctx) {
        const auto& pool = ctx.spec->model->compact_pool;
        for (PointSet k : pool)
            if (!k.subset_of(ctx.covered)) return Move::compact(k);
        return Move::compact(pool.front());
    });
}

Strategy minimal_open_strategy() {
    return make_rule_strategy(Side::Two, "minimal_open", Memory::Stationary, [](const PlayContext& ctx) {
        PointSet o = minimal_open_containing(ctx.spec->model->space, ctx.pending->set);
        if (ctx.spec->kind.tag == GameTag::CompactGdelta) return Move::pick(GdeltaPresentedSet::open(o));
        return Move::pick(o);
    });
}

Strategy constant_strategy(Move move) {
    nlohmann::json desc = io::move_to_json(move);
    return make_rule_strategy(
        Side::One, "constant", Memory::Stationary, [move](const PlayContext&) { return move; }, {{"move", desc}});
}

}  // namespace selgames
