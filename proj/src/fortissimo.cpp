#include "selgames/constructions.hpp"

namespace selgames {

FortissimoModel make_fortissimo(int n, int c) {
    if (n < 1 || n + 1 > kMaxPoints) throw RangeError("fortissimo: N must lie in 1..63");
    if (c < 0 || c > n) throw RangeError("fortissimo: c must satisfy 0 <= c <= N");
    const PointSet isolated = PointSet::full(n);
    const PointSet all = PointSet::full(n + 1);
    // The stated basics are not closed under intersection once 0 < c; the generated topology is used.
    const bool discrete = c > 0;
    auto is_open = [isolated, all, discrete](PointSet w) {
        return discrete || w.subset_of(isolated) || w == all;
    };
    auto interior = [is_open, isolated](PointSet b) { return is_open(b) ? b : b & isolated; };
    SpaceModel m;
    m.space = FiniteSpace::implicit(n + 1, is_open, interior);
    for (int x = 0; x <= n; ++x) m.compact_pool.push_back(PointSet::singleton(x));
    m.small_ideal = {PointSet{}};
    m.label = "fortissimo(" + std::to_string(n) + "," + std::to_string(c) + ")";
    return {n, c, std::make_shared<const SpaceModel>(std::move(m))};
}

std::vector<Move> fortissimo_pool(const FortissimoModel& fm) {
    const PointSet all = fm.model->points();
    std::vector<Move> pool;
    // Subsets S of the isolated points with |S| <= c, by increasing size then lexicographically.
    std::vector<int> s;
    std::function<void(int, int)> grow = [&](int start, int left) {
        if (static_cast<int>(s.size()) == left) {
            std::vector<PointSet> els{all - PointSet::from_points(s)};
            for (int a : s) els.push_back(PointSet::singleton(a));
            pool.push_back(Move::cover(CoverFamily(std::move(els))));
            return;
        }
        for (int a = start; a < fm.n; ++a) {
            s.push_back(a);
            grow(a + 1, left);
            s.pop_back();
        }
    };
    for (int size = 0; size <= fm.c; ++size) grow(0, size);
    return pool;
}

Strategy fortissimo_strategy(const FortissimoModel& fm) {
    const int p = fm.special();
    auto target = [p](const PlayContext& ctx) {
        PointSet left = ctx.spec->points() - ctx.covered;
        if (left.empty()) return -1;
        return left.contains(p) ? p : left.min();
    };
    return make_rule_strategy(
        Side::Two, "fortissimo", Memory::Stationary,
        [target](const PlayContext& ctx) {
            const int x = target(ctx);
            const Move& m = *ctx.pending;
            for (std::size_t i = 0; i < m.members.size(); ++i)
                if (x >= 0 && m.members[i].contains(x)) return reply_with_element(*ctx.spec, m, i);
            return reply_with_element(*ctx.spec, m, 0);
        },
        {{"N", fm.n}, {"c", fm.c}},
        [target](const PlayContext& ctx) -> std::optional<std::uint64_t> {
            const int x = target(ctx);
            return x < 0 ? 64 : static_cast<std::uint64_t>(x);
        });
}

}  // namespace selgames
