#include <algorithm>
#include <set>

#include "selgames/constructions.hpp"

namespace selgames {

RefinedInstance make_refined_instance(std::shared_ptr<const SpaceModel> base) {
    RefinedInstance inst;
    inst.base = base;
    std::vector<PointSet> basics;
    for (PointSet u : base->space.opens())
        for (PointSet c : base->small_ideal) {
            PointSet w = u - c;
            if (w.empty()) continue;
            auto [it, fresh] = inst.decomposition.emplace(w, Decomposition{u, c});
            if (fresh) basics.push_back(w);
            else if (std::pair(u, c) < std::pair(it->second.u, it->second.c)) it->second = {u, c};
        }
    FiniteSpace refined = from_subbasis(base->point_count(), basics);
    SpaceModel m = make_model(std::move(refined), "refined(" + base->label + ")");
    m.small_ideal = base->small_ideal;
    inst.refined = std::make_shared<const SpaceModel>(std::move(m));
    return inst;
}

std::vector<CoverFamily> refined_pool(const RefinedInstance& inst) {
    std::vector<PointSet> basics;
    for (const auto& [w, d] : inst.decomposition) basics.push_back(w);
    std::vector<PointSet> singles;
    for (int x = 0; x < inst.refined->point_count(); ++x) singles.push_back(PointSet::singleton(x));
    std::vector<CoverFamily> out;
    for (const auto& idx : minimal_families(basics, singles)) {
        std::vector<PointSet> els;
        for (std::size_t i : idx) els.push_back(basics[i]);
        out.emplace_back(std::move(els));
    }
    return out;
}

int refined_horizon(int base_horizon, int max_queued, int quota) {
    if (quota < 1) throw Error("queue quota must be >= 1");
    return 2 * base_horizon * (1 + (max_queued + quota - 1) / quota);
}

namespace {

const Decomposition& decomposition_of(const RefinedInstance& inst, PointSet w) {
    auto it = inst.decomposition.find(w);
    if (it == inst.decomposition.end()) throw Error("basic open " + w.str() + " has no decomposition");
    return it->second;
}

Move mapped_cover(const RefinedInstance& inst, const Move& refined_cover) {
    std::vector<PointSet> us;
    for (PointSet w : refined_cover.members) us.push_back(decomposition_of(inst, w).u);
    return Move::cover(CoverFamily::dedup(std::move(us)));
}

}  // namespace

int max_queued_points(const RefinedInstance& inst, const std::vector<Move>& pool) {
    int best = 0;
    for (const Move& m : pool) {
        PointSet c;
        for (PointSet w : m.members) c |= decomposition_of(inst, w).c;
        best = std::max(best, c.size());
    }
    return best;
}

GameSpec base_spec_for(const RefinedInstance& inst, const std::vector<Move>& refined_pool, int horizon) {
    std::vector<Move> pool;
    for (const Move& m : refined_pool) {
        Move u = mapped_cover(inst, m);
        if (std::find(pool.begin(), pool.end(), u) == pool.end()) pool.push_back(std::move(u));
    }
    std::sort(pool.begin(), pool.end());
    return make_spec(GameKind::menger(), inst.base, std::move(pool), horizon);
}

namespace {

// Everything the combined strategy remembers, rebuilt from the refined history.
struct RefineState {
    std::vector<Inning> base;
    PointSet base_covered;
    std::vector<PointSet> queues;
    int odd_served = 0;
    int next_queue = 0;
};

class RefineRule : public Strategy::Rule {
public:
    RefineRule(std::shared_ptr<const GameSpec> base_spec, Strategy rho, RefinedInstance inst, int quota, int period)
        : base_spec_(std::move(base_spec)), rho_(std::move(rho)), inst_(std::move(inst)), quota_(quota),
          period_(period) {}

    Move choose(const PlayContext& ctx) const override {
        RefineState st = rebuild(ctx.history, ctx.covered);
        return answer(st, *ctx.pending, static_cast<int>(ctx.history.size()), ctx.covered);
    }

    Memory memory() const override { return Memory::Keyed; }

    std::string state_key(const PlayContext& ctx) const override {
        RefineState st = rebuild(ctx.history, ctx.covered);
        std::string k;
        auto put = [&k](std::uint64_t v) { k.append(reinterpret_cast<const char*>(&v), sizeof(v)); };
        put(st.base_covered.bits());
        put(st.base.size());
        if (rho_.memory() == Memory::Keyed)
            k += rho_.state_key(PlayContext{base_spec_.get(), st.base, nullptr, st.base_covered,
                                            static_cast<int>(st.base.size())});
        else if (rho_.memory() == Memory::Full)
            for (const auto& inn : st.base) k += inn.one.str() + inn.two.str() + ";";
        for (PointSet q : st.queues) put(q.bits());
        put(static_cast<std::uint64_t>(st.odd_served));
        put(static_cast<std::uint64_t>(st.next_queue));
        return k;
    }

    nlohmann::json describe() const override {
        return {{"rule", "refine_menger"}, {"quota", quota_}, {"period", period_}, {"base", rho_.describe()}};
    }

private:
    bool rho_active(const RefineState& st) const {
        return static_cast<int>(st.base.size()) < base_spec_->horizon && st.base_covered != base_spec_->points();
    }

    RefineState rebuild(std::span<const Inning> history, PointSet /*covered*/) const {
        RefineState st;
        st.queues.assign(static_cast<std::size_t>(period_), PointSet{});
        PointSet covered;
        for (std::size_t i = 0; i < history.size(); ++i) {
            step(st, history[i].one, static_cast<int>(i), covered);
            covered |= history[i].two.set;
            for (auto& q : st.queues) q -= covered;
        }
        return st;
    }

    // Applies inning i's bookkeeping to `st` and returns the answer.
    Move step(RefineState& st, const Move& cover, int inning, PointSet covered) const {
        if (rho_active(st) && inning % 2 == 0) {
            Move u = mapped_cover(inst_, cover);
            Move f = rho_.choose(PlayContext{base_spec_.get(), st.base, &u, st.base_covered,
                                             static_cast<int>(st.base.size())});
            std::vector<PointSet> picked;
            PointSet queued;
            for (PointSet w : cover.members) {
                const Decomposition& d = decomposition_of(inst_, w);
                if (std::find(f.members.begin(), f.members.end(), d.u) != f.members.end()) {
                    picked.push_back(w);
                    queued |= d.c;
                }
            }
            st.queues[st.base.size() % st.queues.size()] |= queued - covered;
            st.base_covered |= f.set;
            st.base.push_back({std::move(u), std::move(f)});
            return Move::sublist(std::move(picked));
        }
        std::size_t q;
        if (rho_active(st)) {
            q = static_cast<std::size_t>(st.odd_served) % st.queues.size();
            ++st.odd_served;
        } else {
            q = static_cast<std::size_t>(st.next_queue);
            for (std::size_t t = 0; t < st.queues.size(); ++t) {
                std::size_t j = (static_cast<std::size_t>(st.next_queue) + t) % st.queues.size();
                if (!(st.queues[j] - covered).empty()) {
                    q = j;
                    break;
                }
            }
            st.next_queue = static_cast<int>((q + 1) % st.queues.size());
        }
        std::set<PointSet> picks;
        int served = 0;
        for (int x : (st.queues[q] - covered).points()) {
            if (served++ == quota_) break;
            for (PointSet w : cover.members)
                if (w.contains(x)) {
                    picks.insert(w);
                    break;
                }
        }
        return Move::sublist(std::vector<PointSet>(picks.begin(), picks.end()));
    }

    Move answer(RefineState& st, const Move& cover, int inning, PointSet covered) const {
        return step(st, cover, inning, covered);
    }

    std::shared_ptr<const GameSpec> base_spec_;
    Strategy rho_;
    RefinedInstance inst_;
    int quota_;
    int period_;
};

}  // namespace

Strategy refine_menger_strategy(const GameSpec& base_spec, const Strategy& rho, const RefinedInstance& inst,
                                int quota, int period) {
    if (quota < 1) throw Error("queue quota must be >= 1");
    if (period < 1) throw Error("queue period must be >= 1");
    if (rho.side() != Side::Two || base_spec.kind.tag != GameTag::Menger)
        throw Error("refine_menger_strategy needs a Two-Menger base strategy");
    return Strategy(Side::Two, "refine_menger",
                    std::make_shared<RefineRule>(std::make_shared<const GameSpec>(base_spec), rho, inst, quota,
                                                 period));
}

}  // namespace selgames
