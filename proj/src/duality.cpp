#include "selgames/duality.hpp"

#include <algorithm>
#include <map>

namespace selgames {

std::string_view to_string(DualityPair p) {
    switch (p) {
        case DualityPair::PointOpenRothberger: return "pointopen-rothberger";
        case DualityPair::CompactOpenK: return "compactopen-k";
        case DualityPair::CompactGdeltaAlster: return "compactgdelta-alster";
        case DualityPair::MengerOstar: return "menger-ostar";
    }
    return "?";
}

DualityPair duality_pair_from_string(std::string_view s) {
    for (auto p : {DualityPair::PointOpenRothberger, DualityPair::CompactOpenK, DualityPair::CompactGdeltaAlster,
                   DualityPair::MengerOstar})
        if (to_string(p) == s) return p;
    throw Error("unknown duality pair '" + std::string(s) + "'");
}

namespace {

std::pair<GameKind, GameKind> kinds_of(DualityPair p) {
    switch (p) {
        case DualityPair::PointOpenRothberger: return {GameKind::point_open(), GameKind::rothberger()};
        case DualityPair::CompactOpenK: return {GameKind::compact_open(), GameKind::g1(CoverClass::K, CoverClass::O)};
        case DualityPair::CompactGdeltaAlster:
            return {GameKind::compact_gdelta(), GameKind::g1(CoverClass::Alster, CoverClass::Odelta)};
        case DualityPair::MengerOstar: return {GameKind::menger(), GameKind::g1(CoverClass::Ostar, CoverClass::O)};
    }
    throw Error("unknown duality pair");
}

}  // namespace

std::optional<DualityPair> pair_of(const GameKind& kind) {
    for (auto p : {DualityPair::PointOpenRothberger, DualityPair::CompactOpenK, DualityPair::CompactGdeltaAlster,
                   DualityPair::MengerOstar}) {
        auto [a, b] = kinds_of(p);
        if (kind == a || kind == b) return p;
    }
    return std::nullopt;
}

GameKind partner(const GameKind& kind, DualityPair pair) {
    auto [a, b] = kinds_of(pair);
    if (kind == a) return b;
    if (kind == b) return a;
    throw Error("game kind " + kind.str() + " is not in the pair " + std::string(to_string(pair)));
}

GameSpec dual_spec(const GameSpec& spec, DualityPair pair) {
    const GameKind to = partner(spec.kind, pair);
    std::vector<Move> pool;
    if (spec.kind.tag == GameTag::Menger) {
        std::vector<CoverFamily> closed;
        for (const Move& m : spec.one_pool) closed.push_back(finite_union_closure(*spec.model, m.as_cover()));
        std::sort(closed.begin(), closed.end());
        closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
        for (const auto& c : closed) pool.push_back(Move::cover(c));
    } else {
        pool = default_one_pool(to, *spec.model);
    }
    return make_spec(to, spec.model, std::move(pool), spec.horizon);
}

namespace {

using Innings = std::vector<Inning>;

std::string key_of(const Strategy& s, const GameSpec& spec, const Innings& hist, PointSet covered, int inning) {
    if (s.memory() != Memory::Keyed) return {};
    return s.state_key(PlayContext{&spec, hist, nullptr, covered, inning});
}

// Wraps a translated rule, keeping the source strategy's memory class.
Strategy wrap(Side side, std::string name, const Strategy& source, std::function<Move(const PlayContext&)> choose,
              std::function<std::string(const PlayContext&)> state_key) {
    class Rule : public Strategy::Rule {
    public:
        Rule(Memory m, std::function<Move(const PlayContext&)> c, std::function<std::string(const PlayContext&)> k,
             nlohmann::json d)
            : memory_(m), choose_(std::move(c)), key_(std::move(k)), desc_(std::move(d)) {}
        Move choose(const PlayContext& ctx) const override { return choose_(ctx); }
        Memory memory() const override { return memory_; }
        std::string state_key(const PlayContext& ctx) const override { return key_ ? key_(ctx) : std::string(); }
        nlohmann::json describe() const override { return desc_; }

    private:
        Memory memory_;
        std::function<Move(const PlayContext&)> choose_;
        std::function<std::string(const PlayContext&)> key_;
        nlohmann::json desc_;
    };
    nlohmann::json desc = {{"rule", name}, {"source", source.describe()}};
    return Strategy(side, std::move(name),
                    std::make_shared<Rule>(source.memory(), std::move(choose), std::move(state_key), std::move(desc)));
}

}  // namespace

Strategy translate_easy(const Strategy& one, const GameSpec& source) {
    if (one.side() != Side::One) throw Error("translate_easy needs a One strategy");
    if (one_plays_covers(source.kind)) throw Error("translate_easy needs a point or compact game");
    auto src = std::make_shared<const GameSpec>(source);
    // Source history: One's moves replayed, Two's answers are the dual picks.
    auto rebuild = [one, src](const PlayContext& ctx) {
        Innings hist;
        PointSet covered;
        for (std::size_t i = 0; i < ctx.history.size(); ++i) {
            Move m = one.choose(PlayContext{src.get(), hist, nullptr, covered, static_cast<int>(i)});
            const Move& pick = ctx.history[i].two;
            covered |= pick.set;
            hist.push_back({std::move(m), pick});
        }
        return hist;
    };
    auto choose = [one, src, rebuild](const PlayContext& ctx) {
        Innings hist = rebuild(ctx);
        Move m = one.choose(PlayContext{src.get(), hist, nullptr, ctx.covered, ctx.inning});
        const Move& cover = *ctx.pending;
        for (std::size_t i = 0; i < cover.members.size(); ++i)
            if (m.set.subset_of(cover.members[i])) return reply_with_element(*ctx.spec, cover, i);
        throw Error("translate_easy: no element of " + cover.str() + " contains " + m.set.str());
    };
    auto key = [one, src, rebuild](const PlayContext& ctx) {
        return key_of(one, *src, rebuild(ctx), ctx.covered, ctx.inning);
    };
    return wrap(Side::Two, "translate_easy", one, choose, key);
}

std::optional<Move> hard_witness(const Strategy& two, const GameSpec& source, std::span<const Inning> history,
                                 const Move& pick) {
    PointSet covered;
    for (const auto& inn : history) covered |= inn.two.set;
    for (const Move& m : source.one_pool) {
        PlayContext ctx{&source, history, &m, covered, static_cast<int>(history.size())};
        if (two.choose(ctx) == pick) return m;
    }
    return std::nullopt;
}

Strategy translate_hard(const Strategy& two, const GameSpec& source) {
    if (two.side() != Side::Two) throw Error("translate_hard needs a Two strategy");
    if (one_plays_covers(source.kind)) throw Error("translate_hard needs a point or compact game");
    auto src = std::make_shared<const GameSpec>(source);
    const auto pair = pair_of(source.kind);
    const GameKind dual = partner(source.kind, *pair);
    auto rebuild = [two, src](const PlayContext& ctx) {
        Innings hist;
        for (const auto& inn : ctx.history) {
            auto w = hard_witness(two, *src, hist, inn.two);
            if (!w) throw Error("translate_hard: Two's pick " + inn.two.str() + " has no witness");
            hist.push_back({*w, inn.two});
        }
        return hist;
    };
    auto choose = [two, src, rebuild, dual](const PlayContext& ctx) {
        Innings hist = rebuild(ctx);
        const SpaceModel& model = *src->model;
        if (dual.tag == GameTag::G1 && dual.a == CoverClass::Alster) {
            std::vector<GdeltaPresentedSet> els;
            for (const Move& m : src->one_pool) {
                Move r = two.choose(PlayContext{src.get(), hist, &m, ctx.covered, ctx.inning});
                els.push_back(r.factors.empty() ? GdeltaPresentedSet::open(r.set)
                                                : GdeltaPresentedSet{r.set, r.factors.front()});
            }
            std::sort(els.begin(), els.end());
            els.erase(std::unique(els.begin(), els.end()), els.end());
            GdeltaCover cover(std::move(els));
            if (!in_class(model, cover, CoverClass::Alster)) throw Error("translation produced non-cover");
            return Move::cover(cover);
        }
        std::vector<PointSet> els;
        for (const Move& m : src->one_pool)
            els.push_back(two.choose(PlayContext{src.get(), hist, &m, ctx.covered, ctx.inning}).set);
        CoverFamily fam = CoverFamily::dedup(std::move(els));
        const CoverClass need = dual.tag == GameTag::G1 ? dual.a : CoverClass::O;
        if (!in_class(model, fam, need)) throw Error("translation produced non-cover");
        return Move::cover(fam);
    };
    auto key = [two, src, rebuild](const PlayContext& ctx) {
        return key_of(two, *src, rebuild(ctx), ctx.covered, ctx.inning);
    };
    return wrap(Side::One, "translate_hard", two, choose, key);
}

std::optional<std::vector<PointSet>> minimal_sublist(const std::vector<PointSet>& cover, PointSet target) {
    std::vector<PointSet> inside;
    for (PointSet e : cover)
        if (e.subset_of(target)) inside.push_back(e);
    std::sort(inside.begin(), inside.end());
    if (union_of(inside) != target) return std::nullopt;
    const std::size_t n = inside.size();
    // Combinations of each size in lexicographic index order.
    for (std::size_t k = target.empty() ? 0 : 1; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<PointSet> pick;
            for (std::size_t i : idx) pick.push_back(inside[i]);
            if (union_of(pick) == target) return pick;
            std::size_t j = k;
            while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
            if (j == 0) break;
            ++idx[j - 1];
            for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    return std::nullopt;
}

Strategy menger_equivalence(const Strategy& s, const GameSpec& source) {
    const bool from_menger = source.kind.tag == GameTag::Menger;
    if (!from_menger && source.kind != GameKind::g1(CoverClass::Ostar, CoverClass::O))
        throw Error("menger_equivalence needs a Menger or G1(Ostar,O) game");
    auto src = std::make_shared<const GameSpec>(source);
    auto dual = std::make_shared<const GameSpec>(dual_spec(source, DualityPair::MengerOstar));
    const GameSpec& menger = from_menger ? *src : *dual;
    // Least Menger-pool cover with a given union closure.
    auto preimages = std::make_shared<std::map<CoverFamily, Move>>();
    for (const Move& m : menger.one_pool) preimages->emplace(finite_union_closure(*src->model, m.as_cover()), m);
    auto preimage = [preimages](const Move& closed) {
        auto it = preimages->find(closed.as_cover());
        return it != preimages->end() ? it->second : closed;
    };
    auto closure_of = [src](const Move& cover) { return Move::cover(finite_union_closure(*src->model, cover.as_cover())); };
    auto sublist_for = [](const Move& cover, PointSet target) {
        auto sub = minimal_sublist(cover.members, target);
        if (!sub) throw Error("element " + target.str() + " is not a union of members of " + cover.str());
        return Move::sublist(*sub);
    };
    auto pick_in = [](const Move& cover, PointSet e) {
        return Move::pick(std::find(cover.members.begin(), cover.members.end(), e) != cover.members.end()
                              ? e
                              : cover.members.front());
    };

    // Source-game history from the translated game's history.
    std::function<Innings(const PlayContext&)> rebuild;
    std::function<Move(const PlayContext&, const Innings&)> answer;
    if (from_menger && s.side() == Side::Two) {
        rebuild = [s, src, preimage](const PlayContext& ctx) {
            Innings hist;
            PointSet covered;
            for (std::size_t i = 0; i < ctx.history.size(); ++i) {
                Move u = preimage(ctx.history[i].one);
                Move f = s.choose(PlayContext{src.get(), hist, &u, covered, static_cast<int>(i)});
                covered |= f.set;
                hist.push_back({std::move(u), std::move(f)});
            }
            return hist;
        };
        answer = [s, src, preimage, pick_in](const PlayContext& ctx, const Innings& hist) {
            Move u = preimage(*ctx.pending);
            Move f = s.choose(PlayContext{src.get(), hist, &u, ctx.covered, ctx.inning});
            return pick_in(*ctx.pending, f.set);
        };
    } else if (from_menger) {
        rebuild = [s, src, sublist_for](const PlayContext& ctx) {
            Innings hist;
            PointSet covered;
            for (std::size_t i = 0; i < ctx.history.size(); ++i) {
                Move u = s.choose(PlayContext{src.get(), hist, nullptr, covered, static_cast<int>(i)});
                Move f = sublist_for(u, ctx.history[i].two.set);
                covered |= f.set;
                hist.push_back({std::move(u), std::move(f)});
            }
            return hist;
        };
        answer = [s, src, closure_of](const PlayContext& ctx, const Innings& hist) {
            return closure_of(s.choose(PlayContext{src.get(), hist, nullptr, ctx.covered, ctx.inning}));
        };
    } else if (s.side() == Side::Two) {
        rebuild = [closure_of](const PlayContext& ctx) {
            Innings hist;
            for (const auto& inn : ctx.history) hist.push_back({closure_of(inn.one), Move::pick(inn.two.set)});
            return hist;
        };
        answer = [s, src, closure_of, sublist_for](const PlayContext& ctx, const Innings& hist) {
            Move v = closure_of(*ctx.pending);
            Move pick = s.choose(PlayContext{src.get(), hist, &v, ctx.covered, ctx.inning});
            return sublist_for(*ctx.pending, pick.set);
        };
    } else {
        rebuild = [s, src](const PlayContext& ctx) {
            Innings hist;
            PointSet covered;
            for (std::size_t i = 0; i < ctx.history.size(); ++i) {
                Move v = s.choose(PlayContext{src.get(), hist, nullptr, covered, static_cast<int>(i)});
                covered |= ctx.history[i].two.set;
                hist.push_back({std::move(v), Move::pick(ctx.history[i].two.set)});
            }
            return hist;
        };
        answer = [s, src, preimage](const PlayContext& ctx, const Innings& hist) {
            return preimage(s.choose(PlayContext{src.get(), hist, nullptr, ctx.covered, ctx.inning}));
        };
    }
    auto choose = [rebuild, answer](const PlayContext& ctx) { return answer(ctx, rebuild(ctx)); };
    auto key = [s, src, rebuild](const PlayContext& ctx) { return key_of(s, *src, rebuild(ctx), ctx.covered, ctx.inning); };
    return wrap(s.side(), "menger_equivalence", s, choose, key);
}

}  // namespace selgames
