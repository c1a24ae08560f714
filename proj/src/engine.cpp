#include "selgames/engine.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace selgames {

namespace {

bool is_member(const std::vector<PointSet>& v, PointSet s) { return std::find(v.begin(), v.end(), s) != v.end(); }

bool all_open(const SpaceModel& m, const std::vector<PointSet>& sets) {
    return std::all_of(sets.begin(), sets.end(), [&](PointSet s) { return m.space.is_open(s); });
}

}  // namespace

bool is_legal_one_move(const GameSpec& spec, const Move& move) {
    const SpaceModel& model = *spec.model;
    const GameKind& k = spec.kind;
    try {
        switch (k.tag) {
            case GameTag::PointOpen:
                return move.members.empty() && move.set.size() == 1 && move.set.subset_of(model.points());
            case GameTag::CompactOpen:
            case GameTag::CompactGdelta:
                return move.members.empty() && is_member(model.compact_pool, move.set);
            case GameTag::Rothberger:
            case GameTag::Menger:
                return move.factors.empty() && in_class(model, move.as_cover(), CoverClass::O);
            case GameTag::G1:
                if (k.a == CoverClass::Alster) return in_class(model, move.as_gdelta_cover(), CoverClass::Alster);
                return move.factors.empty() && in_class(model, move.as_cover(), k.a);
        }
    } catch (const InvariantError&) {
        return false;
    } catch (const IllegalMove&) {
        return false;
    }
    return false;
}

bool is_legal_two_move(const GameSpec& spec, const Move& one_move, const Move& two_move) {
    const SpaceModel& model = *spec.model;
    const GameKind& k = spec.kind;
    switch (k.tag) {
        case GameTag::Rothberger:
            return two_move.members.empty() && two_move.factors.empty() && is_member(one_move.members, two_move.set);
        case GameTag::G1:
            if (k.a == CoverClass::Alster) {
                if (!two_move.members.empty() || two_move.factors.size() != 1) return false;
                for (std::size_t i = 0; i < one_move.members.size(); ++i)
                    if (one_move.members[i] == two_move.set && i < one_move.factors.size() &&
                        one_move.factors[i] == two_move.factors[0])
                        return true;
                return false;
            }
            return two_move.members.empty() && two_move.factors.empty() && is_member(one_move.members, two_move.set);
        case GameTag::Menger: {
            // Any finite subfamily of One's cover; the empty one is legal but never useful.
            if (!two_move.factors.empty()) return false;
            if (!std::is_sorted(two_move.members.begin(), two_move.members.end()) ||
                std::adjacent_find(two_move.members.begin(), two_move.members.end()) != two_move.members.end())
                return false;
            for (PointSet e : two_move.members)
                if (!is_member(one_move.members, e)) return false;
            return two_move.set == union_of(two_move.members);
        }
        case GameTag::PointOpen:
        case GameTag::CompactOpen:
            return two_move.members.empty() && two_move.factors.empty() && one_move.set.subset_of(two_move.set) &&
                   model.space.is_open(two_move.set);
        case GameTag::CompactGdelta: {
            if (!two_move.members.empty() || two_move.factors.size() != 1 || two_move.factors[0].empty()) return false;
            const auto& fs = two_move.factors[0];
            if (!all_open(model, fs)) return false;
            PointSet t = fs.front();
            for (PointSet f : fs) t &= f;
            return t == two_move.set && one_move.set.subset_of(t);
        }
    }
    return false;
}

std::vector<Move> two_replies(const GameSpec& spec, const Move& one_move) {
    std::vector<Move> out;
    const GameKind& k = spec.kind;
    switch (k.tag) {
        case GameTag::Rothberger:
            for (PointSet e : one_move.members) out.push_back(Move::pick(e));
            break;
        case GameTag::G1:
            for (std::size_t i = 0; i < one_move.members.size(); ++i) {
                if (k.a == CoverClass::Alster)
                    out.push_back(Move::pick(GdeltaPresentedSet{one_move.members[i], one_move.factors.at(i)}));
                else
                    out.push_back(Move::pick(one_move.members[i]));
            }
            break;
        case GameTag::Menger: {
            const std::size_t n = one_move.members.size();
            if (n > 20) throw Error("Menger cover too large to enumerate sublists");
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<PointSet> sub;
                for (std::size_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1U) sub.push_back(one_move.members[i]);
                out.push_back(Move::sublist(std::move(sub)));
            }
            break;
        }
        case GameTag::PointOpen:
        case GameTag::CompactOpen:
            for (PointSet o : spec.model->space.opens())
                if (one_move.set.subset_of(o)) out.push_back(Move::pick(o));
            break;
        case GameTag::CompactGdelta:
            for (PointSet o : spec.model->space.opens())
                if (one_move.set.subset_of(o)) out.push_back(Move::pick(GdeltaPresentedSet::open(o)));
            break;
    }
    return out;
}

Move reply_with_element(const GameSpec& spec, const Move& one_move, std::size_t i) {
    if (i >= one_move.members.size()) throw Error("reply_with_element: index out of range");
    if (spec.kind.tag == GameTag::Menger) return Move::sublist({one_move.members[i]});
    if (spec.kind.tag == GameTag::G1 && spec.kind.a == CoverClass::Alster)
        return Move::pick(GdeltaPresentedSet{one_move.members[i], one_move.factors.at(i)});
    return Move::pick(one_move.members[i]);
}

namespace {

// Validates a sequence of innings; returns the covered set after them.
PointSet check_innings(const GameSpec& spec, std::span<const Inning> innings) {
    PointSet covered;
    if (static_cast<int>(innings.size()) > spec.horizon) throw IllegalMove("illegal transcript: longer than horizon");
    for (std::size_t i = 0; i < innings.size(); ++i) {
        if (covered == spec.points()) throw IllegalMove("illegal transcript: play continues after coverage");
        if (!is_legal_one_move(spec, innings[i].one))
            throw IllegalMove("illegal transcript: One's move at inning " + std::to_string(i));
        if (!is_legal_two_move(spec, innings[i].one, innings[i].two))
            throw IllegalMove("illegal transcript: Two's move at inning " + std::to_string(i));
        covered |= innings[i].two.set;
    }
    return covered;
}

}  // namespace

std::vector<Move> legal_moves(const GameSpec& spec, const History& history, Side side) {
    PointSet covered = check_innings(spec, history.innings);
    if (covered == spec.points() || static_cast<int>(history.innings.size()) >= spec.horizon) return {};
    if (side == Side::One) {
        if (history.pending) throw IllegalMove("illegal transcript: One has already moved this inning");
        return spec.one_pool;
    }
    if (!history.pending) throw IllegalMove("illegal transcript: Two to move without a pending One move");
    if (!is_legal_one_move(spec, *history.pending)) throw IllegalMove("illegal transcript: pending One move illegal");
    return two_replies(spec, *history.pending);
}

Transcript make_transcript(const GameSpec& spec, std::vector<Inning> innings) {
    Transcript t;
    PointSet covered;
    for (auto& inn : innings) {
        covered |= inn.two.set;
        t.covered_after.push_back(covered);
    }
    t.innings = std::move(innings);
    (void)spec;
    return t;
}

Transcript play(const GameSpec& spec, const Strategy& one, const Strategy& two) {
    if (one.side() != Side::One || two.side() != Side::Two) throw Error("play: strategies given for the wrong sides");
    std::vector<Inning> innings;
    PointSet covered;
    const PointSet all = spec.points();
    for (int n = 0; n < spec.horizon && covered != all; ++n) {
        PlayContext ctx{&spec, innings, nullptr, covered, n};
        Move m1 = one.choose(ctx);
        if (!is_legal_one_move(spec, m1))
            throw IllegalMove("One played an illegal move at inning " + std::to_string(n) + ": " + m1.str());
        ctx.pending = &m1;
        Move m2 = two.choose(ctx);
        if (!is_legal_two_move(spec, m1, m2))
            throw IllegalMove("Two played an illegal move at inning " + std::to_string(n) + ": " + m2.str());
        covered |= m2.set;
        innings.push_back({std::move(m1), std::move(m2)});
    }
    return make_transcript(spec, std::move(innings));
}

Side judge(const GameSpec& spec, const Transcript& transcript) {
    PointSet covered;
    for (const auto& inn : transcript.innings) covered |= inn.two.set;
    const Side cov = covering_side(spec.kind);
    if (covered == spec.points()) return cov;
    if (static_cast<int>(transcript.innings.size()) < spec.horizon) throw Error("incomplete transcript");
    return opponent(cov);
}

std::vector<Move> replay_two(const GameSpec& spec, const Strategy& two, const std::vector<Move>& one_moves) {
    std::vector<Inning> innings;
    std::vector<Move> out;
    PointSet covered;
    for (std::size_t n = 0; n < one_moves.size() && covered != spec.points(); ++n) {
        PlayContext ctx{&spec, innings, &one_moves[n], covered, static_cast<int>(n)};
        Move r = two.choose(ctx);
        covered |= r.set;
        innings.push_back({one_moves[n], r});
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Move> replay_one(const GameSpec& spec, const Strategy& one, const std::vector<Move>& two_moves) {
    std::vector<Inning> innings;
    std::vector<Move> out;
    PointSet covered;
    for (std::size_t n = 0; n <= two_moves.size() && covered != spec.points(); ++n) {
        PlayContext ctx{&spec, innings, nullptr, covered, static_cast<int>(n)};
        Move m = one.choose(ctx);
        out.push_back(m);
        if (n == two_moves.size()) break;
        covered |= two_moves[n].set;
        innings.push_back({std::move(m), two_moves[n]});
    }
    return out;
}

namespace {

[[noreturn]] void illegal_answer(Side side, int inning, const Move& m) {
    throw IllegalMove(std::string(to_string(side)) + " strategy answered illegally at inning " +
                      std::to_string(inning) + ": " + m.str());
}

// Depth-first certification over histories, merging states according to the strategy's memory.
class TreeCertifier {
public:
    TreeCertifier(const GameSpec& spec, const Strategy& strat, const CertifyOptions& opts)
        : spec_(spec), strat_(strat), opts_(opts), all_(spec.points()), side_(strat.side()),
          cov_(covering_side(spec.kind)), memoize_(strat.memory() != Memory::Full) {}

    CertifyResult run() {
        CertifyResult res;
        res.certified = eval(PointSet{});
        if (!res.certified) res.counterplay = reconstruct();
        res.stats = stats_;
        return res;
    }

private:
    struct Option {
        Inning inning;
    };

    std::vector<Inning> options(PointSet covered) {
        std::vector<Inning> out;
        const int n = static_cast<int>(hist_.size());
        PlayContext ctx{&spec_, hist_, nullptr, covered, n};
        if (side_ == Side::One) {
            Move m = strat_.choose(ctx);
            if (!is_legal_one_move(spec_, m)) illegal_answer(Side::One, n, m);
            for (auto& r : two_replies(spec_, m)) out.push_back({m, std::move(r)});
        } else {
            for (const Move& m : spec_.one_pool) {
                ctx.pending = &m;
                Move r = strat_.choose(ctx);
                if (!is_legal_two_move(spec_, m, r)) illegal_answer(Side::Two, n, r);
                out.push_back({m, std::move(r)});
            }
        }
        return out;
    }

    std::string key(PointSet covered) const {
        std::string k(reinterpret_cast<const char*>(&covered), sizeof(covered));
        const int n = static_cast<int>(hist_.size());
        k.append(reinterpret_cast<const char*>(&n), sizeof(n));
        if (strat_.memory() == Memory::Keyed) {
            PlayContext ctx{&spec_, hist_, nullptr, covered, n};
            k += strat_.state_key(ctx);
        }
        return k;
    }

    bool eval(PointSet covered) {
        if (covered == all_) return side_ == cov_;
        if (static_cast<int>(hist_.size()) >= spec_.horizon) return side_ != cov_;
        std::string k;
        if (memoize_) {
            k = key(covered);
            if (auto it = memo_.find(k); it != memo_.end()) {
                ++stats_.memo_hits;
                return it->second;
            }
        }
        if (++stats_.nodes > opts_.node_budget) throw BudgetExceeded();
        bool ok = true;
        for (auto& inn : options(covered)) {
            PointSet next = covered | inn.two.set;
            hist_.push_back(std::move(inn));
            ok = eval(next);
            hist_.pop_back();
            if (!ok) break;
        }
        if (memoize_) memo_.emplace(std::move(k), ok);
        return ok;
    }

    Transcript reconstruct() {
        hist_.clear();
        PointSet covered;
        while (covered != all_ && static_cast<int>(hist_.size()) < spec_.horizon) {
            bool advanced = false;
            for (auto& inn : options(covered)) {
                PointSet next = covered | inn.two.set;
                hist_.push_back(inn);
                bool ok = eval(next);
                if (!ok) {
                    covered = next;
                    advanced = true;
                    break;
                }
                hist_.pop_back();
            }
            if (!advanced) throw Error("certify: internal inconsistency while rebuilding counterplay");
        }
        return make_transcript(spec_, hist_);
    }

    const GameSpec& spec_;
    const Strategy& strat_;
    CertifyOptions opts_;
    PointSet all_;
    Side side_;
    Side cov_;
    bool memoize_;
    std::vector<Inning> hist_;
    std::unordered_map<std::string, bool> memo_;
    CertifyStats stats_;
};

constexpr int kInfinite = std::numeric_limits<int>::max() / 2;

// Successor collection for a state with uncovered set `unc`: each contribution c leads to
// covered | c. When few points remain uncovered, successors are indexed by which uncovered
// points they hit, so deduplication is a single bit operation.
std::uint64_t pext_soft(std::uint64_t x, std::uint64_t mask) {
    std::uint64_t r = 0;
    for (std::uint64_t bb = 1; mask; bb <<= 1) {
        if (x & mask & -mask) r |= bb;
        mask &= mask - 1;
    }
    return r;
}

std::uint64_t pdep_soft(std::uint64_t x, std::uint64_t mask) {
    std::uint64_t r = 0;
    for (std::uint64_t bb = 1; mask; bb <<= 1) {
        if (x & bb) r |= mask & -mask;
        mask &= mask - 1;
    }
    return r;
}

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
__attribute__((target("bmi2"))) std::uint64_t hit_mask_bmi2(const std::uint64_t* c, std::size_t n, std::uint64_t unc) {
    std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 |= std::uint64_t{1} << __builtin_ia32_pext_di(c[i], unc);
        s1 |= std::uint64_t{1} << __builtin_ia32_pext_di(c[i + 1], unc);
        s2 |= std::uint64_t{1} << __builtin_ia32_pext_di(c[i + 2], unc);
        s3 |= std::uint64_t{1} << __builtin_ia32_pext_di(c[i + 3], unc);
    }
    for (; i < n; ++i) s0 |= std::uint64_t{1} << __builtin_ia32_pext_di(c[i], unc);
    return s0 | s1 | s2 | s3;
}
const bool kHaveBmi2 = __builtin_cpu_supports("bmi2");
#else
std::uint64_t hit_mask_bmi2(const std::uint64_t*, std::size_t, std::uint64_t) { return 0; }
const bool kHaveBmi2 = false;
#endif

std::uint64_t hit_mask(const std::vector<std::uint64_t>& c, std::uint64_t unc) {
    if (kHaveBmi2) return hit_mask_bmi2(c.data(), c.size(), unc);
    std::uint64_t seen = 0;
    for (std::uint64_t x : c) seen |= std::uint64_t{1} << pext_soft(x, unc);
    return seen;
}

// Certification of Stationary strategies: since answers depend on the covered set alone, the
// exact number of innings the covering side needs (or can be held to) is a function of the
// covered set, computed once per set and compared against the horizon.
class StationaryCertifier {
public:
    StationaryCertifier(const GameSpec& spec, const Strategy& strat, const CertifyOptions& opts)
        : spec_(spec), strat_(strat), opts_(opts), all_(spec.points()), side_(strat.side()),
          cov_(covering_side(spec.kind)) {}

    CertifyResult run() {
        CertifyResult res;
        const int v = value(PointSet{});
        res.certified = side_ == cov_ ? v <= spec_.horizon : v > spec_.horizon;
        if (!res.certified) res.counterplay = reconstruct();
        res.stats = stats_;
        return res;
    }

private:
    // Contribution of each opposing option at `covered`, in canonical option order.
    const std::vector<std::uint64_t>& contributions(PointSet covered) {
        PlayContext ctx{&spec_, {}, nullptr, covered, 0};
        if (side_ == Side::Two) {
            std::optional<std::uint64_t> f = strat_.focus(ctx);
            if (f) {
                auto it = focus_cache_.find(*f);
                if (it != focus_cache_.end()) return it->second;
                return focus_cache_.emplace(*f, two_contributions(ctx)).first->second;
            }
            scratch_ = two_contributions(ctx);
            return scratch_;
        }
        Move m = strat_.choose(ctx);
        if (!is_legal_one_move(spec_, m)) illegal_answer(Side::One, 0, m);
        scratch_.clear();
        for (const Move& r : two_replies(spec_, m)) scratch_.push_back(r.set.bits());
        return scratch_;
    }

    std::vector<std::uint64_t> two_contributions(PlayContext ctx) {
        std::vector<std::uint64_t> out;
        out.reserve(spec_.one_pool.size());
        for (const Move& m : spec_.one_pool) {
            ctx.pending = &m;
            Move r = strat_.choose(ctx);
            if (!is_legal_two_move(spec_, m, r)) illegal_answer(Side::Two, ctx.inning, r);
            out.push_back(r.set.bits());
        }
        return out;
    }

    // Distinct successors (excluding `covered` itself) and whether a self-loop exists.
    std::vector<PointSet> successors(PointSet covered, bool& self_loop) {
        const std::vector<std::uint64_t>& c = contributions(covered);
        const PointSet unc = all_ - covered;
        std::vector<PointSet> out;
        self_loop = false;
        if (unc.size() <= 6) {
            std::uint64_t seen = hit_mask(c, unc.bits());
            self_loop = seen & 1U;
            for (std::uint64_t s = seen & ~std::uint64_t{1}; s; s &= s - 1)
                out.push_back(covered | PointSet(pdep_soft(std::countr_zero(s), unc.bits())));
        } else {
            std::unordered_set<std::uint64_t> seen;
            for (std::uint64_t x : c) {
                PointSet next = covered | PointSet(x);
                if (next == covered)
                    self_loop = true;
                else if (seen.insert(next.bits()).second)
                    out.push_back(next);
            }
        }
        return out;
    }

    int value(PointSet covered) {
        if (covered == all_) return 0;
        if (auto it = memo_.find(covered.bits()); it != memo_.end()) {
            ++stats_.memo_hits;
            return it->second;
        }
        if (++stats_.nodes > opts_.node_budget) throw BudgetExceeded();
        bool self_loop = false;
        std::vector<PointSet> next = successors(covered, self_loop);
        int v;
        if (side_ == cov_) {
            // Opponent stalls as long as possible.
            v = 0;
            if (self_loop) v = kInfinite;
            for (PointSet s : next) {
                if (v >= kInfinite) break;
                v = std::max(v, value(s));
            }
            v = v >= kInfinite ? kInfinite : v + 1;
        } else {
            // Opponent races to cover.
            v = kInfinite;
            for (PointSet s : next) v = std::min(v, value(s));
            v = v >= kInfinite ? kInfinite : v + 1;
        }
        memo_.emplace(covered.bits(), v);
        return v;
    }

    Transcript reconstruct() {
        std::vector<Inning> hist;
        PointSet covered;
        while (covered != all_ && static_cast<int>(hist.size()) < spec_.horizon) {
            const int n = static_cast<int>(hist.size());
            const int left = spec_.horizon - n - 1;
            PlayContext ctx{&spec_, hist, nullptr, covered, n};
            std::vector<Inning> opts;
            if (side_ == Side::Two) {
                for (const Move& m : spec_.one_pool) {
                    ctx.pending = &m;
                    opts.push_back({m, strat_.choose(ctx)});
                }
            } else {
                Move m = strat_.choose(ctx);
                for (auto& r : two_replies(spec_, m)) opts.push_back({m, std::move(r)});
            }
            bool advanced = false;
            for (auto& inn : opts) {
                PointSet next = covered | inn.two.set;
                const int v = next == covered ? kInfinite : value(next);
                const bool defeats = side_ == cov_ ? v > left : v <= left;
                if (defeats) {
                    covered = next;
                    hist.push_back(std::move(inn));
                    advanced = true;
                    break;
                }
            }
            if (!advanced) throw Error("certify: internal inconsistency while rebuilding counterplay");
        }
        return make_transcript(spec_, std::move(hist));
    }

    const GameSpec& spec_;
    const Strategy& strat_;
    CertifyOptions opts_;
    PointSet all_;
    Side side_;
    Side cov_;
    std::unordered_map<std::uint64_t, int> memo_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> focus_cache_;
    std::vector<std::uint64_t> scratch_;
    CertifyStats stats_;
};

}  // namespace

CertifyResult certify(const GameSpec& spec, const Strategy& strategy, const CertifyOptions& options) {
    if (!strategy) throw Error("certify: empty strategy");
    if (strategy.memory() == Memory::Stationary) return StationaryCertifier(spec, strategy, options).run();
    return TreeCertifier(spec, strategy, options).run();
}

}  // namespace selgames
