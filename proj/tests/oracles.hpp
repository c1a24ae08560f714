#pragma once

// Brute-force reference implementations, written directly from the definitions and
// sharing no code with the library beyond the value types.

#include <functional>
#include <map>
#include <vector>

#include "selgames/engine.hpp"

namespace oracle {

using selgames::PointSet;

inline std::vector<PointSet> all_subsets(int n) {
    std::vector<PointSet> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
    return out;
}

// Smallest topology containing the subbasis: S is open iff every x in S has its minimal
// basic neighbourhood (intersection of subbasis members containing x) inside S.
inline std::vector<PointSet> topology_from_subbasis(int n, const std::vector<PointSet>& sub) {
    std::vector<PointSet> out;
    const PointSet all = PointSet::full(n);
    std::vector<PointSet> nbhd(n, all);
    for (int x = 0; x < n; ++x)
        for (PointSet s : sub)
            if (s.contains(x)) nbhd[x] &= s;
    for (PointSet s : all_subsets(n)) {
        bool ok = true;
        for (int x : s.points()) ok = ok && nbhd[x].subset_of(s);
        if (ok) out.push_back(s);
    }
    return out;
}

inline PointSet closure(const selgames::FiniteSpace& sp, PointSet a) {
    PointSet cl = sp.points();
    for (PointSet o : sp.opens()) {
        PointSet closed = sp.points() - o;
        if (a.subset_of(closed)) cl &= closed;
    }
    return cl;
}

inline bool regular(const selgames::FiniteSpace& sp) {
    for (PointSet o : sp.opens()) {
        PointSet f = sp.points() - o;
        for (int x : o.points()) {
            bool sep = false;
            for (PointSet u : sp.opens())
                for (PointSet v : sp.opens())
                    if (u.contains(x) && f.subset_of(v) && !u.intersects(v)) sep = true;
            if (!sep) return false;
        }
    }
    return true;
}

inline PointSet derivative(const selgames::FiniteSpace& sp, PointSet a) {
    PointSet out;
    for (int x : a.points()) {
        bool isolated = false;
        for (PointSet u : sp.opens())
            if ((u & a) == PointSet::singleton(x)) isolated = true;
        if (!isolated) out.insert(x);
    }
    return out;
}

// Covering-side win by plain minimax over the game tree (no memo, no state merging).
inline bool covering_side_wins(const selgames::GameSpec& spec, PointSet covered, int inning) {
    if (covered == spec.points()) return true;
    if (inning == spec.horizon) return false;
    const bool two_covers = selgames::covering_side(spec.kind) == selgames::Side::Two;
    auto reply_ok = [&](const selgames::Move& m) {
        auto rs = selgames::two_replies(spec, m);
        for (const auto& r : rs) {
            bool w = covering_side_wins(spec, covered | r.set, inning + 1);
            if (two_covers && w) return true;
            if (!two_covers && !w) return false;
        }
        return !two_covers;
    };
    for (const auto& m : spec.one_pool) {
        bool w = reply_ok(m);
        if (two_covers && !w) return false;
        if (!two_covers && w) return true;
    }
    return two_covers;
}

inline selgames::Side winner(const selgames::GameSpec& spec) {
    const bool cov = covering_side_wins(spec, PointSet{}, 0);
    const selgames::Side c = selgames::covering_side(spec.kind);
    return cov ? c : selgames::opponent(c);
}

// Whether a strategy wins every play, by enumerating all opposing lines explicitly.
inline bool strategy_wins(const selgames::GameSpec& spec, const selgames::Strategy& s,
                          std::vector<selgames::Inning>& hist, PointSet covered) {
    using selgames::Side;
    const Side cov = selgames::covering_side(spec.kind);
    if (covered == spec.points()) return s.side() == cov;
    if (static_cast<int>(hist.size()) == spec.horizon) return s.side() != cov;
    const int n = static_cast<int>(hist.size());
    std::vector<selgames::Inning> lines;
    if (s.side() == Side::One) {
        selgames::PlayContext ctx{&spec, hist, nullptr, covered, n};
        selgames::Move m = s.choose(ctx);
        for (auto& r : selgames::two_replies(spec, m)) lines.push_back({m, r});
    } else {
        for (const auto& m : spec.one_pool) {
            selgames::PlayContext ctx{&spec, hist, &m, covered, n};
            lines.push_back({m, s.choose(ctx)});
        }
    }
    for (auto& l : lines) {
        PointSet next = covered | l.two.set;
        hist.push_back(l);
        bool ok = strategy_wins(spec, s, hist, next);
        hist.pop_back();
        if (!ok) return false;
    }
    return true;
}

inline bool strategy_wins(const selgames::GameSpec& spec, const selgames::Strategy& s) {
    std::vector<selgames::Inning> hist;
    return strategy_wins(spec, s, hist, PointSet{});
}

}  // namespace oracle
