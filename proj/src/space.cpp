#include "selgames/space.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace selgames {

namespace {

void check_range(int point_count, PointSet s, const char* what) {
    if (!s.subset_of(PointSet::full(point_count)))
        throw RangeError(std::string(what) + " member " + s.str() + " is not a subset of the point set");
}

void check_point_count(int point_count) {
    if (point_count < 0 || point_count > kMaxPoints)
        throw RangeError("point_count must lie in 0.." + std::to_string(kMaxPoints));
}

// Closes `family` under a binary operation by saturation.
template <class Op>
void saturate(std::vector<PointSet>& family, Op op) {
    std::unordered_set<PointSet, PointSetHash> seen(family.begin(), family.end());
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            PointSet r = op(family[i], family[j]);
            if (seen.insert(r).second) family.push_back(r);
        }
    }
}

}  // namespace

FiniteSpace::FiniteSpace(int point_count, std::vector<PointSet> opens)
    : point_count_(point_count), opens_(std::move(opens)) {
    check_point_count(point_count);
    for (PointSet s : opens_) check_range(point_count, s, "opens");
    canonicalize(opens_);
    const PointSet all = PointSet::full(point_count);
    if (!std::binary_search(opens_.begin(), opens_.end(), PointSet{}))
        throw InvariantError("invariant violated: the empty set must be open");
    if (!std::binary_search(opens_.begin(), opens_.end(), all))
        throw InvariantError("invariant violated: the full point set must be open");
    std::unordered_set<PointSet, PointSetHash> lookup(opens_.begin(), opens_.end());
    for (std::size_t i = 0; i < opens_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (!lookup.contains(opens_[i] | opens_[j]))
                throw InvariantError("invariant violated: opens not closed under union (" +
                                     opens_[i].str() + " u " + opens_[j].str() + ")");
            if (!lookup.contains(opens_[i] & opens_[j]))
                throw InvariantError("invariant violated: opens not closed under intersection (" +
                                     opens_[i].str() + " n " + opens_[j].str() + ")");
        }
    }
}

FiniteSpace FiniteSpace::implicit(int point_count, std::function<bool(PointSet)> is_open,
                                  std::function<PointSet(PointSet)> interior) {
    check_point_count(point_count);
    FiniteSpace s;
    s.point_count_ = point_count;
    s.open_pred_ = std::move(is_open);
    s.interior_fn_ = std::move(interior);
    return s;
}

const std::vector<PointSet>& FiniteSpace::opens() const {
    if (open_pred_) throw Error("space opens are not enumerable (implicit topology)");
    return opens_;
}

bool FiniteSpace::is_open(PointSet s) const {
    if (open_pred_) return s.subset_of(points()) && open_pred_(s);
    return std::binary_search(opens_.begin(), opens_.end(), s);
}

PointSet FiniteSpace::interior(PointSet s) const {
    check_range(point_count_, s, "argument");
    if (interior_fn_) return interior_fn_(s);
    PointSet r;
    for (PointSet o : opens_)
        if (o.subset_of(s)) r |= o;
    return r;
}

FiniteSpace from_subbasis(int point_count, const std::vector<PointSet>& subbasis) {
    check_point_count(point_count);
    std::vector<PointSet> family{PointSet::full(point_count)};
    for (PointSet s : subbasis) {
        check_range(point_count, s, "subbasis");
        family.push_back(s);
    }
    canonicalize(family);
    saturate(family, [](PointSet a, PointSet b) { return a & b; });
    family.push_back(PointSet{});
    canonicalize(family);
    saturate(family, [](PointSet a, PointSet b) { return a | b; });
    return FiniteSpace(point_count, std::move(family));
}

PointSet closure(const FiniteSpace& space, PointSet a) {
    const PointSet all = space.points();
    return all - space.interior(all - a);
}

bool is_closed(const FiniteSpace& space, PointSet a) { return space.is_open(space.points() - a); }

bool is_regular(const FiniteSpace& space) {
    // x in open O admits an open U with x in U and cl(U) inside O.
    const auto& opens = space.opens();
    for (PointSet o : opens) {
        bool ok = true;
        o.for_each([&](int x) {
            if (!ok) return;
            bool found = false;
            for (PointSet u : opens) {
                if (u.contains(x) && closure(space, u).subset_of(o)) {
                    found = true;
                    break;
                }
            }
            ok = found;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_t0(const FiniteSpace& space) {
    const int n = space.point_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            // Some open separates them iff their closures differ.
            if (closure(space, PointSet::singleton(x)) == closure(space, PointSet::singleton(y)))
                return false;
        }
    return true;
}

bool is_t1(const FiniteSpace& space) {
    for (int x = 0; x < space.point_count(); ++x)
        if (closure(space, PointSet::singleton(x)) != PointSet::singleton(x)) return false;
    return true;
}

PointSet cb_derivative(const FiniteSpace& space, PointSet a) {
    PointSet result;
    const PointSet all = space.points();
    a.for_each([&](int x) {
        // x is isolated in a iff the interior of (X minus the rest of a) contains x.
        PointSet rest = a - PointSet::singleton(x);
        if (!space.interior(all - rest).contains(x)) result.insert(x);
    });
    return result;
}

Scatteredness is_scattered(const FiniteSpace& space) {
    PointSet cur = space.points();
    int rank = 0;
    while (!cur.empty()) {
        PointSet next = cb_derivative(space, cur);
        if (next == cur) return {false, 0};
        cur = next;
        ++rank;
    }
    return {true, rank};
}

std::vector<int> cb_point_ranks(const FiniteSpace& space) {
    std::vector<int> ranks(space.point_count(), 0);
    PointSet cur = space.points();
    int level = 1;
    while (!cur.empty()) {
        PointSet next = cb_derivative(space, cur);
        if (next == cur) break;
        (cur - next).for_each([&](int x) { ranks[x] = level; });
        cur = next;
        ++level;
    }
    return ranks;
}

std::vector<PointSet> SpaceModel::effective_rothberger_pool() const {
    if (rothberger_pool) return *rothberger_pool;
    std::vector<PointSet> out;
    for (int x = 0; x < point_count(); ++x) out.push_back(PointSet::singleton(x));
    return out;
}

void validate_model(const SpaceModel& model) {
    const PointSet all = model.points();
    for (PointSet k : model.compact_pool)
        if (!k.subset_of(all)) throw InvariantError("invariant violated: compact_pool member outside the point set");
    for (int x = 0; x < model.point_count(); ++x)
        if (std::find(model.compact_pool.begin(), model.compact_pool.end(), PointSet::singleton(x)) ==
            model.compact_pool.end())
            throw InvariantError("invariant violated: every singleton must be in compact_pool");
    std::unordered_set<PointSet, PointSetHash> ideal(model.small_ideal.begin(), model.small_ideal.end());
    if (!ideal.contains(PointSet{})) throw InvariantError("invariant violated: small_ideal must contain the empty set");
    for (PointSet c : model.small_ideal) {
        if (!c.subset_of(all)) throw InvariantError("invariant violated: small_ideal member outside the point set");
        for (PointSet d : subsets_of(c))
            if (!ideal.contains(d)) throw InvariantError("invariant violated: small_ideal not downward closed");
        for (PointSet d : model.small_ideal)
            if (!ideal.contains(c | d)) throw InvariantError("invariant violated: small_ideal not closed under union");
    }
    if (model.rothberger_pool)
        for (PointSet r : *model.rothberger_pool)
            if (!r.subset_of(all)) throw InvariantError("invariant violated: rothberger_pool member outside the point set");
}

SpaceModel make_model(FiniteSpace space, std::string label) {
    SpaceModel m;
    for (int x = 0; x < space.point_count(); ++x) m.compact_pool.push_back(PointSet::singleton(x));
    m.small_ideal = {PointSet{}};
    m.space = std::move(space);
    m.label = std::move(label);
    return m;
}

std::vector<PointSet> subsets_of(PointSet s) {
    std::vector<PointSet> out;
    // Standard submask enumeration, descending; sorted afterwards.
    std::uint64_t m = s.bits();
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
        out.emplace_back(sub);
        if (sub == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpaceModel random_model(std::uint64_t seed, int point_count, int subbasis_size) {
    if (point_count < 1) throw RangeError("random_model requires point_count >= 1");
    check_point_count(point_count);
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = PointSet::full(point_count).bits();
    auto draw = [&] { return PointSet(rng() & mask); };

    std::vector<PointSet> subbasis;
    for (int i = 0; i < subbasis_size; ++i) subbasis.push_back(draw());
    SpaceModel m = make_model(from_subbasis(point_count, subbasis),
                              "random(" + std::to_string(seed) + "," + std::to_string(point_count) + "," +
                                  std::to_string(subbasis_size) + ")");
    m.compact_pool.push_back(draw());
    m.compact_pool.push_back(draw());
    canonicalize(m.compact_pool);
    m.small_ideal = subsets_of(draw());
    return m;
}

FiniteSpace discrete_space(int n) { return FiniteSpace(n, subsets_of(PointSet::full(n))); }

FiniteSpace indiscrete_space(int n) { return FiniteSpace(n, {PointSet{}, PointSet::full(n)}); }

FiniteSpace chain_space(int n) {
    std::vector<PointSet> opens{PointSet{}};
    for (int k = 1; k <= n; ++k) opens.push_back(PointSet::full(k));
    return FiniteSpace(n, std::move(opens));
}

}  // namespace selgames
