#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "selgames/point_set.hpp"

namespace selgames {

/// A topology on the points 0..point_count-1.
///
/// Most spaces carry their opens explicitly. Catalog models whose topology is
/// too large to list (e.g. the one-point Lindelofication shadow) use an implicit
/// representation given by an open-set predicate and an interior operator;
/// operations that need to enumerate opens reject those.
class FiniteSpace {
public:
    FiniteSpace() = default;

    /// Validates the invariants: empty set and full set present, closed under
    /// pairwise union and intersection, every member within range.
    FiniteSpace(int point_count, std::vector<PointSet> opens);

    static FiniteSpace implicit(int point_count, std::function<bool(PointSet)> is_open,
                                std::function<PointSet(PointSet)> interior);

    int point_count() const { return point_count_; }
    PointSet points() const { return PointSet::full(point_count_); }

    bool enumerable() const { return !open_pred_; }
    /// Canonically sorted opens. Throws for implicit spaces.
    const std::vector<PointSet>& opens() const;

    bool is_open(PointSet s) const;
    /// Largest open subset of s.
    PointSet interior(PointSet s) const;

private:
    int point_count_ = 0;
    std::vector<PointSet> opens_;
    std::function<bool(PointSet)> open_pred_;
    std::function<PointSet(PointSet)> interior_fn_;
};

/// Smallest topology containing the subbasis.
FiniteSpace from_subbasis(int point_count, const std::vector<PointSet>& subbasis);

PointSet closure(const FiniteSpace& space, PointSet a);
bool is_closed(const FiniteSpace& space, PointSet a);

bool is_regular(const FiniteSpace& space);
bool is_t0(const FiniteSpace& space);
bool is_t1(const FiniteSpace& space);

/// Points of `a` that are not isolated in the subspace `a`.
PointSet cb_derivative(const FiniteSpace& space, PointSet a);

struct Scatteredness {
    bool scattered = false;
    int cb_rank = 0;  // number of derivative steps to reach the empty set (when scattered)
};

Scatteredness is_scattered(const FiniteSpace& space);

/// Cantor-Bendixson rank of each point: 1 for points isolated in X, 2 for points
/// isolated in the first derivative, and so on; 0 for points of the perfect kernel.
std::vector<int> cb_point_ranks(const FiniteSpace& space);

/// A finite space together with its declared compact sets and its ideal of small sets.
struct SpaceModel {
    FiniteSpace space;
    std::vector<PointSet> compact_pool;
    std::vector<PointSet> small_ideal;
    /// Sets treated as the Rothberger subspaces; all singletons when absent.
    std::optional<std::vector<PointSet>> rothberger_pool;
    std::string label;

    int point_count() const { return space.point_count(); }
    PointSet points() const { return space.points(); }
    std::vector<PointSet> effective_rothberger_pool() const;
};

/// Throws InvariantError naming the first violated model invariant.
void validate_model(const SpaceModel& model);

/// Model with default pools: all singletons as compacts, {empty} as the small ideal.
SpaceModel make_model(FiniteSpace space, std::string label = {});

/// All subsets of the given set (its downward closure), canonically sorted.
std::vector<PointSet> subsets_of(PointSet s);

/// Deterministic pseudo-random model; equal seeds give identical models.
SpaceModel random_model(std::uint64_t seed, int point_count, int subbasis_size);

// Named small spaces.
FiniteSpace discrete_space(int n);
FiniteSpace indiscrete_space(int n);
/// Chain topology {0}, {0,1}, ..., {0..n-1} plus the empty set.
FiniteSpace chain_space(int n);

}  // namespace selgames
