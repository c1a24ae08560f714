#pragma once

#include <map>
#include <optional>
#include <vector>

#include "selgames/engine.hpp"

namespace selgames {

// ---- catalog strategies ----

/// Smallest open set containing `s` (the intersection of the opens around it).
PointSet minimal_open_containing(const FiniteSpace& space, PointSet s);

/// Two, selection games: the least element of One's cover containing the least uncovered point.
Strategy countable_enumeration_strategy(const SpaceModel& model);
/// Two, selection games: the least element containing an uncovered point of maximal
/// Cantor-Bendixson rank. Throws Error("space not scattered").
Strategy scattered_rank_strategy(const SpaceModel& model);
/// Two, selection games: always the first element (Menger: the first element alone).
Strategy first_element_strategy();

/// One, point-open game: the least uncovered point.
Strategy least_uncovered_point_strategy();
/// One, compact games: the least pool compact not yet covered (the first one once all are).
Strategy uncovered_compact_strategy();
/// Two, point/compact games: the minimal open around One's point or compact.
Strategy minimal_open_strategy();
/// One, any game: always the given move.
Strategy constant_strategy(Move move);

// ---- diagonal selection for Alster covers ----

struct DiagonalSelection {
    /// Index into covers[n mod k] of A_n.
    std::vector<std::size_t> indices;
    std::vector<GdeltaPresentedSet> picks;
    /// The product choices f_n used, as index vectors over the first m covers.
    std::vector<std::vector<std::size_t>> choices;
};

/// Treats `covers` as the sequence covers[0], covers[1], ... repeated cyclically, forms V_f for
/// product choices f over the first max(rounds, k) covers, greedily picks f_0..f_{rounds-1}
/// with the V_f covering X, and returns A_n = f_n(n).
/// Throws Error("not an Alster cover") or Error when `rounds` choices cannot cover X.
DiagonalSelection alster_diagonal_selection(const SpaceModel& model, const std::vector<GdeltaCover>& covers,
                                            int rounds);

// ---- subcover extraction from a Two-Menger strategy ----

struct ExtractionStep {
    /// History s as indices into the pool.
    std::vector<std::size_t> history;
    /// Index of W_s in W.
    std::size_t chosen = 0;
    PointSet kernel;
    /// C_s as indices into the pool.
    std::vector<std::size_t> witnesses;
};

struct MengerExtraction {
    std::vector<GdeltaPresentedSet> subfamily;
    std::vector<ExtractionStep> steps;
    bool covers = false;
};

/// sigma: Two-Menger strategy for `spec` (one_pool = P, horizon = depth). W: Alster cover.
/// Throws Error when the space is not regular or some K_s lies in no element of W.
MengerExtraction extract_alster_subcover_from_menger(const GameSpec& spec, const Strategy& sigma,
                                                     const GdeltaCover& w);
/// A legal play (One wins) in which sigma leaves a point outside the extracted family uncovered,
/// or nullopt when the extracted family covers X.
std::optional<Transcript> falsify_menger_extraction(const GameSpec& spec, const Strategy& sigma,
                                                    const GdeltaCover& w);

// ---- subcover extraction from a One-point-open strategy ----

struct TreeNode {
    /// s as a sequence of factor indices.
    std::vector<std::size_t> path;
    std::size_t chosen = 0;
    int point = 0;
};

struct GdeltaExtraction {
    std::vector<GdeltaPresentedSet> subfamily;
    std::vector<TreeNode> nodes;
    bool covers = false;
};

/// sigma: One strategy for the point-open `spec`; W: Gdelta cover with factor presentations.
GdeltaExtraction extract_gdelta_subcover_from_pointopen(const GameSpec& spec, const Strategy& sigma,
                                                        const GdeltaCover& w);
std::optional<Transcript> falsify_pointopen_extraction(const GameSpec& spec, const Strategy& sigma,
                                                       const GdeltaCover& w);

// ---- refinement by small closed sets ----

struct Decomposition {
    PointSet u;  // open in the base topology
    PointSet c;  // member of the small ideal
};

struct RefinedInstance {
    std::shared_ptr<const SpaceModel> base;
    std::shared_ptr<const SpaceModel> refined;
    /// Basic refined opens W = u - c, with their least decomposition.
    std::map<PointSet, Decomposition> decomposition;
};

/// The topology generated by {U - C : U base-open, C in the small ideal}.
RefinedInstance make_refined_instance(std::shared_ptr<const SpaceModel> base);

/// Irredundant covers of the refined space by basic refined opens.
std::vector<CoverFamily> refined_pool(const RefinedInstance& inst);

/// Horizon at which the combined strategy is guaranteed: 2h(1 + ceil(max_c / quota)), where
/// max_c bounds the points queued per even inning.
int refined_horizon(int base_horizon, int max_queued, int quota);
/// Largest |union of C(W)| over the covers of the pool.
int max_queued_points(const RefinedInstance& inst, const std::vector<Move>& pool);

/// Base-space spec whose One plays the images {U(W)} of the refined pool's covers.
GameSpec base_spec_for(const RefinedInstance& inst, const std::vector<Move>& refined_pool, int horizon);

/// Two-Menger strategy on the refined space built from rho (Two-Menger on base_spec).
Strategy refine_menger_strategy(const GameSpec& base_spec, const Strategy& rho, const RefinedInstance& inst,
                                int quota, int period);

// ---- Cantor space witness ----

struct Cylinder {
    std::map<int, int> constraints;
    bool operator==(const Cylinder&) const = default;
    std::string str() const;
};

struct UncoveredRegion {
    /// nullopt is the empty region.
    std::optional<Cylinder> cylinder;
    bool empty() const { return !cylinder.has_value(); }
};

/// One plays the two half-cylinders of coordinate n in inning n; `two` names the half Two picks.
/// Returns the region left uncovered after `depth` innings.
UncoveredRegion cantor_witness(int depth, const std::function<int(int inning, const Cylinder& region)>& two);

// ---- one-point Lindelofication shadow ----

/// N isolated points 0..N-1 and a special point p = N whose neighbourhoods miss at most c points.
struct FortissimoModel {
    int n = 0;
    int c = 0;
    std::shared_ptr<const SpaceModel> model;

    int special() const { return n; }
};

FortissimoModel make_fortissimo(int n, int c);
/// One's covers: {X - S} plus the singletons of S, for every S of at most c isolated points.
std::vector<Move> fortissimo_pool(const FortissimoModel& fm);
/// Covers p first, then the remaining points in increasing order.
Strategy fortissimo_strategy(const FortissimoModel& fm);

}  // namespace selgames
