#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "selgames/space.hpp"

namespace selgames {

enum class CoverClass { O, Ostar, K, Alster, R, Odelta };

std::string_view to_string(CoverClass c);
CoverClass cover_class_from_string(std::string_view name);

using ClassSet = std::set<CoverClass>;

/// Class names sorted alphabetically, the serialized form of a classification.
std::vector<std::string> class_names(const ClassSet& classes);

/// A family of point-sets with pairwise distinct elements, kept in canonical order.
class CoverFamily {
public:
    CoverFamily() = default;
    /// Throws InvariantError on duplicate elements.
    explicit CoverFamily(std::vector<PointSet> elements);
    CoverFamily(std::initializer_list<PointSet> elements) : CoverFamily(std::vector<PointSet>(elements)) {}
    /// Canonicalizes silently, dropping duplicates.
    static CoverFamily dedup(std::vector<PointSet> elements);

    const std::vector<PointSet>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    PointSet operator[](std::size_t i) const { return elements_[i]; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }
    bool contains(PointSet s) const;
    PointSet union_set() const { return union_of(elements_); }

    auto operator<=>(const CoverFamily&) const = default;

    std::string str() const;

private:
    std::vector<PointSet> elements_;
};

/// A Gdelta set given by an explicit finite list of open factors; target = their intersection.
struct GdeltaPresentedSet {
    PointSet target;
    std::vector<PointSet> factors;

    /// Builds the presentation from its factors; throws InvariantError when factors is empty.
    static GdeltaPresentedSet of(std::vector<PointSet> factors);
    /// The trivial presentation of an open set by itself.
    static GdeltaPresentedSet open(PointSet s) { return of({s}); }

    auto operator<=>(const GdeltaPresentedSet&) const = default;
};

class GdeltaCover {
public:
    GdeltaCover() = default;
    /// Validates target = intersection of factors; rejects duplicate presentations.
    explicit GdeltaCover(std::vector<GdeltaPresentedSet> elements);
    /// Presents every element of an open family by itself.
    static GdeltaCover from_opens(const CoverFamily& fam);

    const std::vector<GdeltaPresentedSet>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const GdeltaPresentedSet& operator[](std::size_t i) const { return elements_[i]; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }
    std::vector<PointSet> targets() const;

    auto operator<=>(const GdeltaCover&) const = default;

private:
    std::vector<GdeltaPresentedSet> elements_;
};

struct Verdict {
    bool ok = false;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};

Verdict is_open_cover(const SpaceModel& model, const CoverFamily& fam);
/// Every factor open and the targets covering the space.
Verdict is_gdelta_cover(const SpaceModel& model, const GdeltaCover& cover);

/// Smallest superfamily closed under pairwise union.
CoverFamily finite_union_closure(const SpaceModel& model, const CoverFamily& fam);

/// Each requirement lies inside some element.
bool contains_each(const std::vector<PointSet>& elements, const std::vector<PointSet>& requirements);

ClassSet classify(const SpaceModel& model, const CoverFamily& fam);
ClassSet classify(const SpaceModel& model, const GdeltaCover& cover);

bool in_class(const SpaceModel& model, const CoverFamily& fam, CoverClass c);
bool in_class(const SpaceModel& model, const GdeltaCover& cover, CoverClass c);

/// One pick per family, as indices into the families and the picked sets (targets for Gdelta covers).
struct Selection {
    std::vector<std::size_t> indices;
    std::vector<PointSet> picks;
};

struct SelectionResult {
    std::optional<Selection> selection;
    /// True when no selection was found after examining the whole product.
    bool exhaustive = false;
    std::uint64_t examined = 0;
};

/// Lexicographic brute-force search over the product of the families.
/// Throws Error("empty cover") when some family is empty.
SelectionResult s1_select(const SpaceModel& model, const std::vector<CoverFamily>& seq, CoverClass target);
/// Gdelta form; the picks are judged as a Gdelta family (target Odelta or Alster).
SelectionResult s1_select(const SpaceModel& model, const std::vector<GdeltaCover>& seq, CoverClass target);

struct S1PoolReport {
    bool holds = true;
    /// Lexicographically least failing sequence, as indices into the pool.
    std::vector<std::size_t> counterexample;
};

S1PoolReport s1_holds_over_pool(const SpaceModel& model, const std::vector<CoverFamily>& pool, int length,
                                CoverClass target);

/// All families F drawn from `candidates` (given in canonical order) such that every requirement
/// lies in some member and every member is the only member containing some requirement.
/// Families are listed in lexicographic order of candidate indices.
std::vector<std::vector<std::size_t>> minimal_families(const std::vector<PointSet>& candidates,
                                                       const std::vector<PointSet>& requirements);

/// Open covers from which no element can be removed.
std::vector<CoverFamily> irredundant_covers(const SpaceModel& model);
/// k-covers from which no element can be removed while keeping the k-cover property.
std::vector<CoverFamily> minimal_k_covers(const SpaceModel& model);
/// Minimal Alster covers; every Gdelta set of a finite space is open, so targets are opens
/// presented by themselves.
std::vector<GdeltaCover> minimal_alster_covers(const SpaceModel& model);

}  // namespace selgames
