#include "selgames/covers.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_set>

namespace selgames {

namespace {

constexpr std::array<std::pair<CoverClass, std::string_view>, 6> kClassNames{{
    {CoverClass::O, "O"},
    {CoverClass::Ostar, "Ostar"},
    {CoverClass::K, "K"},
    {CoverClass::Alster, "Alster"},
    {CoverClass::R, "R"},
    {CoverClass::Odelta, "Odelta"},
}};

}  // namespace

std::string_view to_string(CoverClass c) {
    for (auto [k, name] : kClassNames)
        if (k == c) return name;
    return "?";
}

CoverClass cover_class_from_string(std::string_view name) {
    for (auto [k, n] : kClassNames)
        if (n == name) return k;
    throw Error("unknown cover class '" + std::string(name) + "'");
}

std::vector<std::string> class_names(const ClassSet& classes) {
    std::vector<std::string> out;
    for (CoverClass c : classes) out.emplace_back(to_string(c));
    std::sort(out.begin(), out.end());
    return out;
}

CoverFamily::CoverFamily(std::vector<PointSet> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw InvariantError("invariant violated: cover family elements must be pairwise distinct");
}

CoverFamily CoverFamily::dedup(std::vector<PointSet> elements) {
    canonicalize(elements);
    return CoverFamily(std::move(elements));
}

bool CoverFamily::contains(PointSet s) const { return std::binary_search(elements_.begin(), elements_.end(), s); }

std::string CoverFamily::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) s += ",";
        s += elements_[i].str();
    }
    return s + "}";
}

GdeltaPresentedSet GdeltaPresentedSet::of(std::vector<PointSet> factors) {
    if (factors.empty()) throw InvariantError("invariant violated: a Gdelta presentation needs at least one factor");
    PointSet t = factors.front();
    for (PointSet f : factors) t &= f;
    return {t, std::move(factors)};
}

GdeltaCover::GdeltaCover(std::vector<GdeltaPresentedSet> elements) : elements_(std::move(elements)) {
    for (const auto& e : elements_) {
        if (e.factors.empty())
            throw InvariantError("invariant violated: a Gdelta presentation needs at least one factor");
        PointSet t = e.factors.front();
        for (PointSet f : e.factors) t &= f;
        if (t != e.target) throw InvariantError("invariant violated: target must equal the intersection of its factors");
    }
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw InvariantError("invariant violated: Gdelta cover elements must be pairwise distinct");
}

GdeltaCover GdeltaCover::from_opens(const CoverFamily& fam) {
    std::vector<GdeltaPresentedSet> els;
    for (PointSet s : fam) els.push_back(GdeltaPresentedSet::open(s));
    return GdeltaCover(std::move(els));
}

std::vector<PointSet> GdeltaCover::targets() const {
    std::vector<PointSet> out;
    for (const auto& e : elements_) out.push_back(e.target);
    return out;
}

Verdict is_open_cover(const SpaceModel& model, const CoverFamily& fam) {
    for (PointSet e : fam)
        if (!model.space.is_open(e)) return {false, "element not open: " + e.str()};
    PointSet missing = model.points() - fam.union_set();
    if (!missing.empty()) return {false, "union misses " + missing.str()};
    return {true, {}};
}

Verdict is_gdelta_cover(const SpaceModel& model, const GdeltaCover& cover) {
    for (const auto& e : cover)
        for (PointSet f : e.factors)
            if (!model.space.is_open(f)) return {false, "factor not open: " + f.str()};
    PointSet missing = model.points() - union_of(cover.targets());
    if (!missing.empty()) return {false, "targets miss " + missing.str()};
    return {true, {}};
}

CoverFamily finite_union_closure(const SpaceModel& /*model*/, const CoverFamily& fam) {
    std::vector<PointSet> family = fam.elements();
    std::unordered_set<PointSet, PointSetHash> seen(family.begin(), family.end());
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            PointSet u = family[i] | family[j];
            if (seen.insert(u).second) family.push_back(u);
        }
    return CoverFamily(std::move(family));
}

bool contains_each(const std::vector<PointSet>& elements, const std::vector<PointSet>& requirements) {
    for (PointSet r : requirements) {
        bool inside = false;
        for (PointSet e : elements)
            if (r.subset_of(e)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

ClassSet classify(const SpaceModel& model, const CoverFamily& fam) {
    ClassSet out;
    if (!is_open_cover(model, fam)) return out;
    out.insert(CoverClass::O);
    if (finite_union_closure(model, fam).size() == fam.size()) out.insert(CoverClass::Ostar);
    if (contains_each(fam.elements(), model.compact_pool)) out.insert(CoverClass::K);
    if (contains_each(fam.elements(), model.effective_rothberger_pool())) out.insert(CoverClass::R);
    return out;
}

ClassSet classify(const SpaceModel& model, const GdeltaCover& cover) {
    ClassSet out;
    if (!is_gdelta_cover(model, cover)) return out;
    out.insert(CoverClass::Odelta);
    if (contains_each(cover.targets(), model.compact_pool)) out.insert(CoverClass::Alster);
    return out;
}

bool in_class(const SpaceModel& model, const CoverFamily& fam, CoverClass c) {
    if (c == CoverClass::Odelta || c == CoverClass::Alster) return in_class(model, GdeltaCover::from_opens(fam), c);
    if (c == CoverClass::O) return is_open_cover(model, fam).ok;
    return classify(model, fam).contains(c);
}

bool in_class(const SpaceModel& model, const GdeltaCover& cover, CoverClass c) {
    return classify(model, cover).contains(c);
}

namespace {

// Odometer over the product of the family sizes, lexicographic with the first family most significant.
template <class Accept>
SelectionResult product_search(const std::vector<std::size_t>& sizes, Accept accept) {
    SelectionResult result;
    for (std::size_t s : sizes)
        if (s == 0) throw Error("empty cover");
    if (sizes.empty()) throw Error("empty sequence");
    std::vector<std::size_t> idx(sizes.size(), 0);
    while (true) {
        ++result.examined;
        if (accept(idx)) {
            result.selection = Selection{idx, {}};
            return result;
        }
        std::size_t k = sizes.size();
        while (k > 0) {
            --k;
            if (++idx[k] < sizes[k]) break;
            idx[k] = 0;
            if (k == 0) {
                result.exhaustive = true;
                return result;
            }
        }
    }
}

}  // namespace

SelectionResult s1_select(const SpaceModel& model, const std::vector<CoverFamily>& seq, CoverClass target) {
    std::vector<std::size_t> sizes;
    for (const auto& f : seq) sizes.push_back(f.size());
    const PointSet all = model.points();
    auto picks_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<PointSet> picks;
        for (std::size_t i = 0; i < idx.size(); ++i) picks.push_back(seq[i][idx[i]]);
        return picks;
    };
    auto result = product_search(sizes, [&](const std::vector<std::size_t>& idx) {
        auto picks = picks_of(idx);
        if (target == CoverClass::O) return union_of(picks) == all;
        return in_class(model, CoverFamily::dedup(picks), target);
    });
    if (result.selection) result.selection->picks = picks_of(result.selection->indices);
    return result;
}

SelectionResult s1_select(const SpaceModel& model, const std::vector<GdeltaCover>& seq, CoverClass target) {
    std::vector<std::size_t> sizes;
    for (const auto& f : seq) sizes.push_back(f.size());
    auto presented = [&](const std::vector<std::size_t>& idx) {
        std::vector<GdeltaPresentedSet> picks;
        for (std::size_t i = 0; i < idx.size(); ++i) picks.push_back(seq[i][idx[i]]);
        std::sort(picks.begin(), picks.end());
        picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
        return GdeltaCover(std::move(picks));
    };
    auto result = product_search(sizes, [&](const std::vector<std::size_t>& idx) {
        return in_class(model, presented(idx), target);
    });
    if (result.selection)
        for (std::size_t i = 0; i < seq.size(); ++i)
            result.selection->picks.push_back(seq[i][result.selection->indices[i]].target);
    return result;
}

S1PoolReport s1_holds_over_pool(const SpaceModel& model, const std::vector<CoverFamily>& pool, int length,
                                CoverClass target) {
    if (length < 1) throw RangeError("sequence length must be >= 1");
    if (pool.empty()) return {};
    std::vector<std::size_t> idx(static_cast<std::size_t>(length), 0);
    while (true) {
        std::vector<CoverFamily> seq;
        for (std::size_t i : idx) seq.push_back(pool[i]);
        if (!s1_select(model, seq, target).selection) return {false, idx};
        std::size_t k = idx.size();
        while (true) {
            --k;
            if (++idx[k] < pool.size()) break;
            idx[k] = 0;
            if (k == 0) return {};
        }
    }
}

std::vector<std::vector<std::size_t>> minimal_families(const std::vector<PointSet>& candidates,
                                                       const std::vector<PointSet>& requirements) {
    std::vector<PointSet> reqs;
    for (PointSet r : requirements)
        if (!r.empty()) reqs.push_back(r);
    canonicalize(reqs);

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> chosen;

    auto containers = [&](PointSet r) {
        int n = 0;
        for (std::size_t c : chosen)
            if (r.subset_of(candidates[c])) ++n;
        return n;
    };
    auto every_member_needed = [&] {
        for (std::size_t c : chosen) {
            bool needed = false;
            for (PointSet r : reqs)
                if (r.subset_of(candidates[c]) && containers(r) == 1) {
                    needed = true;
                    break;
                }
            if (!needed) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        const PointSet* open_req = nullptr;
        for (const PointSet& r : reqs)
            if (containers(r) == 0) {
                open_req = &r;
                break;
            }
        if (!open_req) {
            out.push_back(chosen);
            return;
        }
        bool reachable = false;
        for (std::size_t i = start; i < candidates.size() && !reachable; ++i)
            reachable = open_req->subset_of(candidates[i]);
        if (!reachable) return;
        for (std::size_t i = start; i < candidates.size(); ++i) {
            chosen.push_back(i);
            if (every_member_needed()) dfs(i + 1);
            chosen.pop_back();
        }
    };
    dfs(0);
    return out;
}

namespace {

std::vector<PointSet> nonempty_opens(const SpaceModel& model) {
    std::vector<PointSet> out;
    for (PointSet o : model.space.opens())
        if (!o.empty()) out.push_back(o);
    return out;
}

std::vector<PointSet> singletons(int n) {
    std::vector<PointSet> out;
    for (int x = 0; x < n; ++x) out.push_back(PointSet::singleton(x));
    return out;
}

std::vector<CoverFamily> families_from(const std::vector<PointSet>& cands,
                                       const std::vector<std::vector<std::size_t>>& index_sets) {
    std::vector<CoverFamily> out;
    for (const auto& is : index_sets) {
        std::vector<PointSet> els;
        for (std::size_t i : is) els.push_back(cands[i]);
        out.emplace_back(std::move(els));
    }
    return out;
}

}  // namespace

std::vector<CoverFamily> irredundant_covers(const SpaceModel& model) {
    auto cands = nonempty_opens(model);
    return families_from(cands, minimal_families(cands, singletons(model.point_count())));
}

std::vector<CoverFamily> minimal_k_covers(const SpaceModel& model) {
    auto cands = nonempty_opens(model);
    auto reqs = singletons(model.point_count());
    reqs.insert(reqs.end(), model.compact_pool.begin(), model.compact_pool.end());
    return families_from(cands, minimal_families(cands, reqs));
}

std::vector<GdeltaCover> minimal_alster_covers(const SpaceModel& model) {
    std::vector<GdeltaCover> out;
    for (const auto& fam : minimal_k_covers(model)) out.push_back(GdeltaCover::from_opens(fam));
    return out;
}

}  // namespace selgames
