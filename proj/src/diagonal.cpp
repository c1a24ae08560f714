#include <numeric>

#include "selgames/constructions.hpp"

namespace selgames {

DiagonalSelection alster_diagonal_selection(const SpaceModel& model, const std::vector<GdeltaCover>& covers,
                                            int rounds) {
    if (covers.empty()) throw Error("alster_diagonal_selection: no covers");
    if (rounds < 1) throw RangeError("alster_diagonal_selection: rounds must be >= 1");
    for (const auto& c : covers)
        if (!in_class(model, c, CoverClass::Alster)) throw Error("not an Alster cover");

    const std::size_t k = covers.size();
    const std::size_t m = std::max<std::size_t>(static_cast<std::size_t>(rounds), k);
    auto cover_at = [&](std::size_t n) -> const GdeltaCover& { return covers[n % k]; };

    // Product choices f in lexicographic order (coordinate 0 most significant), with V_f.
    std::vector<std::vector<std::size_t>> fs;
    std::vector<PointSet> vs;
    std::vector<std::size_t> f(m, 0);
    while (true) {
        PointSet v = model.points();
        for (std::size_t n = 0; n < m; ++n) v &= cover_at(n)[f[n]].target;
        fs.push_back(f);
        vs.push_back(v);
        std::size_t n = m;
        while (n > 0) {
            --n;
            if (++f[n] < cover_at(n).size()) break;
            f[n] = 0;
            if (n == 0) goto done;
        }
    }
done:
    DiagonalSelection out;
    PointSet covered;
    while (covered != model.points()) {
        const int x = (model.points() - covered).min();
        std::size_t best = vs.size();
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (vs[i].contains(x)) {
                best = i;
                break;
            }
        if (best == vs.size()) throw Error("no V_f contains point " + std::to_string(x));
        out.choices.push_back(fs[best]);
        covered |= vs[best];
    }
    if (out.choices.size() > static_cast<std::size_t>(rounds))
        throw Error("diagonal selection needs " + std::to_string(out.choices.size()) + " rounds, only " +
                    std::to_string(rounds) + " allowed");
    while (out.choices.size() < static_cast<std::size_t>(rounds)) out.choices.push_back(out.choices.back());
    for (std::size_t n = 0; n < out.choices.size(); ++n) {
        const std::size_t idx = out.choices[n][n];
        out.indices.push_back(idx);
        out.picks.push_back(cover_at(n)[idx]);
    }
    return out;
}

std::string Cylinder::str() const {
    std::string s = "{";
    bool first = true;
    for (auto [coord, bit] : constraints) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(coord) + "->" + std::to_string(bit);
    }
    return s + "}";
}

UncoveredRegion cantor_witness(int depth, const std::function<int(int, const Cylinder&)>& two) {
    if (depth < 1) throw RangeError("cantor_witness: depth must be >= 1");
    UncoveredRegion region{Cylinder{}};
    for (int n = 0; n < depth; ++n) {
        const int pick = two(n, *region.cylinder);
        if (pick != 0 && pick != 1) throw IllegalMove("Two must pick half 0 or 1 at inning " + std::to_string(n));
        // What remains uncovered is the part of the region in the half Two did not pick.
        region.cylinder->constraints[n] = 1 - pick;
    }
    return region;
}

}  // namespace selgames
