#include "selgames/point_set.hpp"

#include <algorithm>

namespace selgames {

void canonicalize(std::vector<PointSet>& family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

PointSet union_of(const std::vector<PointSet>& family) {
    PointSet u;
    for (PointSet s : family) u |= s;
    return u;
}

}  // namespace selgames
