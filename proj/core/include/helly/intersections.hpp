#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/placement.hpp"

namespace helly {

/// Points common to two placed curves, tangencies counted once, sorted
/// lexicographically. Distinct homothets of one strictly convex base meet in
/// at most two points; a third cluster raises TheoremViolation.
std::vector<Point> curve_pair_intersections(const PlacedCurve& a, const PlacedCurve& b, const TolerancePolicy& tol = {});

/// Pairwise intersection points of a family's members, filtered through the
/// remaining members: the family's candidate pool for a common point.
struct CandidateSet {
    std::vector<Point> points;
    std::pair<std::size_t, std::size_t> source{0, 1};
};

struct CommonPointResult {
    std::optional<Point> point;
    std::vector<double> residuals;            ///< per member, when a point was found
    std::optional<std::size_t> rejected_by;   ///< first member rejecting every candidate
    CandidateSet candidates;
};

/// Decides whether all member curves share a point by intersecting the first
/// two members and testing the (at most two) candidates against the rest.
/// Identical placements are collapsed first.
CommonPointResult family_common_point(const FamilySpec& family, const TolerancePolicy& tol = {});

/// Memoized pairwise intersections of one family, so the many sub-family
/// decisions of a Helly scan intersect each pair once.
class IntersectionCache {
public:
    IntersectionCache(const FamilySpec& family, const TolerancePolicy& tol);

    const std::vector<Point>& pair(std::size_t i, std::size_t j);

    /// family_common_point restricted to the members listed (ascending indices).
    CommonPointResult common_point(const std::vector<std::size_t>& members);

    const FamilySpec& family() const { return family_; }

private:
    FamilySpec family_;
    TolerancePolicy tol_;
    std::vector<std::size_t> canonical_;  ///< index of the first identical member
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Point>> pairs_;
};

}  // namespace helly
