#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/intersections.hpp"
#include "helly/placement.hpp"

namespace helly {

/// A point on every member but possibly one.
struct AllButOne {
    Point point;
    std::optional<std::size_t> excluded;  ///< empty when the point lies on all members
    bool operator==(const AllButOne&) const = default;
};

struct HellyReport {
    std::size_t k = 0;
    std::size_t subsets_checked = 0;
    bool all_k_wise = false;
    std::optional<std::vector<std::size_t>> first_failing_subset;  ///< lexicographically smallest
    std::optional<Point> global_point;
    std::optional<AllButOne> all_but_one_point;
    bool theorem_predicts_global = false;  ///< all_k_wise plus the curve class force a common point
    bool consistent = true;                ///< false iff predicted global point is missing
};

struct HellyOptions {
    double subset_cap = 1e6;
};

/// Scans every k-subset of the family for a common point and decides the
/// whole family. Strictly convex bases use candidate filtering; other bases
/// fall back to the dual covering problem (translate families only).
HellyReport helly_check(const FamilySpec& family, std::size_t k, const TolerancePolicy& tol = {},
                        const HellyOptions& opt = {});

/// Common point of the whole family, or nothing.
std::optional<Point> family_global_point(const FamilySpec& family, const TolerancePolicy& tol = {});

/// Requires every triple to meet (PreconditionFailed otherwise). Returns a
/// point on all members, or on all members but one, or nothing.
std::optional<AllButOne> all_but_one_check(const FamilySpec& family, const TolerancePolicy& tol = {});

/// The vector set V of a translate family {C + v : v in V}.
std::vector<Point> translate_family_duality(const FamilySpec& family);

/// Common point of a translate family via the dual problem: the members meet
/// iff V lies on a translate of the reflected curve, whose offset is the point.
std::optional<Point> dual_common_point(const FamilySpec& family, const TolerancePolicy& tol = {});

struct RandomFamilyOptions {
    std::size_t members = 4;
    bool homothets = false;
    double noise = 0.0;        ///< placement perturbation, absolute
    double anchor_box = 1.0;   ///< anchor drawn from [-anchor_box, anchor_box]^2
    double log_ratio = 0.7;    ///< homothet ratios exp(U(-log_ratio, log_ratio))
};

/// Members all pass through one random anchor, then each placement is moved
/// by a random vector of length at most `noise`.
FamilySpec random_family(const CurveSpec& base, const RandomFamilyOptions& opt, std::mt19937_64& rng);

}  // namespace helly
