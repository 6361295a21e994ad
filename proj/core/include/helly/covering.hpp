#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "helly/fitting.hpp"
#include "helly/geometry.hpp"
#include "helly/placement.hpp"

namespace helly {

enum class FitMode { Translate, Homothet };

std::string_view to_string(FitMode mode);
FitMode fit_mode_from_string(std::string_view name);

/// A translate of the curve carrying every point of S, or nothing. Fits the
/// farthest pair of S and keeps the candidates that carry the rest.
std::optional<Placement> cover_translate(const CurveSpec& curve, const std::vector<Point>& points,
                                         const TolerancePolicy& tol = {});

/// A homothet carrying every point of S, or nothing. With a non-collinear
/// triple in S the unique homothet through it decides; otherwise the ratio is
/// found by bisection on translate coverability of the rescaled set.
std::optional<Placement> cover_homothet(const CurveSpec& curve, const std::vector<Point>& points,
                                        const TolerancePolicy& tol = {}, const HomothetFitOptions& opt = {});

std::optional<Placement> cover(const CurveSpec& curve, const std::vector<Point>& points, FitMode mode,
                               const TolerancePolicy& tol = {});

/// Smallest max-residual found by multi-start Nelder-Mead over placements.
/// Evidence of search effort for non-coverability, not a proof.
double coverage_residual_floor(const CurveSpec& curve, const std::vector<Point>& points, FitMode mode, int starts,
                               std::uint64_t seed);

struct SubsetPlacement {
    std::vector<std::size_t> subset;
    Placement placement;
    bool operator==(const SubsetPlacement&) const = default;
};

struct NonCoverEvidence {
    std::string search = "multistart-nelder-mead";
    int starts = 0;
    double residual_floor = 0.0;
    bool operator==(const NonCoverEvidence&) const = default;
};

/// m+1 points whose every m-subset is coverable while the whole set is not.
struct OrderWitness {
    std::vector<Point> points;
    int m = 0;
    FitMode mode = FitMode::Translate;
    std::vector<SubsetPlacement> subset_placements;
    NonCoverEvidence noncover_evidence;
    bool operator==(const OrderWitness&) const = default;
};

/// Checks a candidate: covers every m-subset (storing the placements), fails
/// to cover the whole set, and records a residual floor for the latter.
std::optional<OrderWitness> certify_order_witness(const CurveSpec& curve, const std::vector<Point>& points, int m,
                                                  FitMode mode, const TolerancePolicy& tol = {}, std::uint64_t seed = 0);

/// Randomized search for an (m+1)-point set certifying that the translation
/// (homothety) order exceeds m. Deterministic in seed.
std::optional<OrderWitness> order_witness_search(const CurveSpec& curve, int m, FitMode mode, int trials,
                                                 std::uint64_t seed, const TolerancePolicy& tol = {});

/// All k-element index subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);

}  // namespace helly
