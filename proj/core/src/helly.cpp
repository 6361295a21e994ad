#include "helly/helly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "helly/covering.hpp"
#include "helly/curves.hpp"
#include "helly/errors.hpp"

namespace helly {

namespace {

double binomial(std::size_t n, std::size_t k) {
    double b = 1.0;
    for (std::size_t i = 0; i < k; ++i) b = b * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return b;
}

bool all_translates(const FamilySpec& family) {
    for (const Placement& p : family.placements) {
        if (!p.is_translate()) return false;
    }
    return true;
}

FamilySpec subfamily(const FamilySpec& family, const std::vector<std::size_t>& members) {
    FamilySpec sub{family.base, {}, {}};
    for (std::size_t m : members) sub.placements.push_back(family.placements[m]);
    return sub;
}

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool predicts_global(const FamilySpec& family, std::size_t k) {
    const std::size_t n = family.size();
    if (k >= n) return true;
    CurveClass cls = classify(family.base);
    const bool translates = all_translates(family);
    if (!cls.strictly_convex) return translates && k >= 6;
    if (k >= 4) return true;
    if (translates && k == 3) return !cls.bounded || n >= 5;
    return false;
}

// Decides sub-families either by candidate filtering or through the dual.
class Decider {
public:
    Decider(const FamilySpec& family, const TolerancePolicy& tol) : family_(family), tol_(tol) {
        if (classify(family.base).strictly_convex) {
            cache_.emplace(family, tol);
        } else if (!all_translates(family)) {
            throw Error(ErrorKind::PreconditionFailed,
                        "homothet families of curves that are not strictly convex are unsupported");
        }
    }

    std::optional<Point> common_point(const std::vector<std::size_t>& members) {
        if (cache_) return cache_->common_point(members).point;
        return dual_common_point(subfamily(family_, members), tol_);
    }

private:
    const FamilySpec& family_;
    TolerancePolicy tol_;
    std::optional<IntersectionCache> cache_;
};

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::optional<AllButOne> leave_one_out(Decider& decide, std::size_t n) {
    if (auto p = decide.common_point(iota(n))) return AllButOne{*p, std::nullopt};
    for (std::size_t skip = 0; skip < n; ++skip) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != skip) rest.push_back(i);
        }
        if (auto p = decide.common_point(rest)) return AllButOne{*p, skip};
    }
    return std::nullopt;
}

}  // namespace

HellyReport helly_check(const FamilySpec& family, std::size_t k, const TolerancePolicy& tol, const HellyOptions& opt) {
    const std::size_t n = family.size();
    if (n == 0) throw Error(ErrorKind::PreconditionFailed, "family has no members");
    if (k < 2 || k > n) {
        throw Error(ErrorKind::PreconditionFailed, "k must satisfy 2 <= k <= " + std::to_string(n));
    }
    if (binomial(n, k) > opt.subset_cap) {
        throw Error(ErrorKind::SubsetExplosion, "too many " + std::to_string(k) + "-subsets");
    }

    Decider decide(family, tol);
    HellyReport report;
    report.k = k;
    report.all_k_wise = true;
    std::vector<std::size_t> idx = iota(k);
    do {
        ++report.subsets_checked;
        if (!decide.common_point(idx)) {
            report.all_k_wise = false;
            report.first_failing_subset = idx;
            break;
        }
    } while (next_subset(idx, n));

    report.global_point = decide.common_point(iota(n));
    if (report.global_point) {
        report.all_but_one_point = AllButOne{*report.global_point, std::nullopt};
    } else if (report.all_k_wise && k >= 3 && classify(family.base).strictly_convex) {
        report.all_but_one_point = leave_one_out(decide, n);
    }
    report.theorem_predicts_global = report.all_k_wise && predicts_global(family, k);
    report.consistent = !report.theorem_predicts_global || report.global_point.has_value();
    return report;
}

std::optional<Point> family_global_point(const FamilySpec& family, const TolerancePolicy& tol) {
    if (family.size() == 0) throw Error(ErrorKind::PreconditionFailed, "family has no members");
    Decider decide(family, tol);
    return decide.common_point(iota(family.size()));
}

std::optional<AllButOne> all_but_one_check(const FamilySpec& family, const TolerancePolicy& tol) {
    const std::size_t n = family.size();
    if (n == 0) throw Error(ErrorKind::PreconditionFailed, "family has no members");
    if (!classify(family.base).strictly_convex) {
        throw Error(ErrorKind::PreconditionFailed, "all-but-one check needs a strictly convex base");
    }
    Decider decide(family, tol);
    if (n >= 3) {
        std::vector<std::size_t> idx = iota(3);
        do {
            if (!decide.common_point(idx)) {
                throw Error(ErrorKind::PreconditionFailed, "members " + std::to_string(idx[0]) + ", " +
                                                               std::to_string(idx[1]) + ", " + std::to_string(idx[2]) +
                                                               " have no common point");
            }
        } while (next_subset(idx, n));
    }
    return leave_one_out(decide, n);
}

std::vector<Point> translate_family_duality(const FamilySpec& family) {
    std::vector<Point> centers;
    for (const Placement& p : family.placements) {
        if (!p.is_translate()) throw Error(ErrorKind::MixedRatios, "duality applies to translate families only");
        centers.push_back(origin() + p.v);
    }
    return centers;
}

std::optional<Point> dual_common_point(const FamilySpec& family, const TolerancePolicy& tol) {
    std::vector<Point> centers = translate_family_duality(family);
    auto z = cover_translate(reflected(family.base), centers, tol);
    if (!z) return std::nullopt;
    return origin() + z->v;
}

FamilySpec random_family(const CurveSpec& base, const RandomFamilyOptions& opt, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto uniform = [&](double a, double b) { return a + (b - a) * unit(rng); };
    const bool bounded = classify(base).bounded;
    Point anchor{uniform(-opt.anchor_box, opt.anchor_box), uniform(-opt.anchor_box, opt.anchor_box)};
    FamilySpec family{base, {}, {}};
    for (std::size_t i = 0; i < opt.members; ++i) {
        double t = bounded ? uniform(0.0, 2.0 * std::numbers::pi) : uniform(-2.0, 2.0);
        double lambda = opt.homothets ? std::exp(uniform(-opt.log_ratio, opt.log_ratio)) : 1.0;
        Point on = boundary_point(base, t);
        Vector v = anchor.as_vector() - on.as_vector() * lambda;
        double a = uniform(0.0, 2.0 * std::numbers::pi);
        v = v + Vector{std::cos(a), std::sin(a)} * (opt.noise * unit(rng));
        family.placements.push_back({lambda, v});
    }
    return family;
}

}  // namespace helly
