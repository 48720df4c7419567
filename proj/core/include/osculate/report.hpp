#pragma once

// Verdict structures shared by the pairwise-nesting sweeps.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace osc {

enum class PairRelation {
    NestedFirstInsideSecond,
    NestedSecondInsideFirst,
    DisjointExternal,
    Intersecting,
    InternallyTangent,
    ExternallyTangent,
    /// Disjoint in the projective plane, nesting side not decided (non-elliptic conic pairs).
    DisjointUnclassified,
};

std::string_view to_string(PairRelation r) noexcept;
bool is_nested(PairRelation r) noexcept;
/// The relation with the roles of the two objects swapped.
PairRelation swapped(PairRelation r) noexcept;

struct HypothesisFailure {
    double t = 0.0;
    std::string reason;
};

struct NestingReport {
    /// JSON key under which `hypothesis_holds` is reported, e.g. "monotone_curvature".
    std::string hypothesis_name = "monotone_curvature";
    std::vector<double> samples;
    /// verdicts[i][j] for i != j; the diagonal is empty.
    std::vector<std::vector<std::optional<PairRelation>>> verdicts;
    bool hypothesis_holds = false;
    /// Minimum pairwise separation margin; NaN when the sweep has no such measure.
    double worst_margin = 0.0;
    bool passed = false;
    /// Set when fewer than two samples make the pairwise claim vacuous.
    bool degenerate = false;
    std::optional<HypothesisFailure> failure;
    std::map<std::string, double> metrics;
    std::vector<std::string> notes;

    std::size_t count(PairRelation r) const noexcept;
    std::size_t pair_count() const noexcept;
};

} // namespace osc
