#include "osculate/report.hpp"

namespace osc {

std::string_view to_string(PairRelation r) noexcept
{
    switch (r) {
    case PairRelation::NestedFirstInsideSecond: return "NestedFirstInsideSecond";
    case PairRelation::NestedSecondInsideFirst: return "NestedSecondInsideFirst";
    case PairRelation::DisjointExternal: return "DisjointExternal";
    case PairRelation::Intersecting: return "Intersecting";
    case PairRelation::InternallyTangent: return "InternallyTangent";
    case PairRelation::ExternallyTangent: return "ExternallyTangent";
    case PairRelation::DisjointUnclassified: return "DisjointUnclassified";
    }
    return "Unknown";
}

bool is_nested(PairRelation r) noexcept
{
    return r == PairRelation::NestedFirstInsideSecond || r == PairRelation::NestedSecondInsideFirst;
}

PairRelation swapped(PairRelation r) noexcept
{
    if (r == PairRelation::NestedFirstInsideSecond)
        return PairRelation::NestedSecondInsideFirst;
    if (r == PairRelation::NestedSecondInsideFirst)
        return PairRelation::NestedFirstInsideSecond;
    return r;
}

std::size_t NestingReport::count(PairRelation r) const noexcept
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < verdicts.size(); ++i)
        for (std::size_t j = i + 1; j < verdicts[i].size(); ++j)
            if (verdicts[i][j] == r)
                ++n;
    return n;
}

std::size_t NestingReport::pair_count() const noexcept
{
    const std::size_t n = samples.size();
    return n < 2 ? 0 : n * (n - 1) / 2;
}

} // namespace osc
