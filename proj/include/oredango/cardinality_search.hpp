#ifndef OREDANGO_CARDINALITY_SEARCH_HPP
#define OREDANGO_CARDINALITY_SEARCH_HPP

// Depth-first search over 0-1 variables constrained by cardinality bounds
// (lo <= number of ones among `vars` <= hi). Every puzzle rule and every row
// of the linear model has this shape, so the board solver and the model
// solver share this engine.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace oredango::search {

/// -1 unassigned, 0 white / false, 1 black / true.
using Value = std::int8_t;
inline constexpr Value kUnassigned = -1;

struct CardinalityConstraint {
    std::vector<std::size_t> vars;
    int lo = 0;
    int hi = 0;
};

class CardinalitySearch {
public:
    CardinalitySearch(std::size_t var_count, std::vector<CardinalityConstraint> constraints);

    std::size_t var_count() const { return var_count_; }
    const std::vector<CardinalityConstraint>& constraints() const { return constraints_; }

    /// Unit propagation to a fixpoint: a constraint at its upper bound zeroes
    /// its free variables, one that needs all free variables to reach its
    /// lower bound sets them. Returns false on conflict; `values` is then
    /// partially updated and must be discarded.
    bool propagate(std::vector<Value>& values) const;

    /// Solution callback; return false to stop the search.
    using Visitor = std::function<bool(std::span<const Value>)>;

    /// Visits every total assignment extending `start` that satisfies all
    /// constraints. Branches on the lowest-index free variable, 1 before 0.
    /// Returns the number of search nodes expanded.
    std::uint64_t search(std::vector<Value> start, const Visitor& visit) const;

private:
    bool propagate_from(std::vector<Value>& values, std::vector<std::size_t>& queue,
                        std::vector<char>& queued) const;
    bool dfs(std::vector<Value>& values, std::size_t first_free, const Visitor& visit,
             std::uint64_t& nodes) const;

    std::size_t var_count_;
    std::vector<CardinalityConstraint> constraints_;
    std::vector<std::vector<std::size_t>> watches_;  // var -> constraint ids
};

}  // namespace oredango::search

#endif  // OREDANGO_CARDINALITY_SEARCH_HPP
