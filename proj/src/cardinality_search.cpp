#include "oredango/cardinality_search.hpp"

#include <stdexcept>
#include <string>

namespace oredango::search {

CardinalitySearch::CardinalitySearch(std::size_t var_count,
                                     std::vector<CardinalityConstraint> constraints)
    : var_count_(var_count), constraints_(std::move(constraints)), watches_(var_count) {
    for (std::size_t k = 0; k < constraints_.size(); ++k) {
        for (auto v : constraints_[k].vars) {
            if (v >= var_count_) {
                throw std::out_of_range("constraint " + std::to_string(k) +
                                        " references variable " + std::to_string(v));
            }
            watches_[v].push_back(k);
        }
    }
}

bool CardinalitySearch::propagate(std::vector<Value>& values) const {
    if (values.size() != var_count_) {
        throw std::invalid_argument("value vector does not match the variable count");
    }
    std::vector<std::size_t> queue(constraints_.size());
    for (std::size_t k = 0; k < queue.size(); ++k) queue[k] = k;
    std::vector<char> queued(constraints_.size(), 1);
    return propagate_from(values, queue, queued);
}

bool CardinalitySearch::propagate_from(std::vector<Value>& values,
                                       std::vector<std::size_t>& queue,
                                       std::vector<char>& queued) const {
    while (!queue.empty()) {
        const auto k = queue.back();
        queue.pop_back();
        queued[k] = 0;
        const auto& con = constraints_[k];
        int ones = 0;
        int free = 0;
        for (auto v : con.vars) {
            if (values[v] == kUnassigned) {
                ++free;
            } else {
                ones += values[v];
            }
        }
        if (ones > con.hi || ones + free < con.lo) return false;
        if (free == 0) continue;
        Value forced;
        if (ones == con.hi) {
            forced = 0;
        } else if (ones + free == con.lo) {
            forced = 1;
        } else {
            continue;
        }
        for (auto v : con.vars) {
            if (values[v] != kUnassigned) continue;
            values[v] = forced;
            for (auto w : watches_[v]) {
                if (!queued[w]) {
                    queued[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return true;
}

std::uint64_t CardinalitySearch::search(std::vector<Value> start, const Visitor& visit) const {
    std::uint64_t nodes = 0;
    if (!propagate(start)) {
        return 1;
    }
    dfs(start, 0, visit, nodes);
    return nodes;
}

bool CardinalitySearch::dfs(std::vector<Value>& values, std::size_t first_free,
                            const Visitor& visit, std::uint64_t& nodes) const {
    ++nodes;
    while (first_free < var_count_ && values[first_free] != kUnassigned) ++first_free;
    if (first_free == var_count_) return visit(values);

    std::vector<std::size_t> queue;
    std::vector<char> queued(constraints_.size(), 0);
    for (const Value branch : {Value{1}, Value{0}}) {
        std::vector<Value> child = values;
        child[first_free] = branch;
        queue.clear();
        for (auto w : watches_[first_free]) {
            queued[w] = 1;
            queue.push_back(w);
        }
        const bool ok = propagate_from(child, queue, queued);
        for (auto w : queue) queued[w] = 0;
        if (ok && !dfs(child, first_free + 1, visit, nodes)) return false;
    }
    return true;
}

}  // namespace oredango::search
