#ifndef OREDANGO_ILP_HPP
#define OREDANGO_ILP_HPP

// 0-1 linear model of a board. One binary x_<row>_<col> per circle (1 =
// black) and these rows:
//   sk<r>      sum over clued skewer r            = clue
//   tb<r>_<t>  1 <= window t of skewer r          <= 2
//   tr<i>_<s>  1 <= window s of row i             <= 2
//   tc<j>_<t>  1 <= window t of column j          <= 2
// The objective is the sum of all variables; only feasibility is used.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oredango/core.hpp"

namespace oredango {

struct ModelVariable {
    std::string name;
    CellCoord cell;

    friend bool operator==(const ModelVariable&, const ModelVariable&) = default;
};

struct Term {
    int coefficient = 1;
    std::size_t variable = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

struct LinearConstraint {
    std::string name;
    std::vector<Term> terms;
    std::optional<int> lower;
    std::optional<int> upper;

    bool is_equality() const { return lower && upper && *lower == *upper; }

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct LinearModel {
    std::vector<ModelVariable> variables;
    std::vector<LinearConstraint> constraints;
    std::vector<int> objective;  // one coefficient per variable

    friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

/// 0/1 value per model variable.
using ModelAssignment = std::vector<std::uint8_t>;

LinearModel build_model(const Board& board);

/// CPLEX-style LP text: Minimize / Subject To / Binaries / End. Ranges are
/// split into `<name>_lo` (>=) and `<name>_hi` (<=) rows.
std::string export_lp(const LinearModel& model);

/// Some feasible assignment, or std::nullopt. Throws std::invalid_argument
/// for models with non-unit coefficients or undeclared variables.
std::optional<ModelAssignment> solve_model(const LinearModel& model);

/// Feasible assignments, at most `cap`, in the same order as the board
/// solver (lowest variable first, 1 before 0).
std::vector<ModelAssignment> enumerate_model(const LinearModel& model,
                                             std::size_t cap = static_cast<std::size_t>(-1));

/// Black where 1, White where 0. Throws std::invalid_argument when the
/// assignment or the model variables do not match the board's circles.
Coloring model_to_coloring(const LinearModel& model, const ModelAssignment& assignment,
                           const Board& board);

}  // namespace oredango

#endif  // OREDANGO_ILP_HPP
