#ifndef OREDANGO_SOLVER_HPP
#define OREDANGO_SOLVER_HPP

// Complete search over colorings: decide, enumerate, count, and the
// "another solution" question. Search order is fixed: branch on the first
// unassigned circle in row-major order, Black before White. Solutions are
// therefore produced in lexicographic order (Black < White, row-major).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "oredango/cardinality_search.hpp"
#include "oredango/core.hpp"

namespace oredango {

enum class CellState : std::uint8_t { Black, White, Unassigned };

/// Colors for some of a board's circles.
class PartialColoring {
public:
    explicit PartialColoring(const Board& board);

    std::size_t size() const { return states_.size(); }
    const std::vector<CellCoord>& cells() const { return cells_; }
    const std::vector<CellState>& states() const { return states_; }

    CellState at(CellCoord c) const;
    /// Throws std::out_of_range if `c` holds no circle.
    void assign(CellCoord c, Color color);

    std::size_t assigned_count() const;
    bool complete() const;
    /// Throws std::logic_error unless complete().
    Coloring to_coloring() const;

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    friend std::optional<PartialColoring> propagate(const Board&, const PartialColoring&);
    std::size_t index(CellCoord c) const;

    std::vector<CellCoord> cells_;
    std::vector<CellState> states_;
};

/// Refines `partial` to the fixpoint of the sound rule deductions. Returns
/// std::nullopt when the partial coloring already breaks a rule or the
/// deductions run into one (a conflict).
std::optional<PartialColoring> propagate(const Board& board, const PartialColoring& partial);

enum class SolveStatus { Sat, Unsat, CapReached };

const char* to_string(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unsat;
    std::vector<Coloring> solutions;
    /// Solutions found; equals solutions.size() unless produced by count_solutions.
    std::size_t count = 0;
    std::uint64_t nodes = 0;
};

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// First solution in search order, or Unsat.
SolveOutcome solve(const Board& board);

/// Solutions in search order, at most `cap` of them. CapReached means the
/// search stopped at the cap; more solutions may or may not exist.
SolveOutcome enumerate(const Board& board, std::size_t cap = kNoCap);

/// Like enumerate, but extends a partial coloring.
SolveOutcome enumerate_from(const Board& board, const PartialColoring& start,
                            std::size_t cap = kNoCap);

/// Counts without storing solutions.
SolveOutcome count_solutions(const Board& board, std::size_t cap = kNoCap);

/// A solution outside `known`, or std::nullopt when every solution is known.
/// With `known` empty this decides solvability. Throws std::invalid_argument
/// if some known coloring is not a solution of `board`.
std::optional<Coloring> another_solution(const Board& board, std::span<const Coloring> known);

/// The board's rules as cardinality constraints over circle indices.
search::CardinalitySearch board_search(const Board& board);

}  // namespace oredango

#endif  // OREDANGO_SOLVER_HPP
