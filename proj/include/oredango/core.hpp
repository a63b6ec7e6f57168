#ifndef OREDANGO_CORE_HPP
#define OREDANGO_CORE_HPP

// Puzzle data model and the rule checker.
//
// A board is an m x n grid with circles in some cells. Circles are linked by
// skewers (paths over adjacent cells); a circle outside every explicit skewer
// forms a skewer of its own. Some circles carry a clue. A coloring assigns
// Black or White to every circle and is a solution when
//   (A) every clued skewer holds exactly `clue` black circles,
//   (B) no skewer has three consecutive circles of one color,
//   (C) no row has three consecutive circles of one color,
//   (D) no column has three consecutive circles of one color,
// where rows and columns skip empty cells.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oredango {

/// 1-based grid coordinate, row 1 at the top. Ordered row-major.
struct CellCoord {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

std::string to_string(CellCoord c);

enum class Color : std::uint8_t { Black, White };

constexpr Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

struct Circle {
    std::optional<int> clue;

    friend bool operator==(const Circle&, const Circle&) = default;
};

/// An ordered path of circle coordinates. A path and its reverse denote the
/// same skewer, so the stored orientation is normalized: the lexicographically
/// smaller endpoint comes first.
class Skewer {
public:
    explicit Skewer(std::vector<CellCoord> path);

    const std::vector<CellCoord>& path() const { return path_; }
    std::size_t size() const { return path_.size(); }

    friend bool operator==(const Skewer&, const Skewer&) = default;

private:
    std::vector<CellCoord> path_;
};

using Triple = std::array<CellCoord, 3>;

/// Windows of three consecutive circles along every row, column and skewer.
/// Rows and columns skip empty cells. Families are indexed 0-based here;
/// row_triples[i - 1] holds the windows of grid row i.
struct TripleIndex {
    std::vector<std::vector<Triple>> row_triples;
    std::vector<std::vector<Triple>> col_triples;
    std::vector<std::vector<Triple>> skewer_triples;

    std::size_t row_count() const;
    std::size_t col_count() const;
    std::size_t skewer_count() const;

    friend bool operator==(const TripleIndex&, const TripleIndex&) = default;
};

/// Reasons build_board rejects an instance.
enum class StructureErrorKind {
    BadDimensions,
    OutOfBounds,
    DuplicateCircle,
    NegativeClue,
    UnknownCircle,
    CircleInTwoSkewers,
    RepeatedInSkewer,
    NonAdjacentStep,
    EmptySkewer,
    TwoCluesOnSkewer,
    ClueExceedsSkewer,
};

class StructureError : public std::runtime_error {
public:
    StructureError(StructureErrorKind kind, const std::string& what,
                   std::optional<CellCoord> cell = std::nullopt,
                   std::optional<std::size_t> skewer = std::nullopt)
        : std::runtime_error(what), kind_(kind), cell_(cell), skewer_(skewer) {}

    StructureErrorKind kind() const { return kind_; }
    /// Offending circle declaration, when the error is tied to one.
    std::optional<CellCoord> cell() const { return cell_; }
    /// 0-based position in the caller's skewer list, when tied to one.
    std::optional<std::size_t> skewer() const { return skewer_; }

private:
    StructureErrorKind kind_;
    std::optional<CellCoord> cell_;
    std::optional<std::size_t> skewer_;
};

struct CircleSpec {
    CellCoord at;
    std::optional<int> clue;
};

/// Immutable puzzle instance. Construct through build_board.
class Board {
public:
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Circles in row-major order.
    const std::vector<std::pair<CellCoord, Circle>>& circles() const { return circles_; }
    std::size_t circle_count() const { return circles_.size(); }

    /// Explicit multi-circle skewers in input order, followed by the
    /// single-circle skewers in row-major order.
    const std::vector<Skewer>& skewers() const { return skewers_; }

    const TripleIndex& triples() const { return triples_; }

    bool in_bounds(CellCoord c) const;
    bool has_circle(CellCoord c) const { return index_of(c).has_value(); }
    /// Position of the circle at `c` in circles(), if any.
    std::optional<std::size_t> index_of(CellCoord c) const;
    const Circle& circle_at(CellCoord c) const;

    /// The clue carried by some circle of skewer `s`, if any.
    std::optional<int> skewer_clue(std::size_t s) const;
    /// Skewer holding the circle at `c`.
    std::size_t skewer_of(CellCoord c) const;

    friend bool operator==(const Board& a, const Board& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.circles_ == b.circles_ &&
               a.skewers_ == b.skewers_;
    }

private:
    friend Board build_board(int, int, std::span<const CircleSpec>,
                             std::span<const std::vector<CellCoord>>);
    Board() = default;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::pair<CellCoord, Circle>> circles_;
    std::vector<Skewer> skewers_;
    std::vector<std::size_t> skewer_of_;   // by circle index
    std::vector<std::int32_t> grid_;       // rows*cols -> circle index or -1
    TripleIndex triples_;
};

/// Validates and assembles a board. Throws StructureError.
/// Explicit single-coordinate skewers are folded into the implicit
/// single-circle skewers.
Board build_board(int rows, int cols, std::span<const CircleSpec> circles,
                  std::span<const std::vector<CellCoord>> skewers);

const TripleIndex& triple_index(const Board& board);

/// Total black/white assignment over a board's circles, kept sorted by
/// coordinate.
class Coloring {
public:
    Coloring() = default;
    /// Entries may be given in any order; duplicate coordinates throw.
    explicit Coloring(std::vector<std::pair<CellCoord, Color>> entries);
    /// Colors listed in the board's row-major circle order.
    Coloring(const Board& board, std::span<const Color> colors);

    const std::vector<std::pair<CellCoord, Color>>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::optional<Color> find(CellCoord c) const;
    Color at(CellCoord c) const;

    /// Same coloring with every color swapped.
    Coloring flipped() const;

    friend auto operator<=>(const Coloring&, const Coloring&) = default;

private:
    std::vector<std::pair<CellCoord, Color>> entries_;
};

/// True when the coloring's domain is exactly the board's circle set.
bool covers_board(const Board& board, const Coloring& coloring);

enum class Rule : std::uint8_t { A, B, C, D };

char rule_letter(Rule r);

struct Violation {
    Rule rule;
    /// 1-based skewer index for A/B, row for C, column for D.
    int locus;
    /// 1-based window position within the family; 0 for rule A.
    int window;
    /// The offending triple, or the whole skewer for rule A.
    std::vector<CellCoord> cells;
    int observed_black;
    int required_min;
    int required_max;

    std::string describe() const;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ViolationReport {
    std::vector<Violation> violations;

    bool empty() const { return violations.empty(); }
    std::size_t size() const { return violations.size(); }

    friend bool operator==(const ViolationReport&, const ViolationReport&) = default;
};

/// Rule check. Ordering: A by skewer, B by (skewer, window), C by (row,
/// window), D by (col, window). Throws std::invalid_argument when the
/// coloring's domain differs from the board's circles.
ViolationReport check_coloring(const Board& board, const Coloring& coloring);

/// Shortcut for check_coloring(...).empty().
bool is_solution(const Board& board, const Coloring& coloring);

}  // namespace oredango

#endif  // OREDANGO_CORE_HPP
