#include "oredango/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace oredango {

std::string to_string(CellCoord c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Skewer::Skewer(std::vector<CellCoord> path) : path_(std::move(path)) {
    if (path_.size() > 1 && path_.back() < path_.front()) {
        std::reverse(path_.begin(), path_.end());
    }
}

namespace {

std::size_t total(const std::vector<std::vector<Triple>>& families) {
    std::size_t n = 0;
    for (const auto& f : families) n += f.size();
    return n;
}

void push_windows(std::vector<Triple>& out, const std::vector<CellCoord>& seq) {
    for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
        out.push_back({seq[i], seq[i + 1], seq[i + 2]});
    }
}

bool adjacent(CellCoord a, CellCoord b) {
    const int dr = std::abs(a.row - b.row);
    const int dc = std::abs(a.col - b.col);
    return std::max(dr, dc) == 1;
}

}  // namespace

std::size_t TripleIndex::row_count() const { return total(row_triples); }
std::size_t TripleIndex::col_count() const { return total(col_triples); }
std::size_t TripleIndex::skewer_count() const { return total(skewer_triples); }

bool Board::in_bounds(CellCoord c) const {
    return c.row >= 1 && c.row <= rows_ && c.col >= 1 && c.col <= cols_;
}

std::optional<std::size_t> Board::index_of(CellCoord c) const {
    if (!in_bounds(c)) return std::nullopt;
    const auto slot = grid_[static_cast<std::size_t>(c.row - 1) * cols_ + (c.col - 1)];
    if (slot < 0) return std::nullopt;
    return static_cast<std::size_t>(slot);
}

const Circle& Board::circle_at(CellCoord c) const {
    const auto idx = index_of(c);
    if (!idx) throw std::out_of_range("no circle at " + to_string(c));
    return circles_[*idx].second;
}

std::optional<int> Board::skewer_clue(std::size_t s) const {
    for (const auto& c : skewers_.at(s).path()) {
        if (auto clue = circle_at(c).clue) return clue;
    }
    return std::nullopt;
}

std::size_t Board::skewer_of(CellCoord c) const {
    const auto idx = index_of(c);
    if (!idx) throw std::out_of_range("no circle at " + to_string(c));
    return skewer_of_[*idx];
}

Board build_board(int rows, int cols, std::span<const CircleSpec> circles,
                  std::span<const std::vector<CellCoord>> skewers) {
    if (rows < 1 || cols < 1) {
        throw StructureError(StructureErrorKind::BadDimensions,
                             "grid dimensions must be positive, got " + std::to_string(rows) +
                                 "x" + std::to_string(cols));
    }
    Board b;
    b.rows_ = rows;
    b.cols_ = cols;
    b.grid_.assign(static_cast<std::size_t>(rows) * cols, -1);

    for (const auto& spec : circles) {
        if (!b.in_bounds(spec.at)) {
            throw StructureError(StructureErrorKind::OutOfBounds,
                                 "circle " + to_string(spec.at) + " lies outside the grid",
                                 spec.at);
        }
        if (spec.clue && *spec.clue < 0) {
            throw StructureError(StructureErrorKind::NegativeClue,
                                 "circle " + to_string(spec.at) + " has a negative clue", spec.at);
        }
        b.circles_.emplace_back(spec.at, Circle{spec.clue});
    }
    std::sort(b.circles_.begin(), b.circles_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < b.circles_.size(); ++i) {
        if (b.circles_[i].first == b.circles_[i - 1].first) {
            throw StructureError(StructureErrorKind::DuplicateCircle,
                                 "two circles declared at " + to_string(b.circles_[i].first),
                                 b.circles_[i].first);
        }
    }
    for (std::size_t i = 0; i < b.circles_.size(); ++i) {
        const auto c = b.circles_[i].first;
        b.grid_[static_cast<std::size_t>(c.row - 1) * cols + (c.col - 1)] =
            static_cast<std::int32_t>(i);
    }

    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    b.skewer_of_.assign(b.circles_.size(), unassigned);
    for (std::size_t s = 0; s < skewers.size(); ++s) {
        const auto& path = skewers[s];
        if (path.empty()) {
            throw StructureError(StructureErrorKind::EmptySkewer, "skewer has no circles",
                                 std::nullopt, s);
        }
        for (std::size_t k = 0; k < path.size(); ++k) {
            const auto idx = b.index_of(path[k]);
            if (!idx) {
                throw StructureError(StructureErrorKind::UnknownCircle,
                                     "skewer visits " + to_string(path[k]) +
                                         ", which holds no circle",
                                     path[k], s);
            }
            if (std::find(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(k), path[k]) !=
                path.begin() + static_cast<std::ptrdiff_t>(k)) {
                throw StructureError(StructureErrorKind::RepeatedInSkewer,
                                     "skewer visits " + to_string(path[k]) + " twice", path[k], s);
            }
            if (b.skewer_of_[*idx] != unassigned) {
                throw StructureError(StructureErrorKind::CircleInTwoSkewers,
                                     "circle " + to_string(path[k]) + " lies on two skewers",
                                     path[k], s);
            }
            if (k > 0 && !adjacent(path[k - 1], path[k])) {
                throw StructureError(StructureErrorKind::NonAdjacentStep,
                                     "skewer step " + to_string(path[k - 1]) + " -> " +
                                         to_string(path[k]) + " joins non-adjacent cells",
                                     path[k], s);
            }
            b.skewer_of_[*idx] = s;
        }
    }

    // Renumber: multi-circle skewers keep input order, singletons follow in
    // row-major order.
    std::vector<std::size_t> renumber(skewers.size(), unassigned);
    for (std::size_t s = 0; s < skewers.size(); ++s) {
        if (skewers[s].size() > 1) {
            renumber[s] = b.skewers_.size();
            b.skewers_.emplace_back(skewers[s]);
        }
    }
    for (std::size_t i = 0; i < b.circles_.size(); ++i) {
        const auto old = b.skewer_of_[i];
        if (old != unassigned && renumber[old] != unassigned) {
            b.skewer_of_[i] = renumber[old];
        } else {
            b.skewer_of_[i] = b.skewers_.size();
            b.skewers_.emplace_back(std::vector<CellCoord>{b.circles_[i].first});
        }
    }

    std::vector<std::size_t> origin(b.skewers_.size(), unassigned);
    for (std::size_t s = 0; s < skewers.size(); ++s) {
        if (renumber[s] != unassigned) origin[renumber[s]] = s;
    }
    for (std::size_t s = 0; s < b.skewers_.size(); ++s) {
        const auto& path = b.skewers_[s].path();
        std::optional<CellCoord> clued;
        for (const auto& c : path) {
            const auto& circle = b.circle_at(c);
            if (!circle.clue) continue;
            if (clued) {
                throw StructureError(StructureErrorKind::TwoCluesOnSkewer,
                                     "skewer carries clues at both " + to_string(*clued) +
                                         " and " + to_string(c),
                                     c, origin[s] == unassigned ? std::nullopt
                                                                : std::optional(origin[s]));
            }
            clued = c;
            if (static_cast<std::size_t>(*circle.clue) > path.size()) {
                throw StructureError(StructureErrorKind::ClueExceedsSkewer,
                                     "clue " + std::to_string(*circle.clue) + " at " +
                                         to_string(c) + " exceeds skewer size " +
                                         std::to_string(path.size()),
                                     c, origin[s] == unassigned ? std::nullopt
                                                                : std::optional(origin[s]));
            }
        }
    }

    auto& idx = b.triples_;
    idx.row_triples.resize(static_cast<std::size_t>(rows));
    idx.col_triples.resize(static_cast<std::size_t>(cols));
    std::vector<std::vector<CellCoord>> by_col(static_cast<std::size_t>(cols));
    std::vector<CellCoord> line;
    for (std::size_t i = 0; i < b.circles_.size();) {
        const int r = b.circles_[i].first.row;
        line.clear();
        for (; i < b.circles_.size() && b.circles_[i].first.row == r; ++i) {
            line.push_back(b.circles_[i].first);
            by_col[static_cast<std::size_t>(b.circles_[i].first.col - 1)].push_back(
                b.circles_[i].first);
        }
        push_windows(idx.row_triples[static_cast<std::size_t>(r - 1)], line);
    }
    for (int c = 0; c < cols; ++c) {
        push_windows(idx.col_triples[static_cast<std::size_t>(c)], by_col[static_cast<std::size_t>(c)]);
    }
    idx.skewer_triples.resize(b.skewers_.size());
    for (std::size_t s = 0; s < b.skewers_.size(); ++s) {
        push_windows(idx.skewer_triples[s], b.skewers_[s].path());
    }
    return b;
}

const TripleIndex& triple_index(const Board& board) { return board.triples(); }

Coloring::Coloring(std::vector<std::pair<CellCoord, Color>> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].first == entries_[i - 1].first) {
            throw std::invalid_argument("coloring lists " + to_string(entries_[i].first) + " twice");
        }
    }
}

Coloring::Coloring(const Board& board, std::span<const Color> colors) {
    if (colors.size() != board.circle_count()) {
        throw std::invalid_argument("coloring has " + std::to_string(colors.size()) +
                                    " colors for " + std::to_string(board.circle_count()) +
                                    " circles");
    }
    entries_.reserve(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) {
        entries_.emplace_back(board.circles()[i].first, colors[i]);
    }
}

std::optional<Color> Coloring::find(CellCoord c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const auto& e, CellCoord key) { return e.first < key; });
    if (it == entries_.end() || it->first != c) return std::nullopt;
    return it->second;
}

Color Coloring::at(CellCoord c) const {
    if (auto color = find(c)) return *color;
    throw std::out_of_range("coloring has no entry for " + to_string(c));
}

Coloring Coloring::flipped() const {
    Coloring out = *this;
    for (auto& e : out.entries_) e.second = opposite(e.second);
    return out;
}

bool covers_board(const Board& board, const Coloring& coloring) {
    const auto& circles = board.circles();
    const auto& entries = coloring.entries();
    if (circles.size() != entries.size()) return false;
    for (std::size_t i = 0; i < circles.size(); ++i) {
        if (circles[i].first != entries[i].first) return false;
    }
    return true;
}

char rule_letter(Rule r) {
    switch (r) {
        case Rule::A: return 'A';
        case Rule::B: return 'B';
        case Rule::C: return 'C';
        case Rule::D: return 'D';
    }
    return '?';
}

std::string Violation::describe() const {
    std::ostringstream os;
    os << "rule " << rule_letter(rule) << ' ';
    switch (rule) {
        case Rule::A: os << "skewer " << locus; break;
        case Rule::B: os << "skewer " << locus << " window " << window; break;
        case Rule::C: os << "row " << locus << " window " << window; break;
        case Rule::D: os << "col " << locus << " window " << window; break;
    }
    os << ':';
    for (const auto& c : cells) os << ' ' << to_string(c);
    os << " black=" << observed_black << " required=";
    if (required_min == required_max) {
        os << required_min;
    } else {
        os << required_min << ".." << required_max;
    }
    return os.str();
}

namespace {

void check_family(const Board& board, const std::vector<Color>& colors,
                  const std::vector<std::vector<Triple>>& families, Rule rule,
                  std::vector<Violation>& out) {
    for (std::size_t f = 0; f < families.size(); ++f) {
        for (std::size_t w = 0; w < families[f].size(); ++w) {
            const auto& t = families[f][w];
            int black = 0;
            for (const auto& c : t) black += colors[*board.index_of(c)] == Color::Black ? 1 : 0;
            if (black == 0 || black == 3) {
                out.push_back(Violation{rule, static_cast<int>(f + 1), static_cast<int>(w + 1),
                                        {t.begin(), t.end()}, black, 1, 2});
            }
        }
    }
}

}  // namespace

ViolationReport check_coloring(const Board& board, const Coloring& coloring) {
    if (!covers_board(board, coloring)) {
        throw std::invalid_argument("coloring domain does not match the board's circles");
    }
    std::vector<Color> colors;
    colors.reserve(coloring.size());
    for (const auto& e : coloring.entries()) colors.push_back(e.second);

    ViolationReport report;
    const auto& skewers = board.skewers();
    for (std::size_t s = 0; s < skewers.size(); ++s) {
        const auto clue = board.skewer_clue(s);
        if (!clue) continue;
        int black = 0;
        for (const auto& c : skewers[s].path()) {
            black += colors[*board.index_of(c)] == Color::Black ? 1 : 0;
        }
        if (black != *clue) {
            report.violations.push_back(Violation{Rule::A, static_cast<int>(s + 1), 0,
                                                  skewers[s].path(), black, *clue, *clue});
        }
    }
    const auto& idx = board.triples();
    check_family(board, colors, idx.skewer_triples, Rule::B, report.violations);
    check_family(board, colors, idx.row_triples, Rule::C, report.violations);
    check_family(board, colors, idx.col_triples, Rule::D, report.violations);
    return report;
}

bool is_solution(const Board& board, const Coloring& coloring) {
    return check_coloring(board, coloring).empty();
}

}  // namespace oredango
