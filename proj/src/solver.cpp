#include "oredango/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace oredango {

PartialColoring::PartialColoring(const Board& board)
    : states_(board.circle_count(), CellState::Unassigned) {
    cells_.reserve(board.circle_count());
    for (const auto& [at, circle] : board.circles()) cells_.push_back(at);
}

std::size_t PartialColoring::index(CellCoord c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) {
        throw std::out_of_range("no circle at " + to_string(c));
    }
    return static_cast<std::size_t>(it - cells_.begin());
}

CellState PartialColoring::at(CellCoord c) const { return states_[index(c)]; }

void PartialColoring::assign(CellCoord c, Color color) {
    states_[index(c)] = color == Color::Black ? CellState::Black : CellState::White;
}

std::size_t PartialColoring::assigned_count() const {
    return static_cast<std::size_t>(
        std::count_if(states_.begin(), states_.end(),
                      [](CellState s) { return s != CellState::Unassigned; }));
}

bool PartialColoring::complete() const { return assigned_count() == states_.size(); }

Coloring PartialColoring::to_coloring() const {
    if (!complete()) throw std::logic_error("partial coloring is not complete");
    std::vector<std::pair<CellCoord, Color>> entries;
    entries.reserve(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        entries.emplace_back(cells_[i],
                             states_[i] == CellState::Black ? Color::Black : Color::White);
    }
    return Coloring(std::move(entries));
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Sat: return "SAT";
        case SolveStatus::Unsat: return "UNSAT";
        case SolveStatus::CapReached: return "CAP";
    }
    return "?";
}

search::CardinalitySearch board_search(const Board& board) {
    std::vector<search::CardinalityConstraint> cons;
    const auto index = [&](CellCoord c) { return *board.index_of(c); };
    const auto& skewers = board.skewers();
    for (std::size_t s = 0; s < skewers.size(); ++s) {
        if (auto clue = board.skewer_clue(s)) {
            search::CardinalityConstraint c{{}, *clue, *clue};
            for (const auto& at : skewers[s].path()) c.vars.push_back(index(at));
            cons.push_back(std::move(c));
        }
    }
    const auto& idx = board.triples();
    for (const auto* families : {&idx.skewer_triples, &idx.row_triples, &idx.col_triples}) {
        for (const auto& family : *families) {
            for (const auto& t : family) {
                cons.push_back({{index(t[0]), index(t[1]), index(t[2])}, 1, 2});
            }
        }
    }
    return search::CardinalitySearch(board.circle_count(), std::move(cons));
}

namespace {

std::vector<search::Value> to_values(const PartialColoring& p) {
    std::vector<search::Value> values(p.size(), search::kUnassigned);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.states()[i] == CellState::Black) values[i] = 1;
        if (p.states()[i] == CellState::White) values[i] = 0;
    }
    return values;
}

Coloring to_coloring(const Board& board, std::span<const search::Value> values) {
    std::vector<Color> colors(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        colors[i] = values[i] == 1 ? Color::Black : Color::White;
    }
    return Coloring(board, colors);
}

void check_domain(const Board& board, const PartialColoring& p) {
    if (p.size() != board.circle_count()) {
        throw std::invalid_argument("partial coloring does not match the board");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.cells()[i] != board.circles()[i].first) {
            throw std::invalid_argument("partial coloring does not match the board");
        }
    }
}

SolveOutcome run(const Board& board, const PartialColoring& start, std::size_t cap, bool store) {
    check_domain(board, start);
    SolveOutcome out;
    if (cap == 0) {
        out.status = SolveStatus::CapReached;
        return out;
    }
    const auto engine = board_search(board);
    bool capped = false;
    out.nodes = engine.search(to_values(start), [&](std::span<const search::Value> values) {
        ++out.count;
        if (store) out.solutions.push_back(to_coloring(board, values));
        if (out.count >= cap) {
            capped = true;
            return false;
        }
        return true;
    });
    if (capped) {
        out.status = SolveStatus::CapReached;
    } else {
        out.status = out.count > 0 ? SolveStatus::Sat : SolveStatus::Unsat;
    }
    return out;
}

}  // namespace

std::optional<PartialColoring> propagate(const Board& board, const PartialColoring& partial) {
    check_domain(board, partial);
    auto values = to_values(partial);
    if (!board_search(board).propagate(values)) return std::nullopt;
    PartialColoring out = partial;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 1) out.states_[i] = CellState::Black;
        if (values[i] == 0) out.states_[i] = CellState::White;
    }
    return out;
}

SolveOutcome solve(const Board& board) {
    auto out = run(board, PartialColoring(board), 1, true);
    if (out.status == SolveStatus::CapReached) out.status = SolveStatus::Sat;
    return out;
}

SolveOutcome enumerate(const Board& board, std::size_t cap) {
    return run(board, PartialColoring(board), cap, true);
}

SolveOutcome enumerate_from(const Board& board, const PartialColoring& start, std::size_t cap) {
    return run(board, start, cap, true);
}

SolveOutcome count_solutions(const Board& board, std::size_t cap) {
    return run(board, PartialColoring(board), cap, false);
}

std::optional<Coloring> another_solution(const Board& board, std::span<const Coloring> known) {
    for (std::size_t k = 0; k < known.size(); ++k) {
        if (!covers_board(board, known[k]) || !is_solution(board, known[k])) {
            throw std::invalid_argument("known coloring #" + std::to_string(k + 1) +
                                        " is not a solution of the board");
        }
    }
    std::vector<Coloring> sorted(known.begin(), known.end());
    std::sort(sorted.begin(), sorted.end());
    std::optional<Coloring> found;
    board_search(board).search(to_values(PartialColoring(board)),
                               [&](std::span<const search::Value> values) {
                                   auto c = to_coloring(board, values);
                                   if (std::binary_search(sorted.begin(), sorted.end(), c)) {
                                       return true;
                                   }
                                   found = std::move(c);
                                   return false;
                               });
    return found;
}

}  // namespace oredango
