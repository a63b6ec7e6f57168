#include "oredango/reduction.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "oredango/solver.hpp"

namespace oredango {

bool literal_value(Literal lit, const Assignment& assignment) {
    const bool v = assignment.at(static_cast<std::size_t>(lit.var - 1));
    return lit.negated ? !v : v;
}

bool satisfies(const OneInThreeInstance& instance, const Assignment& assignment) {
    for (const auto& clause : instance.clauses) {
        int true_count = 0;
        for (const auto& lit : clause) true_count += literal_value(lit, assignment) ? 1 : 0;
        if (true_count != 1) return false;
    }
    return true;
}

void validate_instance(const OneInThreeInstance& instance) {
    if (instance.nvars < 1) throw ReductionError("instance has no variables");
    for (std::size_t i = 0; i < instance.clauses.size(); ++i) {
        const auto& clause = instance.clauses[i];
        for (const auto& lit : clause) {
            if (lit.var < 1 || lit.var > instance.nvars) {
                throw ReductionError("clause " + std::to_string(i + 1) + " uses variable " +
                                     std::to_string(lit.var) + " outside 1.." +
                                     std::to_string(instance.nvars));
            }
        }
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = a + 1; b < 3; ++b) {
                if (clause[a].var == clause[b].var) {
                    throw ReductionError("clause " + std::to_string(i + 1) +
                                         " mentions variable " + std::to_string(clause[a].var) +
                                         " twice");
                }
            }
        }
    }
}

int reduced_rows(int nvars, int nclauses) {
    return 4 * nclauses - 2 + nvars * std::max(0, nclauses - 2);
}

int reduced_cols(int nvars) { return 4 * nvars + 1; }

namespace {

struct Columns {
    int n;
    int positive(int v) const { return 4 * v - 2; }
    int negative(int v) const { return 4 * v - 1; }
    int forced(int v) const { return 4 * v; }
    int buffer(int v) const { return 4 * v + 1; }  // only for v < n
    int left_anchor() const { return 1; }
    int right_anchor() const { return 4 * n + 1; }
    int of(Literal l) const { return l.negated ? negative(l.var) : positive(l.var); }
};

class LayoutBuilder {
public:
    void place(CellCoord at, std::optional<int> clue, CircleRole role) {
        specs_.push_back({at, clue});
        roles_.emplace(at, role);
    }
    void link(CellCoord a, CellCoord b) { skewers_.push_back({a, b}); }

    Board board(int rows, int cols) const { return build_board(rows, cols, specs_, skewers_); }

    std::vector<CircleRole> roles_in_order(const Board& b) const {
        std::vector<CircleRole> out;
        out.reserve(b.circle_count());
        for (const auto& [at, circle] : b.circles()) out.push_back(roles_.at(at));
        return out;
    }

private:
    std::vector<CircleSpec> specs_;
    std::vector<std::vector<CellCoord>> skewers_;
    std::map<CellCoord, CircleRole> roles_;
};

CircleRole fixed(Color c) { return CircleRole{std::nullopt, c}; }
CircleRole follows(Literal l) { return CircleRole{l, Color::White}; }

Clause column_order(Clause c) {
    std::sort(c.begin(), c.end(), [](Literal a, Literal b) { return a.var < b.var; });
    return c;
}

}  // namespace

ReducedPuzzle reduce(const OneInThreeInstance& source) {
    validate_instance(source);
    if (source.clauses.empty()) throw ReductionError("instance has no clauses");

    OneInThreeInstance inst = source;
    if (inst.clauses.size() == 1) inst.clauses.push_back(inst.clauses.front());

    const int n = inst.nvars;
    const int m = static_cast<int>(inst.clauses.size());
    {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (const auto& clause : inst.clauses) {
            for (const auto& lit : clause) seen[static_cast<std::size_t>(lit.var)] = true;
        }
        for (int v = 1; v <= n; ++v) {
            if (!seen[static_cast<std::size_t>(v)]) {
                throw ReductionError("variable " + std::to_string(v) +
                                     " occurs in no clause; remove or renumber it");
            }
        }
    }

    const Columns col{n};
    LayoutMeta meta;
    meta.cols.push_back({ColumnRole::Anchor, 0});
    for (int v = 1; v <= n; ++v) {
        meta.cols.push_back({ColumnRole::Positive, v});
        meta.cols.push_back({ColumnRole::Negative, v});
        meta.cols.push_back({ColumnRole::Forced, v});
        if (v < n) meta.cols.push_back({ColumnRole::Buffer, v});
    }
    meta.cols.push_back({ColumnRole::Anchor, 0});

    LayoutBuilder layout;
    std::vector<LiteralCell> literal_cells;
    std::vector<int> band_top(static_cast<std::size_t>(m), 0);  // by band index
    int row = 0;

    for (int i = 1; i <= m; ++i) {
        const Clause clause = column_order(inst.clauses[static_cast<std::size_t>(i - 1)]);

        const int clause_row = ++row;
        meta.rows.push_back({RowRole::Clause, i, 0});
        layout.place({clause_row, col.left_anchor()}, 1, fixed(Color::Black));
        layout.place({clause_row, col.right_anchor()}, 1, fixed(Color::Black));
        std::set<int> used_cols;
        for (const auto& lit : clause) {
            const CellCoord at{clause_row, col.of(lit)};
            layout.place(at, std::nullopt, follows(lit));
            literal_cells.push_back({i, lit, at});
            used_cols.insert(at.col);
        }

        const int support_row = ++row;
        meta.rows.push_back({RowRole::Support, i, 0});
        layout.place({support_row, col.left_anchor()}, 0, fixed(Color::White));
        layout.place({support_row, col.right_anchor()}, 0, fixed(Color::White));
        for (const auto& lit : {clause[0], clause[2]}) {
            const auto lifted = lit.complement();
            layout.place({support_row, col.of(lifted)}, std::nullopt, follows(lifted));
            used_cols.insert(col.of(lifted));
        }

        if (i == m) break;

        if (i >= 2) {
            for (int v = 1; v <= n; ++v) {
                const int aux_row = ++row;
                meta.rows.push_back({RowRole::Aux, i, v});
                for (const auto lit : {Literal{v, false}, Literal{v, true}}) {
                    if (!used_cols.contains(col.of(lit))) {
                        layout.place({aux_row, col.of(lit)}, std::nullopt, follows(lit));
                    }
                }
                layout.place({aux_row, col.forced(v)}, 0, fixed(Color::White));
                if (v < n) layout.place({aux_row, col.buffer(v)}, 1, fixed(Color::Black));
            }
        }

        const int top = ++row;
        const int bottom = ++row;
        band_top[static_cast<std::size_t>(i)] = top;
        meta.rows.push_back({RowRole::PairTop, i, 0});
        meta.rows.push_back({RowRole::PairBottom, i, 0});
        for (int v = 1; v <= n; ++v) {
            const Literal pos{v, false};
            for (const int r : {top, bottom}) {
                // P(v) pair circles are black iff x_v is false.
                layout.place({r, col.positive(v)}, 1, follows(pos.complement()));
                layout.place({r, col.negative(v)}, std::nullopt, follows(pos));
                layout.place({r, col.forced(v)}, 1, fixed(Color::Black));
                if (v < n) layout.place({r, col.buffer(v)}, 0, fixed(Color::White));
            }
            layout.link({top, col.positive(v)}, {bottom, col.negative(v)});
            layout.link({bottom, col.positive(v)}, {top, col.negative(v)});
        }
    }

    Board board = layout.board(row, reduced_cols(n));
    std::vector<CellCoord> readout(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        auto it = std::find_if(literal_cells.begin(), literal_cells.end(), [v](const LiteralCell& lc) {
            return lc.literal == Literal{v, false};
        });
        readout[static_cast<std::size_t>(v - 1)] =
            it != literal_cells.end() ? it->cell : CellCoord{band_top[1], col.negative(v)};
    }
    auto roles = layout.roles_in_order(board);
    return ReducedPuzzle{std::move(inst), std::move(board), std::move(literal_cells),
                         std::move(readout), std::move(meta), std::move(roles)};
}

Coloring assignment_to_coloring(const ReducedPuzzle& reduced, const Assignment& assignment) {
    if (assignment.size() != static_cast<std::size_t>(reduced.instance.nvars)) {
        throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                    " values for " + std::to_string(reduced.instance.nvars) +
                                    " variables");
    }
    std::vector<Color> colors;
    colors.reserve(reduced.roles.size());
    for (const auto& role : reduced.roles) {
        if (role.literal) {
            colors.push_back(literal_value(*role.literal, assignment) ? Color::Black : Color::White);
        } else {
            colors.push_back(role.fixed);
        }
    }
    return Coloring(reduced.board, colors);
}

Assignment coloring_to_assignment(const ReducedPuzzle& reduced, const Coloring& coloring) {
    if (!covers_board(reduced.board, coloring) || !is_solution(reduced.board, coloring)) {
        throw std::invalid_argument("coloring is not a solution of the reduced board");
    }
    Assignment out;
    out.reserve(reduced.variable_readout.size());
    for (const auto& cell : reduced.variable_readout) {
        out.push_back(coloring.at(cell) == Color::Black);
    }
    return out;
}

std::vector<Assignment> enumerate_assignments(const OneInThreeInstance& instance) {
    if (instance.nvars > kMaxEnumerationVars) {
        throw ReductionError("exhaustive enumeration is limited to " +
                             std::to_string(kMaxEnumerationVars) + " variables");
    }
    validate_instance(instance);
    const auto n = static_cast<std::size_t>(instance.nvars);
    std::vector<Assignment> out;
    Assignment a(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        for (std::size_t v = 0; v < n; ++v) a[v] = (mask >> (n - 1 - v)) & 1U;
        if (satisfies(instance, a)) out.push_back(a);
    }
    return out;
}

namespace {

std::string format_assignment(const Assignment& a) {
    std::string s = "(";
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (v > 0) s += ',';
        s += a[v] ? '1' : '0';
    }
    return s + ")";
}

std::string format_blacks(const Coloring& c) {
    std::string s = "blacks{";
    bool first = true;
    for (const auto& [at, color] : c.entries()) {
        if (color != Color::Black) continue;
        if (!first) s += ' ';
        s += to_string(at);
        first = false;
    }
    return s + "}";
}

}  // namespace

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " puzzle=" << puzzle_solutions
       << " assignments=" << assignments;
    return os.str();
}

VerificationReport verify_reduction(const OneInThreeInstance& instance) {
    validate_instance(instance);
    if (instance.nvars > kMaxVerifyVars ||
        instance.clauses.size() > static_cast<std::size_t>(kMaxVerifyClauses)) {
        throw ReductionError("verification is limited to " + std::to_string(kMaxVerifyVars) +
                             " variables and " + std::to_string(kMaxVerifyClauses) + " clauses");
    }
    const ReducedPuzzle reduced = reduce(instance);
    const Board& board = reduced.board;
    VerificationReport report;
    auto fail = [&](std::string why) { report.failures.push_back(std::move(why)); };

    const int m = static_cast<int>(reduced.instance.clauses.size());
    if (board.rows() != reduced_rows(instance.nvars, m) ||
        board.cols() != reduced_cols(instance.nvars)) {
        fail("board is " + std::to_string(board.rows()) + "x" + std::to_string(board.cols()) +
             ", expected " + std::to_string(reduced_rows(instance.nvars, m)) + "x" +
             std::to_string(reduced_cols(instance.nvars)));
    }
    for (std::size_t s = 0; s < board.skewers().size(); ++s) {
        if (board.skewers()[s].size() > 2) {
            fail("skewer " + std::to_string(s + 1) + " is longer than one link");
        }
        if (auto clue = board.skewer_clue(s); clue && *clue > 1) {
            fail("skewer " + std::to_string(s + 1) + " carries clue " + std::to_string(*clue));
        }
    }

    // Both sides are independent; run them side by side.
    auto puzzle_side = std::async(std::launch::async, [&board] { return enumerate(board); });
    const auto assignments = enumerate_assignments(reduced.instance);
    const auto puzzle = puzzle_side.get();

    report.puzzle_solutions = puzzle.solutions.size();
    report.assignments = assignments.size();
    if (report.puzzle_solutions != report.assignments) {
        fail("puzzle has " + std::to_string(report.puzzle_solutions) + " solutions but " +
             std::to_string(report.assignments) + " assignments satisfy the instance");
    }

    std::set<Assignment> images;
    for (const auto& sol : puzzle.solutions) {
        const auto a = coloring_to_assignment(reduced, sol);
        if (!satisfies(reduced.instance, a)) {
            fail("puzzle solution " + format_blacks(sol) + " reads as non-satisfying " +
                 format_assignment(a));
        }
        if (assignment_to_coloring(reduced, a) != sol) {
            fail("puzzle solution " + format_blacks(sol) + " is not the image of " +
                 format_assignment(a));
        }
        for (const auto& lc : reduced.literal_cells) {
            if ((sol.at(lc.cell) == Color::Black) != literal_value(lc.literal, a)) {
                fail("literal circle " + to_string(lc.cell) + " disagrees with " +
                     format_assignment(a));
            }
        }
        if (!images.insert(a).second) {
            fail("two puzzle solutions read as " + format_assignment(a));
        }
    }
    for (const auto& a : assignments) {
        const auto c = assignment_to_coloring(reduced, a);
        if (!is_solution(board, c)) {
            fail("satisfying assignment " + format_assignment(a) + " maps to a non-solution");
            continue;
        }
        if (coloring_to_assignment(reduced, c) != a) {
            fail("assignment " + format_assignment(a) + " does not survive the round trip");
        }
    }
    report.pass = report.failures.empty();
    return report;
}

std::string write_reduction_map(const ReducedPuzzle& reduced) {
    std::ostringstream os;
    os << "# lit <clause> <literal> <row> <col>\n";
    for (const auto& lc : reduced.literal_cells) {
        os << "lit " << lc.clause << ' ' << lc.literal.signed_value() << ' ' << lc.cell.row << ' '
           << lc.cell.col << '\n';
    }
    os << "# var <variable> <row> <col>\n";
    for (std::size_t v = 0; v < reduced.variable_readout.size(); ++v) {
        const auto& at = reduced.variable_readout[v];
        os << "var " << v + 1 << ' ' << at.row << ' ' << at.col << '\n';
    }
    return os.str();
}

}  // namespace oredango
