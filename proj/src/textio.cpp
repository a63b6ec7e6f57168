#include "oredango/textio.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace oredango {

std::string ParseDiagnostic::format() const {
    std::ostringstream os;
    os << "line " << line;
    if (column > 0) os << ":" << column;
    os << ": " << (severity == Severity::Error ? "error" : "warning") << ": " << message;
    return os.str();
}

namespace {

std::string join(const std::vector<ParseDiagnostic>& diags) {
    std::string s;
    for (const auto& d : diags) {
        if (!s.empty()) s += '\n';
        s += d.format();
    }
    return s;
}

struct Token {
    std::string_view text;
    int column;  // 1-based
};

struct Line {
    int number;
    std::string_view text;
    std::vector<Token> tokens;
};

// Splits into lines, drops CR, blank lines and comment lines.
std::vector<Line> content_lines(std::string_view text, std::string_view extra_comment = {}) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        Line line{number, raw, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            const auto start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            if (i > start) {
                line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start + 1)});
            }
        }
        if (nl == std::string_view::npos && raw.empty()) break;
        if (line.tokens.empty()) continue;
        const auto first = line.tokens.front().text;
        if (first.front() == '#') continue;
        if (!extra_comment.empty() && first == extra_comment) continue;
        out.push_back(std::move(line));
    }
    return out;
}

std::optional<int> to_int(std::string_view s) {
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

class Diagnostics {
public:
    void error(int line, int column, std::string message,
               DiagnosticKind kind = DiagnosticKind::Syntax) {
        list_.push_back({line, column, std::move(message), Severity::Error, kind});
    }
    bool any() const { return !list_.empty(); }
    [[noreturn]] void raise() { throw ParseError(std::move(list_)); }

private:
    std::vector<ParseDiagnostic> list_;
};

}  // namespace

ParseError::ParseError(std::vector<ParseDiagnostic> diagnostics)
    : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

bool ParseError::structural_only() const {
    for (const auto& d : diagnostics_) {
        if (d.kind != DiagnosticKind::Structure) return false;
    }
    return !diagnostics_.empty();
}

Board parse_board(std::string_view text) {
    Diagnostics diag;
    std::optional<int> rows, cols;
    std::vector<CircleSpec> circles;
    std::map<CellCoord, int> circle_line;
    std::vector<std::vector<CellCoord>> skewers;
    std::vector<int> skewer_line;

    for (const auto& line : content_lines(text)) {
        const auto& tok = line.tokens;
        const auto keyword = tok.front().text;

        if (keyword == "rows" || keyword == "cols") {
            auto& slot = keyword == "rows" ? rows : cols;
            if (slot) {
                diag.error(line.number, tok[0].column, "duplicate '" + std::string(keyword) + "' header");
                continue;
            }
            if (keyword == "cols" && !rows) {
                diag.error(line.number, tok[0].column, "'cols' must follow 'rows'");
                continue;
            }
            if (tok.size() != 2) {
                diag.error(line.number, tok[0].column, "expected '" + std::string(keyword) + " <count>'");
                continue;
            }
            const auto value = to_int(tok[1].text);
            if (!value || *value < 1) {
                diag.error(line.number, tok[1].column, "expected a positive integer");
                continue;
            }
            slot = *value;
            continue;
        }

        if (!rows || !cols) {
            diag.error(line.number, tok[0].column, "missing 'rows'/'cols' header before '" +
                                                       std::string(keyword) + "'");
            continue;
        }

        if (keyword == "circle") {
            if (tok.size() != 3 && tok.size() != 4) {
                diag.error(line.number, tok[0].column, "expected 'circle <row> <col> [clue]'");
                continue;
            }
            const auto r = to_int(tok[1].text);
            const auto c = to_int(tok[2].text);
            if (!r || !c) {
                diag.error(line.number, (r ? tok[2] : tok[1]).column, "expected an integer coordinate");
                continue;
            }
            std::optional<int> clue;
            if (tok.size() == 4) {
                clue = to_int(tok[3].text);
                if (!clue || *clue < 0) {
                    diag.error(line.number, tok[3].column, "clue must be a nonnegative integer");
                    continue;
                }
            }
            const CellCoord at{*r, *c};
            if (!circle_line.emplace(at, line.number).second) {
                diag.error(line.number, tok[0].column,
                           "circle " + to_string(at) + " already declared on line " +
                               std::to_string(circle_line[at]),
                           DiagnosticKind::Structure);
                continue;
            }
            circles.push_back({at, clue});
            continue;
        }

        if (keyword == "skewer") {
            if (tok.size() < 5 || tok.size() % 2 == 0) {
                diag.error(line.number, tok[0].column,
                           "expected 'skewer <r1> <c1> <r2> <c2> ...' with at least two cells");
                continue;
            }
            std::vector<CellCoord> path;
            bool ok = true;
            for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
                const auto r = to_int(tok[k].text);
                const auto c = to_int(tok[k + 1].text);
                if (!r || !c) {
                    diag.error(line.number, (r ? tok[k + 1] : tok[k]).column,
                               "expected an integer coordinate");
                    ok = false;
                    break;
                }
                const CellCoord at{*r, *c};
                if (!circle_line.contains(at)) {
                    diag.error(line.number, tok[k].column,
                               "skewer references " + to_string(at) +
                                   ", which is not a previously declared circle",
                               DiagnosticKind::Structure);
                    ok = false;
                    break;
                }
                path.push_back(at);
            }
            if (ok) {
                skewers.push_back(std::move(path));
                skewer_line.push_back(line.number);
            }
            continue;
        }

        diag.error(line.number, tok[0].column, "unknown keyword '" + std::string(keyword) + "'");
    }

    if (!rows || !cols) diag.error(1, 0, "missing 'rows'/'cols' header");
    if (diag.any()) diag.raise();

    try {
        return build_board(*rows, *cols, circles, skewers);
    } catch (const StructureError& e) {
        int line = 0;
        if (e.skewer()) {
            line = skewer_line[*e.skewer()];
        } else if (e.cell() && circle_line.contains(*e.cell())) {
            line = circle_line[*e.cell()];
        }
        diag.error(line, 0, e.what(), DiagnosticKind::Structure);
        diag.raise();
    }
}

std::string write_board(const Board& board) {
    std::ostringstream os;
    os << "rows " << board.rows() << "\ncols " << board.cols() << '\n';
    for (const auto& [at, circle] : board.circles()) {
        os << "circle " << at.row << ' ' << at.col;
        if (circle.clue) os << ' ' << *circle.clue;
        os << '\n';
    }
    for (const auto& skewer : board.skewers()) {
        if (skewer.size() < 2) continue;
        os << "skewer";
        for (const auto& at : skewer.path()) os << ' ' << at.row << ' ' << at.col;
        os << '\n';
    }
    return os.str();
}

Coloring parse_coloring(std::string_view text, const Board& board) {
    Diagnostics diag;
    const auto lines = content_lines(text);
    std::vector<std::pair<CellCoord, Color>> entries;
    if (static_cast<int>(lines.size()) != board.rows()) {
        diag.error(lines.empty() ? 1 : lines.back().number, 0,
                   "expected " + std::to_string(board.rows()) + " grid lines, found " +
                       std::to_string(lines.size()));
        diag.raise();
    }
    for (int r = 1; r <= board.rows(); ++r) {
        const auto& line = lines[static_cast<std::size_t>(r - 1)];
        if (line.tokens.size() != 1) {
            diag.error(line.number, line.tokens[1].column, "grid line contains whitespace");
            continue;
        }
        const auto cells = line.tokens.front().text;
        const int offset = line.tokens.front().column;
        if (static_cast<int>(cells.size()) != board.cols()) {
            diag.error(line.number, offset,
                       "expected " + std::to_string(board.cols()) + " cells, found " +
                           std::to_string(cells.size()));
            continue;
        }
        for (int c = 1; c <= board.cols(); ++c) {
            const char ch = cells[static_cast<std::size_t>(c - 1)];
            const CellCoord at{r, c};
            const int column = offset + c - 1;
            if (ch != '.' && ch != 'B' && ch != 'W') {
                diag.error(line.number, column, std::string("unexpected character '") + ch + "'");
                continue;
            }
            const bool circle = board.has_circle(at);
            if (ch == '.' && circle) {
                diag.error(line.number, column, "circle cell " + to_string(at) + " left uncolored",
                           DiagnosticKind::Structure);
            } else if (ch != '.' && !circle) {
                diag.error(line.number, column, "color given for empty cell " + to_string(at),
                           DiagnosticKind::Structure);
            } else if (ch != '.') {
                entries.emplace_back(at, ch == 'B' ? Color::Black : Color::White);
            }
        }
    }
    if (diag.any()) diag.raise();
    return Coloring(std::move(entries));
}

std::string write_coloring(const Board& board, const Coloring& coloring) {
    if (!covers_board(board, coloring)) {
        throw std::invalid_argument("coloring domain does not match the board's circles");
    }
    std::string out;
    out.reserve(static_cast<std::size_t>(board.rows()) * (board.cols() + 1));
    for (int r = 1; r <= board.rows(); ++r) {
        for (int c = 1; c <= board.cols(); ++c) {
            const auto color = coloring.find({r, c});
            out += !color ? '.' : (*color == Color::Black ? 'B' : 'W');
        }
        out += '\n';
    }
    return out;
}

OneInThreeInstance parse_one_in_three(std::string_view text) {
    Diagnostics diag;
    const auto lines = content_lines(text, "c");
    OneInThreeInstance inst;
    std::optional<int> declared_clauses;
    int header_line = 1;

    for (const auto& line : lines) {
        const auto& tok = line.tokens;
        if (!declared_clauses) {
            const bool shape = tok.size() == 4 && tok[0].text == "p" && tok[1].text == "1in3";
            const auto nv = shape ? to_int(tok[2].text) : std::nullopt;
            const auto nc = shape ? to_int(tok[3].text) : std::nullopt;
            if (!nv || !nc || *nv < 1 || *nc < 0) {
                diag.error(line.number, tok[0].column,
                           "expected header 'p 1in3 <nvars >= 1> <nclauses >= 0>'");
                diag.raise();
            }
            inst.nvars = *nv;
            declared_clauses = *nc;
            header_line = line.number;
            continue;
        }
        if (tok.front().text == "p") {
            diag.error(line.number, tok[0].column, "duplicate header");
            continue;
        }
        if (tok.size() != 4) {
            diag.error(line.number, tok[0].column,
                       "clause must list exactly three literals followed by 0, found " +
                           std::to_string(tok.size()) + " tokens");
            continue;
        }
        Clause clause{};
        bool ok = true;
        for (std::size_t k = 0; k < 4 && ok; ++k) {
            const auto value = to_int(tok[k].text);
            if (!value) {
                diag.error(line.number, tok[k].column, "expected an integer literal");
                ok = false;
            } else if (k == 3 && *value != 0) {
                diag.error(line.number, tok[k].column, "clause must end with 0");
                ok = false;
            } else if (k < 3 && *value == 0) {
                diag.error(line.number, tok[k].column, "zero literal inside a clause");
                ok = false;
            } else if (k < 3 && (*value > inst.nvars || *value < -inst.nvars)) {
                diag.error(line.number, tok[k].column,
                           "literal " + std::to_string(*value) + " exceeds " +
                               std::to_string(inst.nvars) + " variables");
                ok = false;
            } else if (k < 3) {
                clause[k] = Literal::from_signed(*value);
                for (std::size_t j = 0; j < k; ++j) {
                    if (clause[j].var == clause[k].var) {
                        diag.error(line.number, tok[k].column,
                                   clause[j] == clause[k]
                                       ? "literal repeated within a clause"
                                       : "clause contains a literal and its complement");
                        ok = false;
                    }
                }
            }
        }
        if (ok) inst.clauses.push_back(clause);
    }

    if (!declared_clauses) {
        diag.error(1, 0, "missing 'p 1in3' header");
        diag.raise();
    }
    if (!diag.any() && static_cast<int>(inst.clauses.size()) != *declared_clauses) {
        diag.error(header_line, 0,
                   "header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                       std::to_string(inst.clauses.size()));
    }
    if (diag.any()) diag.raise();
    return inst;
}

std::string write_one_in_three(const OneInThreeInstance& instance) {
    std::ostringstream os;
    os << "p 1in3 " << instance.nvars << ' ' << instance.clauses.size() << '\n';
    for (const auto& clause : instance.clauses) {
        for (const auto& lit : clause) os << lit.signed_value() << ' ';
        os << "0\n";
    }
    return os.str();
}

}  // namespace oredango
