#ifndef OREDANGO_TEXTIO_HPP
#define OREDANGO_TEXTIO_HPP

// Line-oriented text formats.
//
// Board (.odg):
//     # comment
//     rows 4
//     cols 4
//     circle 1 1 0
//     circle 1 2
//     skewer 1 2 1 3 2 3
//
// Coloring (.sol): `rows` lines of `cols` characters, `B`/`W` on circle
// cells and `.` on empty cells.
//
// 1-in-3SAT (.c13):
//     p 1in3 <nvars> <nclauses>
//     1 -2 3 0
//
// Every parser accepts `#` comment lines, blank lines, surplus spaces/tabs
// and CRLF line endings. Writers emit LF only.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oredango/core.hpp"
#include "oredango/reduction.hpp"

namespace oredango {

enum class Severity { Error, Warning };

enum class DiagnosticKind {
    Syntax,     // malformed token, missing header, bad counts
    Structure,  // the text is well formed but describes an invalid instance
};

struct ParseDiagnostic {
    int line = 0;    // 1-based
    int column = 0;  // 1-based, 0 when the whole line is at fault
    std::string message;
    Severity severity = Severity::Error;
    DiagnosticKind kind = DiagnosticKind::Syntax;

    std::string format() const;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<ParseDiagnostic> diagnostics);

    const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }
    /// True when every diagnostic is a structural (not syntactic) failure.
    bool structural_only() const;

private:
    std::vector<ParseDiagnostic> diagnostics_;
};

Board parse_board(std::string_view text);
std::string write_board(const Board& board);

Coloring parse_coloring(std::string_view text, const Board& board);
std::string write_coloring(const Board& board, const Coloring& coloring);

OneInThreeInstance parse_one_in_three(std::string_view text);
std::string write_one_in_three(const OneInThreeInstance& instance);

}  // namespace oredango

#endif  // OREDANGO_TEXTIO_HPP
