#ifndef OREDANGO_REDUCTION_HPP
#define OREDANGO_REDUCTION_HPP

// Reduction from 1-in-3SAT to Oredango.
//
// The produced board uses only skewers of one link or none and clues in
// {0, 1}. Its solutions correspond one-to-one to the satisfying assignments
// of the instance.
//
// Columns: 1 and 4n+1 are anchor columns. Variable v owns
//   P(v) = 4v-2  literal x_v            N(v) = 4v-1  literal !x_v
//   T(v) = 4v    forced black in bands  U(v) = 4v+1  forced white in bands (v < n)
//
// Rows, top to bottom, for clause i = 1..m:
//   clause row   anchors clued 1, the three literal circles
//   support row  anchors clued 0, circles for the complements of the
//                clause's first and third literal
//   aux rows     (2 <= i <= m-1) one per variable: a support circle in each
//                of P(v)/N(v) not used by clause i, a 0-clued circle in T(v)
//                and a 1-clued circle in U(v)
//   band i       (i <= m-1) two pair rows holding one key pattern per
//                variable: pair circles in P(v)/N(v) linked by two crossing
//                skewers clued 1 at the P(v) end, 1-clued circles in T(v),
//                0-clued circles in U(v)
//
// In a solution the key pattern colors both P(v) pair circles alike and the
// N(v) pair circles the opposite way. Every literal column holds exactly one
// circle between consecutive bands, which rule (d) forces to the opposite of
// the neighbouring pair color. Hence all circles of a column agree, and the
// two columns of a variable disagree. The clause row (B l1 l2 l3 B) rejects
// 000, 110, 011 and 111; the support row (W !l1 !l3 W) rejects 101.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oredango/core.hpp"

namespace oredango {

struct Literal {
    int var = 0;  // 1-based
    bool negated = false;

    Literal complement() const { return {var, !negated}; }
    /// DIMACS-style signed form: v or -v.
    int signed_value() const { return negated ? -var : var; }
    static Literal from_signed(int v) { return {v < 0 ? -v : v, v < 0}; }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct OneInThreeInstance {
    int nvars = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const OneInThreeInstance&, const OneInThreeInstance&) = default;
};

/// Truth value per variable; index v-1 holds x_v.
using Assignment = std::vector<bool>;

bool literal_value(Literal lit, const Assignment& assignment);
/// Exactly one true literal in every clause.
bool satisfies(const OneInThreeInstance& instance, const Assignment& assignment);

class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ReductionError for out-of-range literals and for clauses that
/// repeat a variable (including complementary literals).
void validate_instance(const OneInThreeInstance& instance);

enum class RowRole { Clause, Support, Aux, PairTop, PairBottom };
enum class ColumnRole { Anchor, Positive, Negative, Forced, Buffer };

struct RowTag {
    RowRole role;
    int clause = 0;    // Clause/Support/Aux: clause index; pair rows: band index
    int variable = 0;  // Aux rows only
};

struct ColumnTag {
    ColumnRole role;
    int variable = 0;  // 0 for anchor columns
};

struct LayoutMeta {
    std::vector<RowTag> rows;     // index r-1
    std::vector<ColumnTag> cols;  // index c-1
};

/// How a circle's color follows from an assignment: black iff `literal` is
/// true, or the fixed color for anchors and forced circles.
struct CircleRole {
    std::optional<Literal> literal;
    Color fixed = Color::White;
};

struct LiteralCell {
    int clause = 0;  // 1-based, in ReducedPuzzle::instance
    Literal literal;
    CellCoord cell;
};

struct ReducedPuzzle {
    /// The instance actually encoded; a single clause is duplicated.
    OneInThreeInstance instance;
    Board board;
    std::vector<LiteralCell> literal_cells;
    /// Per variable (index v-1): a circle that is black iff x_v is true.
    std::vector<CellCoord> variable_readout;
    LayoutMeta layout;
    /// Aligned with board.circles().
    std::vector<CircleRole> roles;
};

/// Expected board size for an instance with `nvars` variables and
/// `nclauses` clauses (after duplicating a lone clause).
int reduced_rows(int nvars, int nclauses);
int reduced_cols(int nvars);

/// Throws ReductionError for invalid instances, for instances without
/// clauses and for variables that occur in no clause.
ReducedPuzzle reduce(const OneInThreeInstance& instance);

/// The coloring induced by reading every circle off the assignment. It is a
/// solution exactly when the assignment satisfies the instance. Throws
/// std::invalid_argument when the assignment has the wrong length.
Coloring assignment_to_coloring(const ReducedPuzzle& reduced, const Assignment& assignment);

/// Reads each variable at its readout circle. Throws std::invalid_argument
/// unless `coloring` is a solution of reduced.board.
Assignment coloring_to_assignment(const ReducedPuzzle& reduced, const Coloring& coloring);

inline constexpr int kMaxEnumerationVars = 24;

/// All satisfying assignments in lexicographic order (x_1 most significant,
/// false before true). Throws ReductionError beyond kMaxEnumerationVars.
std::vector<Assignment> enumerate_assignments(const OneInThreeInstance& instance);

inline constexpr int kMaxVerifyVars = 6;
inline constexpr int kMaxVerifyClauses = 5;

struct VerificationReport {
    bool pass = false;
    std::size_t puzzle_solutions = 0;
    std::size_t assignments = 0;
    std::vector<std::string> failures;

    /// "PASS puzzle=<k> assignments=<k>" or "FAIL ...".
    std::string summary() const;
};

/// Exhaustive check of the reduction on one instance: the size formula,
/// the skewer/clue restriction, equal solution counts and mutually inverse
/// maps between both solution sets. Throws ReductionError for instances
/// beyond kMaxVerifyVars / kMaxVerifyClauses or rejected by reduce.
VerificationReport verify_reduction(const OneInThreeInstance& instance);

/// Text listing of literal cells and readout cells:
///   lit <clause> <signed literal> <row> <col>
///   var <v> <row> <col>
std::string write_reduction_map(const ReducedPuzzle& reduced);

}  // namespace oredango

#endif  // OREDANGO_REDUCTION_HPP
