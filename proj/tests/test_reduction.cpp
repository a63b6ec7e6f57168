#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "oredango/reduction.hpp"
#include "oredango/solver.hpp"
#include "support/test_support.hpp"

using namespace oredango;
using oredango::testing::brute_force_assignments;
using oredango::testing::read_fixture;

namespace {

OneInThreeInstance example_instance() { return parse_one_in_three(read_fixture("example.c13")); }

OneInThreeInstance make(int nvars, std::vector<std::array<int, 3>> clauses) {
    OneInThreeInstance inst{nvars, {}};
    for (const auto& c : clauses) {
        inst.clauses.push_back(
            {Literal::from_signed(c[0]), Literal::from_signed(c[1]), Literal::from_signed(c[2])});
    }
    return inst;
}

Assignment bits(std::initializer_list<int> v) {
    Assignment a;
    for (int x : v) a.push_back(x != 0);
    return a;
}

void check_restrictions(const Board& board) {
    for (std::size_t s = 0; s < board.skewers().size(); ++s) {
        CHECK(board.skewers()[s].size() <= 2);
        if (auto clue = board.skewer_clue(s)) CHECK((*clue == 0 || *clue == 1));
    }
}

}  // namespace

TEST_CASE("example instance reduces to a 14 x 17 restricted board", "[reduction]") {
    const auto reduced = reduce(example_instance());
    CHECK(reduced.board.rows() == 14);
    CHECK(reduced.board.cols() == 17);
    CHECK(reduced_rows(4, 3) == 14);
    CHECK(reduced_cols(4) == 17);
    check_restrictions(reduced.board);
    CHECK(reduced.layout.rows.size() == 14);
    CHECK(reduced.layout.cols.size() == 17);
    CHECK(reduced.roles.size() == reduced.board.circle_count());
    CHECK(reduced.literal_cells.size() == 9);
}

TEST_CASE("example instance has the unique solution (1,0,0,1)", "[reduction]") {
    const auto reduced = reduce(example_instance());
    const auto result = enumerate(reduced.board);
    REQUIRE(result.solutions.size() == 1);
    CHECK(coloring_to_assignment(reduced, result.solutions[0]) == bits({1, 0, 0, 1}));
    const auto coloring = assignment_to_coloring(reduced, bits({1, 0, 0, 1}));
    CHECK(check_coloring(reduced.board, coloring).empty());
    CHECK(coloring == result.solutions[0]);
}

TEST_CASE("an all-false assignment breaks the clause rows", "[reduction]") {
    const auto reduced = reduce(example_instance());
    const auto report = check_coloring(reduced.board, assignment_to_coloring(reduced, bits({0, 0, 0, 0})));
    REQUIRE_FALSE(report.empty());
    bool clause_row_hit = false;
    for (const auto& v : report.violations) {
        clause_row_hit = clause_row_hit || (v.rule == Rule::C && v.locus == 1);
    }
    CHECK(clause_row_hit);
    CHECK_THROWS_AS(assignment_to_coloring(reduced, bits({0, 0})), std::invalid_argument);
}

TEST_CASE("literal circles of complementary literals get opposite colors", "[reduction]") {
    const auto reduced = reduce(example_instance());
    for (const auto& a : {bits({1, 0, 0, 1}), bits({0, 1, 1, 0}), bits({1, 1, 1, 1})}) {
        const auto coloring = assignment_to_coloring(reduced, a);
        for (const auto& lc : reduced.literal_cells) {
            CHECK((coloring.at(lc.cell) == Color::Black) == literal_value(lc.literal, a));
        }
    }
}

TEST_CASE("a single clause is duplicated and keeps its three solutions", "[reduction]") {
    const auto inst = make(3, {{1, 2, 3}});
    const auto reduced = reduce(inst);
    CHECK(reduced.instance.clauses.size() == 2);
    CHECK(reduced.board.rows() == reduced_rows(3, 2));
    CHECK(enumerate(reduced.board).count == 3);
    CHECK(enumerate_assignments(inst) ==
          std::vector<Assignment>{bits({0, 0, 1}), bits({0, 1, 0}), bits({1, 0, 0})});
    CHECK(enumerate_assignments(make(3, {{1, 2, 3}, {1, 2, 3}})) == enumerate_assignments(inst));
}

TEST_CASE("literal columns of a variable are adjacent", "[reduction]") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 3);
        const int n = 3 + static_cast<int>(rng() % 3);
        const auto reduced = reduce(oredango::testing::random_instance(rng, n, m));
        for (const auto& lc : reduced.literal_cells) {
            const int v = lc.literal.var;
            CHECK(lc.cell.col == (lc.literal.negated ? 4 * v - 1 : 4 * v - 2));
            const auto& tag = reduced.layout.cols[static_cast<std::size_t>(lc.cell.col - 1)];
            CHECK(tag.variable == v);
            CHECK(tag.role == (lc.literal.negated ? ColumnRole::Negative : ColumnRole::Positive));
            const auto& row = reduced.layout.rows[static_cast<std::size_t>(lc.cell.row - 1)];
            CHECK(row.role == RowRole::Clause);
            CHECK(row.clause == lc.clause);
        }
        // Literal circles of one clause share a row, in column order.
        for (std::size_t k = 0; k + 2 < reduced.literal_cells.size(); k += 3) {
            const auto& a = reduced.literal_cells[k];
            const auto& b = reduced.literal_cells[k + 1];
            const auto& c = reduced.literal_cells[k + 2];
            CHECK(a.cell.row == b.cell.row);
            CHECK(b.cell.row == c.cell.row);
            CHECK(a.cell.col < b.cell.col);
            CHECK(b.cell.col < c.cell.col);
        }
    }
}

TEST_CASE("invalid instances are rejected", "[reduction][errors]") {
    CHECK_THROWS_AS(reduce(make(3, {})), ReductionError);
    CHECK_THROWS_AS(reduce(make(4, {{1, 2, 3}})), ReductionError);
    CHECK_THROWS_AS(reduce(make(3, {{1, -1, 2}})), ReductionError);
    CHECK_THROWS_AS(reduce(make(3, {{1, 1, 2}})), ReductionError);
    CHECK_THROWS_AS(reduce(make(3, {{1, 2, 4}})), ReductionError);
    CHECK_THROWS_AS(verify_reduction(make(7, {{1, 2, 3}, {4, 5, 6}, {5, 6, 7}})), ReductionError);
    CHECK_THROWS_AS(verify_reduction(make(3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3},
                                               {1, 2, 3}, {1, 2, 3}})),
                    ReductionError);
    OneInThreeInstance big{25, {}};
    CHECK_THROWS_AS(enumerate_assignments(big), ReductionError);
}

TEST_CASE("coloring_to_assignment rejects non-solutions", "[reduction][errors]") {
    const auto reduced = reduce(example_instance());
    const auto bad = assignment_to_coloring(reduced, bits({0, 0, 0, 0}));
    CHECK_THROWS_AS(coloring_to_assignment(reduced, bad), std::invalid_argument);
}

TEST_CASE("verify_reduction on the reference instances", "[reduction][verify]") {
    auto report = verify_reduction(example_instance());
    CHECK(report.pass);
    CHECK(report.summary() == "PASS puzzle=1 assignments=1");

    const auto pair = make(3, {{1, 2, 3}, {-1, -2, -3}});
    report = verify_reduction(pair);
    CHECK(report.pass);
    CHECK(report.assignments == brute_force_assignments(pair).size());

    const auto unsat = make(3, {{1, 2, 3}, {-1, 2, 3}, {1, -2, 3}, {1, 2, -3}});
    REQUIRE(brute_force_assignments(unsat).empty());
    report = verify_reduction(unsat);
    CHECK(report.pass);
    CHECK(report.puzzle_solutions == 0);
    CHECK(solve(reduce(unsat).board).status == SolveStatus::Unsat);
}

TEST_CASE("clause strip accepts exactly the one-true patterns", "[reduction][property]") {
    // Signs vary so that supports and literals sit in both column kinds.
    for (const auto& signs : {std::array<int, 3>{1, 2, 3}, std::array<int, 3>{-1, 2, -3},
                              std::array<int, 3>{1, -2, 3}}) {
        const auto inst = make(3, {signs});
        const auto reduced = reduce(inst);
        const auto& clause = reduced.instance.clauses[0];
        for (int pattern = 0; pattern < 8; ++pattern) {
            // Literal k is true when bit k is set.
            Assignment a(3);
            int trues = 0;
            for (int k = 0; k < 3; ++k) {
                const bool want = (pattern >> k) & 1;
                trues += want ? 1 : 0;
                a[static_cast<std::size_t>(clause[static_cast<std::size_t>(k)].var - 1)] =
                    want != clause[static_cast<std::size_t>(k)].negated;
            }
            const auto report = check_coloring(reduced.board, assignment_to_coloring(reduced, a));
            bool strip_ok = true;
            for (const auto& v : report.violations) {
                bool inside = true;
                for (const auto& c : v.cells) inside = inside && c.row <= 2;
                if (inside) strip_ok = false;
            }
            CAPTURE(signs, pattern);
            CHECK(strip_ok == (trues == 1));
            CHECK(report.empty() == (trues == 1));
        }
    }
}

TEST_CASE("pinning the literal circles determines the whole coloring", "[reduction][property]") {
    std::mt19937 rng(606);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 3);
        const int n = 3 + static_cast<int>(rng() % 2);
        const auto inst = oredango::testing::random_instance(rng, n, m);
        const auto reduced = reduce(inst);
        for (const auto& a : enumerate_assignments(inst)) {
            PartialColoring partial(reduced.board);
            for (const auto& lc : reduced.literal_cells) {
                partial.assign(lc.cell, literal_value(lc.literal, a) ? Color::Black : Color::White);
            }
            const auto result = enumerate_from(reduced.board, partial);
            REQUIRE(result.solutions.size() == 1);
            CHECK(result.solutions[0] == assignment_to_coloring(reduced, a));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("board size follows the layout formula", "[reduction][property]") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(std::min(6, 3 * m - 2)));
        const auto reduced = reduce(oredango::testing::random_instance(rng, n, m));
        const int me = std::max(m, 2);
        CHECK(reduced.board.rows() == 4 * me - 2 + n * std::max(0, me - 2));
        CHECK(reduced.board.cols() == 4 * n + 1);
        check_restrictions(reduced.board);
    }
}

TEST_CASE("solutions and assignments correspond on random instances", "[reduction][property]") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 3);
        const int n = 3 + static_cast<int>(rng() % 2);
        const auto inst = oredango::testing::random_instance(rng, n, m);
        const auto reduced = reduce(inst);
        const auto oracle = brute_force_assignments(inst);
        const auto result = enumerate(reduced.board);
        CHECK(result.count == oracle.size());
        std::set<Assignment> mapped;
        for (const auto& s : result.solutions) {
            const auto a = coloring_to_assignment(reduced, s);
            CHECK(satisfies(inst, a));
            CHECK(assignment_to_coloring(reduced, a) == s);
            // All literal circles of one literal agree.
            std::map<Literal, Color> seen;
            for (const auto& lc : reduced.literal_cells) {
                const auto [it, fresh] = seen.emplace(lc.literal, s.at(lc.cell));
                if (!fresh) CHECK(it->second == s.at(lc.cell));
            }
            mapped.insert(a);
        }
        CHECK(mapped == oracle);
        CHECK(verify_reduction(inst).pass);
    }
}

TEST_CASE("reduction map lists literal and readout cells", "[reduction]") {
    const auto text = write_reduction_map(reduce(example_instance()));
    CHECK(text.find("\nlit 1 1 1 2\n") != std::string::npos);
    CHECK(text.find("\nlit 2 -1 5 3\n") != std::string::npos);
    CHECK(text.find("\nvar 4 5 14\n") != std::string::npos);
}

TEST_CASE("verify_reduction at the desk-scale limits", "[reduction][property]") {
    std::mt19937 rng(9001);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const auto inst = oredango::testing::random_instance(rng, n, kMaxVerifyClauses);
        const auto report = verify_reduction(inst);
        CAPTURE(write_one_in_three(inst));
        CHECK(report.pass);
        CHECK(report.assignments == brute_force_assignments(inst).size());
    }
}
