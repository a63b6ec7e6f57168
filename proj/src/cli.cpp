#include "oredango/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "oredango/ilp.hpp"
#include "oredango/reduction.hpp"
#include "oredango/solver.hpp"
#include "oredango/textio.hpp"

namespace oredango::cli {

namespace {

// Raised for unreadable files and malformed input; maps to kUsage.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
}

template <typename F>
auto with_context(const std::string& path, F&& parse) {
    try {
        return parse(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ":\n" + e.what());
    }
}

Board load_board(const std::string& path) {
    return with_context(path, [](const std::string& text) { return parse_board(text); });
}

Coloring load_coloring(const std::string& path, const Board& board) {
    return with_context(path, [&](const std::string& text) { return parse_coloring(text, board); });
}

OneInThreeInstance load_instance(const std::string& path) {
    return with_context(path, [](const std::string& text) { return parse_one_in_three(text); });
}

struct Options {
    std::string board;
    std::string solution;
    std::string instance;
    std::vector<std::string> known;
    std::string output;
    std::string map;
    bool all = false;
    bool count = false;
    std::size_t limit = kNoCap;
    bool time = false;
};

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    try {
        const auto board = parse_board(read_file(o.board));
        std::size_t clued = 0;
        for (std::size_t s = 0; s < board.skewers().size(); ++s) {
            clued += board.skewer_clue(s) ? 1 : 0;
        }
        out << "VALID rows=" << board.rows() << " cols=" << board.cols()
            << " circles=" << board.circle_count() << " skewers=" << board.skewers().size()
            << " clued=" << clued << '\n';
        return kSuccess;
    } catch (const ParseError& e) {
        err << o.board << ":\n" << e.what() << '\n';
        if (e.structural_only()) {
            out << "INVALID\n";
            return kNegative;
        }
        return kUsage;
    }
}

int cmd_check(const Options& o, std::ostream& out, std::ostream&) {
    const auto board = load_board(o.board);
    const auto coloring = load_coloring(o.solution, board);
    const auto report = check_coloring(board, coloring);
    if (report.empty()) {
        out << "OK\n";
        return kSuccess;
    }
    for (const auto& v : report.violations) out << v.describe() << '\n';
    return kNegative;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    const auto board = load_board(o.board);
    if (o.count) {
        const auto result = count_solutions(board, o.limit);
        if (result.status == SolveStatus::CapReached) {
            out << ">=" << result.count << '\n';
        } else {
            out << result.count << '\n';
        }
        err << "nodes=" << result.nodes << '\n';
        return result.count > 0 ? kSuccess : kNegative;
    }
    const auto result = o.all ? enumerate(board, o.limit) : solve(board);
    if (result.solutions.empty()) {
        out << "UNSAT\n";
        return kNegative;
    }
    for (std::size_t k = 0; k < result.solutions.size(); ++k) {
        if (k > 0) out << '\n';
        out << write_coloring(board, result.solutions[k]);
    }
    err << "nodes=" << result.nodes << '\n';
    return kSuccess;
}

int cmd_another(const Options& o, std::ostream& out, std::ostream&) {
    const auto board = load_board(o.board);
    std::vector<Coloring> known;
    for (const auto& path : o.known) {
        known.push_back(load_coloring(path, board));
        if (!is_solution(board, known.back())) {
            throw InputError(path + ": not a solution of " + o.board);
        }
    }
    if (auto next = another_solution(board, known)) {
        out << write_coloring(board, *next);
        return kSuccess;
    }
    out << "NONE\n";
    return kNegative;
}

int cmd_lp(const Options& o, std::ostream& out, std::ostream&) {
    const auto text = export_lp(build_model(load_board(o.board)));
    if (o.output.empty()) {
        out << text;
    } else {
        write_file(o.output, text);
    }
    return kSuccess;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream&) {
    const auto reduced = reduce(load_instance(o.instance));
    const auto text = write_board(reduced.board);
    if (o.output.empty()) {
        out << text;
    } else {
        write_file(o.output, text);
    }
    if (!o.map.empty()) write_file(o.map, write_reduction_map(reduced));
    return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const auto report = verify_reduction(load_instance(o.instance));
    out << report.summary() << '\n';
    for (const auto& f : report.failures) err << f << '\n';
    return report.pass ? kSuccess : kNegative;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Oredango solver, 0-1 modeler and 1-in-3SAT reduction toolkit", "oredango"};
    app.require_subcommand(1);
    Options o;
    const auto add_time = [&o](CLI::App* sub) {
        sub->add_flag("--time", o.time, "Report wall-clock milliseconds on stderr");
    };

    auto* validate = app.add_subcommand("validate", "Check a board file for structural errors");
    validate->add_option("board", o.board, "Board file (.odg)")->required();
    add_time(validate);

    auto* check = app.add_subcommand("check", "List rule violations of a coloring");
    check->add_option("board", o.board, "Board file (.odg)")->required();
    check->add_option("solution", o.solution, "Coloring file (.sol), '-' for stdin")->required();
    add_time(check);

    auto* solve_cmd = app.add_subcommand("solve", "Find, enumerate or count solutions");
    solve_cmd->add_option("board", o.board, "Board file (.odg)")->required();
    auto* all = solve_cmd->add_flag("--all", o.all, "Print every solution");
    solve_cmd->add_flag("--count", o.count, "Print the number of solutions")->excludes(all);
    solve_cmd->add_option("--limit", o.limit, "Stop after K solutions")->check(CLI::PositiveNumber);
    add_time(solve_cmd);

    auto* another = app.add_subcommand("another", "Find a solution not among the given ones");
    another->add_option("board", o.board, "Board file (.odg)")->required();
    another->add_option("known", o.known, "Known solutions (.sol)");
    add_time(another);

    auto* lp = app.add_subcommand("lp", "Export the 0-1 model in LP format");
    lp->add_option("board", o.board, "Board file (.odg)")->required();
    lp->add_option("-o", o.output, "Output path (default stdout)");
    add_time(lp);

    auto* reduce_cmd = app.add_subcommand("reduce", "Build a board from a 1-in-3SAT instance");
    reduce_cmd->add_option("instance", o.instance, "Instance file (.c13)")->required();
    reduce_cmd->add_option("-o", o.output, "Board output path (default stdout)");
    reduce_cmd->add_option("--map", o.map, "Write the literal/readout cell map here");
    add_time(reduce_cmd);

    auto* verify = app.add_subcommand("verify-reduction",
                                      "Exhaustively check the reduction on a small instance");
    verify->add_option("instance", o.instance, "Instance file (.c13)")->required();
    add_time(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kUsage;
    try {
        if (validate->parsed()) code = cmd_validate(o, out, err);
        else if (check->parsed()) code = cmd_check(o, out, err);
        else if (solve_cmd->parsed()) code = cmd_solve(o, out, err);
        else if (another->parsed()) code = cmd_another(o, out, err);
        else if (lp->parsed()) code = cmd_lp(o, out, err);
        else if (reduce_cmd->parsed()) code = cmd_reduce(o, out, err);
        else if (verify->parsed()) code = cmd_verify(o, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        code = kUsage;
    } catch (const ReductionError& e) {
        err << "error: " << e.what() << '\n';
        code = kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        code = kUsage;
    }
    if (o.time) {
        const auto elapsed = std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start);
        err << "time_ms=" << elapsed.count() << '\n';
    }
    return code;
}

}  // namespace oredango::cli
