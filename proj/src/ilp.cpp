#include "oredango/ilp.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "oredango/cardinality_search.hpp"

namespace oredango {

namespace {

std::string var_name(CellCoord c) {
    return "x_" + std::to_string(c.row) + "_" + std::to_string(c.col);
}

void add_windows(LinearModel& model, const std::map<CellCoord, std::size_t>& var_of,
                 const std::vector<std::vector<Triple>>& families, const std::string& prefix) {
    for (std::size_t f = 0; f < families.size(); ++f) {
        for (std::size_t w = 0; w < families[f].size(); ++w) {
            LinearConstraint con;
            con.name = prefix + std::to_string(f + 1) + "_" + std::to_string(w + 1);
            for (const auto& c : families[f][w]) con.terms.push_back({1, var_of.at(c)});
            con.lower = 1;
            con.upper = 2;
            model.constraints.push_back(std::move(con));
        }
    }
}

// Keeps LP rows short; some readers cap line length.
constexpr std::size_t kTermsPerLine = 8;

void write_terms(std::ostream& os, const LinearModel& model, const std::vector<Term>& terms) {
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k > 0) {
            if (k % kTermsPerLine == 0) os << "\n   ";
            os << (terms[k].coefficient < 0 ? " - " : " + ");
        } else if (terms[k].coefficient < 0) {
            os << "- ";
        }
        const int mag = terms[k].coefficient < 0 ? -terms[k].coefficient : terms[k].coefficient;
        if (mag != 1) os << mag << ' ';
        os << model.variables.at(terms[k].variable).name;
    }
}

search::CardinalitySearch model_search(const LinearModel& model) {
    std::vector<search::CardinalityConstraint> cons;
    cons.reserve(model.constraints.size());
    for (const auto& con : model.constraints) {
        search::CardinalityConstraint c;
        for (const auto& t : con.terms) {
            if (t.coefficient != 1) {
                throw std::invalid_argument("constraint " + con.name +
                                            " has a non-unit coefficient");
            }
            if (t.variable >= model.variables.size()) {
                throw std::invalid_argument("constraint " + con.name +
                                            " references an undeclared variable");
            }
            c.vars.push_back(t.variable);
        }
        c.lo = con.lower.value_or(0);
        c.hi = con.upper.value_or(static_cast<int>(c.vars.size()));
        cons.push_back(std::move(c));
    }
    return search::CardinalitySearch(model.variables.size(), std::move(cons));
}

}  // namespace

LinearModel build_model(const Board& board) {
    LinearModel model;
    std::map<CellCoord, std::size_t> var_of;
    for (const auto& [at, circle] : board.circles()) {
        var_of.emplace(at, model.variables.size());
        model.variables.push_back({var_name(at), at});
    }
    model.objective.assign(model.variables.size(), 1);

    const auto& skewers = board.skewers();
    for (std::size_t s = 0; s < skewers.size(); ++s) {
        const auto clue = board.skewer_clue(s);
        if (!clue) continue;
        LinearConstraint con;
        con.name = "sk" + std::to_string(s + 1);
        for (const auto& c : skewers[s].path()) con.terms.push_back({1, var_of.at(c)});
        con.lower = *clue;
        con.upper = *clue;
        model.constraints.push_back(std::move(con));
    }
    const auto& idx = board.triples();
    add_windows(model, var_of, idx.skewer_triples, "tb");
    add_windows(model, var_of, idx.row_triples, "tr");
    add_windows(model, var_of, idx.col_triples, "tc");
    return model;
}

std::string export_lp(const LinearModel& model) {
    std::ostringstream os;
    os << "\\ Oredango 0-1 model: " << model.variables.size() << " binaries, "
       << model.constraints.size() << " constraints\n";
    os << "Minimize\n obj:";
    std::vector<Term> objective;
    for (std::size_t v = 0; v < model.objective.size(); ++v) {
        if (model.objective[v] != 0) objective.push_back({model.objective[v], v});
    }
    if (!objective.empty()) {
        os << ' ';
        write_terms(os, model, objective);
    }
    os << '\n';
    if (!model.constraints.empty()) {
        os << "Subject To\n";
        for (const auto& con : model.constraints) {
            if (con.is_equality()) {
                os << ' ' << con.name << ": ";
                write_terms(os, model, con.terms);
                os << " = " << *con.lower << '\n';
                continue;
            }
            if (con.lower) {
                os << ' ' << con.name << "_lo: ";
                write_terms(os, model, con.terms);
                os << " >= " << *con.lower << '\n';
            }
            if (con.upper) {
                os << ' ' << con.name << "_hi: ";
                write_terms(os, model, con.terms);
                os << " <= " << *con.upper << '\n';
            }
        }
    }
    if (!model.variables.empty()) {
        os << "Binaries\n";
        for (std::size_t v = 0; v < model.variables.size(); ++v) {
            os << ' ' << model.variables[v].name;
            if (v % kTermsPerLine == kTermsPerLine - 1 || v + 1 == model.variables.size()) {
                os << '\n';
            }
        }
    }
    os << "End\n";
    return os.str();
}

std::vector<ModelAssignment> enumerate_model(const LinearModel& model, std::size_t cap) {
    std::vector<ModelAssignment> out;
    if (cap == 0) return out;
    const auto engine = model_search(model);
    engine.search(std::vector<search::Value>(model.variables.size(), search::kUnassigned),
                  [&](std::span<const search::Value> values) {
                      out.emplace_back(values.begin(), values.end());
                      return out.size() < cap;
                  });
    return out;
}

std::optional<ModelAssignment> solve_model(const LinearModel& model) {
    auto found = enumerate_model(model, 1);
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

Coloring model_to_coloring(const LinearModel& model, const ModelAssignment& assignment,
                           const Board& board) {
    if (assignment.size() != model.variables.size()) {
        throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                    " values for " + std::to_string(model.variables.size()) +
                                    " variables");
    }
    std::vector<std::pair<CellCoord, Color>> entries;
    entries.reserve(assignment.size());
    for (std::size_t v = 0; v < assignment.size(); ++v) {
        if (assignment[v] > 1) {
            throw std::invalid_argument("assignment value for " + model.variables[v].name +
                                        " is not 0/1");
        }
        entries.emplace_back(model.variables[v].cell,
                             assignment[v] == 1 ? Color::Black : Color::White);
    }
    Coloring coloring(std::move(entries));
    if (!covers_board(board, coloring)) {
        throw std::invalid_argument("model variables do not match the board's circles");
    }
    return coloring;
}

}  // namespace oredango
