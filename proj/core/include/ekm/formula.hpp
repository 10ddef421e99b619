#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ekm {

struct FormulaError : std::runtime_error {
    int line;
    FormulaError(const std::string& what, int line_no)
        : std::runtime_error(what + (line_no > 0 ? " (line " + std::to_string(line_no) + ")" : "")),
          line(line_no) {}
};

// One clause of a monotone formula: all-positive or all-negative over three
// distinct variables. Variable indices are 0-based in memory, 1-based in files.
struct Clause {
    bool positive = true;
    std::array<int, 3> vars{};
};

// A cubic planar monotone 1-in-3 SAT instance: every variable occurs in
// exactly three clauses, so the clause count equals the variable count.
// Planarity is a property of the incidence graph and is checked by the
// embedding stage, not here.
struct Formula {
    int num_vars = 0;
    std::vector<Clause> clauses;
};

using Assignment = std::vector<bool>;

// Bipartite variable/clause adjacency. Nodes 0..n-1 are variables,
// n..n+m-1 are clauses.
struct IncidenceGraph {
    int num_vars = 0;
    int num_clauses = 0;
    std::vector<std::pair<int, int>> edges;  // (variable node, clause node)

    int node_count() const { return num_vars + num_clauses; }
};

// Structural validation: distinct vars per clause, indices in range, every
// variable in exactly three clauses. Throws FormulaError naming the rule.
void validate_formula(const Formula& f);

Formula parse_formula(const std::string& text);
std::string serialize_formula(const Formula& f);  // byte-stable, sorted in-clause

// Exactly-one-true (positive clause) / exactly-one-false (negative clause).
bool clause_satisfied(const Clause& c, const Assignment& a);
bool satisfies(const Formula& f, const Assignment& a);

// Lexicographically smallest satisfying assignment with false < true and
// variable 1 most significant, or nullopt. Exhaustive up to `limit` variables.
std::optional<Assignment> one_in_three_oracle(const Formula& f, int limit = 24);

IncidenceGraph incidence_graph(const Formula& f);

}  // namespace ekm
