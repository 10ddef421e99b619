#include "ekm/formula.hpp"

#include <algorithm>
#include <sstream>

namespace ekm {

void validate_formula(const Formula& f) {
    if (f.num_vars < 0) throw FormulaError("negative variable count", 0);
    std::vector<int> occurrences(f.num_vars, 0);
    for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
        const Clause& c = f.clauses[ci];
        for (int v : c.vars) {
            if (v < 0 || v >= f.num_vars)
                throw FormulaError("variable index out of range in clause " +
                                       std::to_string(ci + 1), 0);
            occurrences[v]++;
        }
        if (c.vars[0] == c.vars[1] || c.vars[0] == c.vars[2] || c.vars[1] == c.vars[2])
            throw FormulaError("duplicate variable in clause " + std::to_string(ci + 1), 0);
    }
    for (int v = 0; v < f.num_vars; ++v)
        if (occurrences[v] != 3)
            throw FormulaError("variable " + std::to_string(v + 1) + " occurs " +
                                   std::to_string(occurrences[v]) + " times, expected 3",
                               0);
}

Formula parse_formula(const std::string& text) {
    Formula f;
    bool saw_header = false;
    int declared_clauses = -1;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "p") {
            if (saw_header) throw FormulaError("duplicate header", line_no);
            std::string fmt;
            ls >> fmt;
            if (fmt != "m1in3") throw FormulaError("expected format tag m1in3", line_no);
            if (!(ls >> f.num_vars >> declared_clauses) || f.num_vars < 0 || declared_clauses < 0)
                throw FormulaError("malformed header counts", line_no);
            saw_header = true;
            continue;
        }
        if (tok != "+" && tok != "-")
            throw FormulaError("expected clause polarity '+' or '-', got '" + tok + "'", line_no);
        if (!saw_header) throw FormulaError("clause before header", line_no);
        Clause c;
        c.positive = (tok == "+");
        for (int i = 0; i < 3; ++i) {
            int v;
            if (!(ls >> v)) throw FormulaError("clause needs exactly 3 variable indices", line_no);
            if (v < 1 || v > f.num_vars)
                throw FormulaError("variable index " + std::to_string(v) + " out of range", line_no);
            c.vars[i] = v - 1;
        }
        int extra;
        if (ls >> extra) throw FormulaError("clause has more than 3 literals", line_no);
        if (c.vars[0] == c.vars[1] || c.vars[0] == c.vars[2] || c.vars[1] == c.vars[2])
            throw FormulaError("duplicate variable in clause", line_no);
        f.clauses.push_back(c);
    }
    if (!saw_header) throw FormulaError("missing 'p m1in3' header", 0);
    if (declared_clauses != static_cast<int>(f.clauses.size()))
        throw FormulaError("header declares " + std::to_string(declared_clauses) +
                               " clauses, found " + std::to_string(f.clauses.size()),
                           0);
    validate_formula(f);
    return f;
}

std::string serialize_formula(const Formula& f) {
    std::ostringstream os;
    os << "p m1in3 " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const Clause& c : f.clauses) {
        std::array<int, 3> vs = c.vars;
        std::sort(vs.begin(), vs.end());
        os << (c.positive ? "+" : "-");
        for (int v : vs) os << " " << v + 1;
        os << "\n";
    }
    return os.str();
}

bool clause_satisfied(const Clause& c, const Assignment& a) {
    int true_literals = 0;
    for (int v : c.vars) {
        bool val = a[v];
        if (!c.positive) val = !val;
        true_literals += val ? 1 : 0;
    }
    return true_literals == 1;
}

bool satisfies(const Formula& f, const Assignment& a) {
    if (static_cast<int>(a.size()) != f.num_vars) return false;
    for (const Clause& c : f.clauses)
        if (!clause_satisfied(c, a)) return false;
    return true;
}

std::optional<Assignment> one_in_three_oracle(const Formula& f, int limit) {
    if (f.num_vars > limit)
        throw std::invalid_argument("one_in_three_oracle: instance exceeds exhaustive limit");
    const int n = f.num_vars;
    // Counting upward with variable 1 as the most significant bit yields the
    // lexicographically smallest witness first (false < true).
    for (uint64_t bits = 0; bits < (1ull << n); ++bits) {
        Assignment a(n);
        for (int v = 0; v < n; ++v) a[v] = (bits >> (n - 1 - v)) & 1;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

IncidenceGraph incidence_graph(const Formula& f) {
    validate_formula(f);
    IncidenceGraph g;
    g.num_vars = f.num_vars;
    g.num_clauses = static_cast<int>(f.clauses.size());
    for (int ci = 0; ci < g.num_clauses; ++ci)
        for (int v : f.clauses[ci].vars)
            g.edges.emplace_back(v, g.num_vars + ci);
    return g;
}

}  // namespace ekm
