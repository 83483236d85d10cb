#ifndef DBGP_DBN_HPP
#define DBGP_DBN_HPP

#include <string>
#include <utility>
#include <vector>

namespace dbgp {

struct Variable {
    std::string name;
    std::vector<std::string> states;

    bool operator==(const Variable&) const = default;
};

// Reference to a parent variable. prev = true means the parent lives in the
// preceding time slice (an inter-slice edge); in documents such parents are
// written "<name>@prev".
struct ParentRef {
    int var = -1;
    bool prev = false;

    bool operator==(const ParentRef&) const = default;
};

// Conditional probability table of one child variable. Rows are indexed by
// the parent configuration in lexicographic order with the first parent in
// `parents` varying slowest.
struct Cpt {
    int child = -1;
    std::vector<ParentRef> parents;
    std::vector<std::vector<double>> rows;

    bool operator==(const Cpt&) const = default;
};

struct Dbn {
    std::vector<Variable> variables;
    double delta_t = 1.0;
    std::vector<std::pair<int, int>> intra_edges; // (parent, child) within a slice
    std::vector<std::pair<int, int>> inter_edges; // (parent at k-1, child at k)
    // slices[k][i] is the CPT of variable i at slice k. Slice 0 conditions on
    // intra-slice parents only; slices >= 1 on intra plus inter parents.
    std::vector<std::vector<Cpt>> slices;

    int var_count() const { return static_cast<int>(variables.size()); }
    int horizon() const { return static_cast<int>(slices.size()) - 1; } // K
    double t_end() const { return static_cast<double>(slices.size()) * delta_t; }
    int state_count(int var) const { return static_cast<int>(variables[var].states.size()); }

    // Index of a named variable, -1 if absent.
    int find_variable(const std::string& name) const;

    // Names of this variable's intra (and, for slice_kind >= 1, inter)
    // parents in declared edge order.
    std::vector<ParentRef> implied_parents(int child, int slice) const;

    bool operator==(const Dbn&) const = default;
};

// Row index of a parent configuration (one state index per parent, in CPT
// parent order, first parent slowest).
int cpt_row_index(const Dbn& dbn, const Cpt& cpt, const std::vector<int>& config);

// All invariant violations, empty iff the Dbn is valid. Violations are data,
// not failures.
std::vector<std::string> validate_dbn(const Dbn& dbn);

// Parses a DBN document (JSON). Throws std::runtime_error naming every
// violation if the document is malformed or the resulting network invalid.
// Rows within the 1e-9 stochasticity tolerance are renormalized.
Dbn parse_dbn(const std::string& text);
Dbn load_dbn(const std::string& path);

// Structural parse without invariant checking; what `validate` runs so it
// can report violations as data instead of failing.
Dbn parse_dbn_unvalidated(const std::string& text);

// Deterministic document serialization; parse_dbn(serialize_dbn(d)) == d for
// any valid d (probabilities are emitted with round-trip precision).
std::string serialize_dbn(const Dbn& dbn);

} // namespace dbgp

#endif
