#ifndef MKP_LINEAR_MODEL_HPP
#define MKP_LINEAR_MODEL_HPP

#include <map>
#include <string>
#include <vector>

namespace mkp {

enum class VarKind { Binary, Continuous };
enum class Sense { LE, GE, EQ };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Binary;
    double lower = 0.0;
    double upper = 1.0;

    bool operator==(const Variable&) const = default;
};

struct LinRow {
    std::string name;
    std::vector<std::pair<int, double>> terms;  // (variable index, coefficient), index-sorted
    Sense sense = Sense::LE;
    double rhs = 0.0;

    bool operator==(const LinRow&) const = default;
};

/// Solver-agnostic ILP/LP intermediate representation. Variable and row
/// order is part of the value: emitters walk it verbatim.
struct LinearModel {
    std::vector<Variable> variables;
    std::vector<std::pair<int, double>> objective;  // index-sorted sparse row
    double objective_offset = 0.0;
    std::vector<LinRow> rows;

    int add_variable(const std::string& name, VarKind kind, double lower = 0.0, double upper = 1.0);
    int variable_index(const std::string& name) const;  // -1 when absent

    bool operator==(const LinearModel&) const = default;

private:
    std::map<std::string, int> index_;
};

/// Same rows with every binary turned into a continuous [0, 1] variable.
LinearModel relax_to_continuous(const LinearModel& m);

/// Deterministic LP text (sections Minimize / Subject To / Bounds /
/// Binaries / End). The objective constant is carried in a leading
/// comment since the format has no native slot for it.
std::string emit_lp(const LinearModel& m);

/// Reads back the dialect emit_lp writes. Binary variables are ordered by
/// the Binaries section, continuous ones by the Bounds section.
LinearModel parse_lp(const std::string& text);

}  // namespace mkp

#endif
