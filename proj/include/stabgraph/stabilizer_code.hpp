#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stabgraph/pauli.hpp"

namespace stabgraph {

/// An [[n,k,d]] binary stabilizer code: n-k generators plus k logical X/Z pairs.
/// claimed_distance is metadata only; distance behavior is verified elsewhere.
struct StabilizerCode {
    int n = 0;
    int k = 0;
    std::vector<PauliOperator> generators;
    std::vector<PauliOperator> logical_x;
    std::vector<PauliOperator> logical_z;
    std::optional<int> claimed_distance;
};

struct ValidationIssue {
    std::string what;
    int i = -1;  // offending operator indices where applicable
    int j = -1;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

/// Checks every StabilizerCode invariant: generator commutation and
/// independence, logical commutation with the stabilizer, and the
/// X̄_i/Z̄_j symplectic pairing.
ValidationReport validate(const StabilizerCode& code);

struct CwsRealization {
    StabilizerMatrix codeword_stabilizer;     // n generators: S_1..S_{n-k}, then logical Zs
    std::vector<PauliOperator> word_operators;  // 2^k operators, index v, bit l of v = X̄_{l+1}
    std::vector<GateOp> clifford_record;
    bool standard_form = false;
};

/// Realizes a validated stabilizer code as a CWS code.
CwsRealization realize_cws(const StabilizerCode& code);

bool compute_standard_form(const StabilizerMatrix& codeword_stabilizer,
                           const std::vector<PauliOperator>& word_operators);

/// CWS classical error map: e = +-Z^v X^u maps to v XOR (sum of rows of gamma
/// selected by u).
BitVector classical_error_map(const PauliOperator& e, const BitMatrix& gamma);

/// Code-definition text: header "n k", then n-k generator lines, k X̄ lines,
/// k Z̄ lines, each in Pauli text syntax. Blank lines and '#' comments ignored.
StabilizerCode parse_code_file(std::istream& in);
StabilizerCode load_code_file(const std::string& path);
std::string code_to_text(const StabilizerCode& code);

}  // namespace stabgraph
