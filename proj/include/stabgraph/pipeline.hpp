#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stabgraph/kl_oracle.hpp"

#include <nlohmann/json_fwd.hpp>

namespace stabgraph {

struct PipelineOptions {
    /// Cap on distinct graphs visited while hunting a usable LC representative.
    std::size_t orbit_bound = 4096;
    /// Prefer a representative on which all three attachment conditions hold;
    /// fall back to the first singular one (structural gate) otherwise.
    bool prefer_all_conditions = true;
    int oracle_cap = kDefaultOracleCap;
    int threads = 1;

    friend bool operator==(const PipelineOptions&, const PipelineOptions&) = default;
};

/// Everything one conversion run produces, replayable bit-exactly from
/// (code, options).
struct PipelineRecord {
    StabilizerCode code;
    PipelineOptions options;

    BitMatrix cws_binary;  // H_{S_CWS} as (Z|X)
    bool cws_standard_form = false;

    std::vector<int> hadamard_set;
    std::vector<int> diagonal_corrections;
    std::vector<int> sign_fixes;
    std::vector<GateOp> clifford_record;  // complete local-Clifford history

    BitMatrix gamma_initial;  // adjacency straight out of standardization
    std::vector<int> lc_sequence;
    BitMatrix gamma;  // final adjacency

    BitMatrix x_support;   // X parts of the code stabilizer in the graph frame
    BitMatrix input_block;  // derived B†
    AttachmentReport conditions;
    bool conditions_enforced = false;

    std::vector<PauliOperator> code_stabilizer;  // graph frame, exact phases
    std::vector<PauliOperator> word_operators;   // graph frame, exact phases

    CoincidenceMatrix xi;
};

/// Steps 1-3: CWS realization, standardization, singular representative
/// selection, input attachment.
PipelineRecord run_pipeline(const StabilizerCode& code, const PipelineOptions& options = {});

/// Codespace of a pipeline record (graph state + tracked word operators).
CodeSpace record_codespace(const PipelineRecord& record);

nlohmann::json record_to_json(const PipelineRecord& record);
PipelineRecord record_from_json(const nlohmann::json& j);

nlohmann::json detection_report_to_json(const DetectionReport& report);
nlohmann::json agreement_report_to_json(const AgreementReport& report);

/// "k n" header plus n+k rows of 0/1.
std::string xi_to_matrix_text(const CoincidenceMatrix& xi);
CoincidenceMatrix xi_from_matrix_text(std::istream& in);
CoincidenceMatrix load_xi_file(const std::string& path);

/// DOT export: input vertices as squares labeled 0, 0', 0'', outputs as
/// circles labeled 1..n.
std::string xi_to_dot(const CoincidenceMatrix& xi);

std::string input_vertex_label(int i);

}  // namespace stabgraph
