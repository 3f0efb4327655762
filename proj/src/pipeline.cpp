#include "stabgraph/pipeline.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace stabgraph {

namespace {

struct FrameState {
    Graph graph;
    std::vector<int> seq;
    StabilizerMatrix graph_gens;
    std::vector<PauliOperator> stab;   // code stabilizer, current frame
    std::vector<PauliOperator> words;  // word operators, current frame
    std::vector<GateOp> suffix;        // gates applied after standardization
};

std::vector<PauliOperator> conjugate_all(const std::vector<PauliOperator>& ops,
                                         const std::vector<GateOp>& circ) {
    std::vector<PauliOperator> out;
    out.reserve(ops.size());
    for (const auto& p : ops)
        out.push_back(conjugate(p, circ));
    return out;
}

// One LC step applied physically: the local unitary, then re-canonicalization
// so the generators are exactly +X^j Z^{Gamma'_j} again.
FrameState lc_step(const FrameState& s, int v) {
    FrameState out;
    std::vector<GateOp> circ = lc_unitary(s.graph, v);
    StabilizerMatrix rotated = apply_local_clifford(s.graph_gens, circ);
    GraphFormResult canon = graph_canonicalize(rotated);
    if (!canon.diagonal.empty())
        throw Error("internal: LC unitary produced diagonal entries");
    if (canon.graph != local_complement(s.graph, v))
        throw Error("internal: LC unitary does not implement local complementation");
    std::vector<GateOp> full = circ;
    full.insert(full.end(), canon.applied.begin(), canon.applied.end());
    out.graph = canon.graph;
    out.seq = s.seq;
    out.seq.push_back(v);
    out.graph_gens = canon.generators;
    out.stab = conjugate_all(s.stab, full);
    out.words = conjugate_all(s.words, full);
    out.suffix = s.suffix;
    out.suffix.insert(out.suffix.end(), full.begin(), full.end());
    return out;
}

// X parts of the tracked code stabilizer; asserts each element still lies in
// the graph group (z = Gamma x, real phase).
BitMatrix frame_x_support(const FrameState& s, int n, int k) {
    BitMatrix xs(n - k, n);
    for (int i = 0; i < n - k; ++i) {
        const PauliOperator& p = s.stab[i];
        if (p.phase_exponent() % 2 != 0)
            throw Error("internal: tracked stabilizer acquired an imaginary phase");
        if (p.z() != s.graph.adjacency() * p.x())
            throw Error("internal: tracked stabilizer left the graph group");
        xs.set_row(i, p.x());
    }
    return xs;
}

}  // namespace

PipelineRecord run_pipeline(const StabilizerCode& code, const PipelineOptions& options) {
    PipelineRecord rec;
    rec.code = code;
    rec.options = options;

    CwsRealization cws = realize_cws(code);
    rec.cws_binary = cws.codeword_stabilizer.binary_form();
    rec.cws_standard_form = cws.standard_form;

    StandardizationResult sr = standardize(cws);
    rec.hadamard_set = sr.hadamard_set;
    rec.diagonal_corrections = sr.diagonal_corrections;
    rec.sign_fixes = sr.sign_fixes;
    rec.gamma_initial = sr.graph.adjacency();

    FrameState start;
    start.graph = sr.graph;
    start.graph_gens = sr.graph_generators;
    start.stab = conjugate_all(code.generators, sr.post_clifford);
    start.words = conjugate_all(cws.word_operators, sr.post_clifford);

    int n = code.n, k = code.k;

    // Hunt for a singular LC representative, preferring one on which
    // attach_inputs passes all three attachment conditions. Deterministic:
    // shortest LC sequence first, lowest vertex first.
    std::optional<FrameState> chosen_state;
    std::optional<FrameState> first_singular;
    BitMatrix chosen_block;
    std::optional<CoincidenceMatrix> chosen_xi;

    auto try_candidate = [&](const FrameState& s) -> bool {
        if (rank(s.graph.adjacency()) >= static_cast<std::size_t>(n))
            return false;
        if (!first_singular)
            first_singular = s;
        BitMatrix xs = frame_x_support(s, n, k);
        BitMatrix block = derive_input_block(s.graph, xs);
        if (!options.prefer_all_conditions) {
            chosen_state = s;
            chosen_block = block;
            chosen_xi = attach_inputs(s.graph, block, AttachPolicy::structural);
            rec.conditions_enforced = false;
            return true;
        }
        try {
            CoincidenceMatrix xi = attach_inputs(s.graph, block, AttachPolicy::enforce_all);
            chosen_state = s;
            chosen_block = block;
            chosen_xi = xi;
            rec.conditions_enforced = true;
            return true;
        } catch (const ConditionError&) {
            return false;
        }
    };

    bool done = false;
    if (k == 0) {
        // Stabilizer state: no inputs to attach, any graph will do.
        chosen_state = start;
        chosen_block = BitMatrix(0, n);
        chosen_xi = attach_inputs(start.graph, chosen_block, AttachPolicy::structural);
        rec.conditions_enforced = true;  // vacuous
        done = true;
    } else {
        done = try_candidate(start);
    }
    if (!done) {
        std::unordered_set<std::string> seen;
        seen.insert(start.graph.key());
        std::deque<FrameState> queue;
        queue.push_back(start);
        while (!queue.empty() && !done && seen.size() < options.orbit_bound) {
            FrameState cur = std::move(queue.front());
            queue.pop_front();
            for (int v = 0; v < n && !done; ++v) {
                Graph next = local_complement(cur.graph, v);
                if (seen.count(next.key()))
                    continue;
                FrameState ns = lc_step(cur, v);
                seen.insert(ns.graph.key());
                done = try_candidate(ns);
                if (!done)
                    queue.push_back(std::move(ns));
                if (seen.size() >= options.orbit_bound)
                    break;
            }
        }
        if (!done) {
            // No representative satisfies all three conditions (the [[8,3,3]]
            // code provably has none); fall back to the first singular one.
            if (!first_singular)
                throw SearchExhaustedError(options.orbit_bound,
                                           "no singular LC representative found");
            chosen_state = *first_singular;
            BitMatrix xs = frame_x_support(*chosen_state, n, k);
            chosen_block = derive_input_block(chosen_state->graph, xs);
            chosen_xi = attach_inputs(chosen_state->graph, chosen_block,
                                      AttachPolicy::structural);
            rec.conditions_enforced = false;
        }
    }

    const FrameState& sel = *chosen_state;
    rec.lc_sequence = sel.seq;
    rec.gamma = sel.graph.adjacency();
    rec.x_support = frame_x_support(sel, n, k);
    rec.input_block = chosen_block;
    rec.xi = *chosen_xi;
    rec.conditions = rec.xi.report();
    rec.code_stabilizer = sel.stab;
    rec.word_operators = sel.words;
    rec.clifford_record = sr.post_clifford;
    rec.clifford_record.insert(rec.clifford_record.end(), sel.suffix.begin(), sel.suffix.end());
    return rec;
}

CodeSpace record_codespace(const PipelineRecord& record) {
    return codespace_from_cws(Graph(record.gamma), record.word_operators, {},
                              record.options.oracle_cap);
}

namespace {

nlohmann::json matrix_json(const BitMatrix& m) {
    nlohmann::json j = nlohmann::json::object();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = m.to_strings();
    return j;
}

BitMatrix matrix_from_json(const nlohmann::json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    auto data = j.at("data").get<std::vector<std::string>>();
    if (data.size() != rows)
        throw FormatError("matrix row count mismatch in JSON");
    if (rows == 0)
        return BitMatrix(0, cols);
    BitMatrix m = BitMatrix::from_strings(data);
    if (m.cols() != cols)
        throw FormatError("matrix column count mismatch in JSON");
    return m;
}

nlohmann::json gates_json(const std::vector<GateOp>& ops) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& op : ops) {
        nlohmann::json g = nlohmann::json::array();
        g.push_back(gate_name(op.gate));
        g.push_back(op.a);
        if (op.b >= 0)
            g.push_back(op.b);
        arr.push_back(g);
    }
    return arr;
}

std::vector<GateOp> gates_from_json(const nlohmann::json& arr) {
    std::vector<GateOp> out;
    for (const auto& g : arr) {
        GateOp op;
        op.gate = gate_from_name(g.at(0).get<std::string>());
        op.a = g.at(1).get<int>();
        op.b = g.size() > 2 ? g.at(2).get<int>() : -1;
        out.push_back(op);
    }
    return out;
}

nlohmann::json paulis_json(const std::vector<PauliOperator>& ops) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : ops)
        arr.push_back(p.to_string());
    return arr;
}

std::vector<PauliOperator> paulis_from_json(const nlohmann::json& arr, int n) {
    std::vector<PauliOperator> out;
    for (const auto& s : arr)
        out.push_back(PauliOperator::parse(s.get<std::string>(), n));
    return out;
}

}  // namespace

nlohmann::json record_to_json(const PipelineRecord& r) {
    nlohmann::json j;
    j["schema"] = "stabgraph-record";
    j["version"] = 1;
    j["code"]["n"] = r.code.n;
    j["code"]["k"] = r.code.k;
    j["code"]["generators"] = paulis_json(r.code.generators);
    j["code"]["logical_x"] = paulis_json(r.code.logical_x);
    j["code"]["logical_z"] = paulis_json(r.code.logical_z);
    if (r.code.claimed_distance)
        j["code"]["claimed_distance"] = *r.code.claimed_distance;
    j["options"]["orbit_bound"] = r.options.orbit_bound;
    j["options"]["prefer_all_conditions"] = r.options.prefer_all_conditions;
    j["options"]["oracle_cap"] = r.options.oracle_cap;
    j["cws_binary"] = matrix_json(r.cws_binary);
    j["cws_standard_form"] = r.cws_standard_form;
    j["hadamard_set"] = r.hadamard_set;
    j["diagonal_corrections"] = r.diagonal_corrections;
    j["sign_fixes"] = r.sign_fixes;
    j["clifford_record"] = gates_json(r.clifford_record);
    j["gamma_initial"] = matrix_json(r.gamma_initial);
    j["lc_sequence"] = r.lc_sequence;
    j["gamma"] = matrix_json(r.gamma);
    j["x_support"] = matrix_json(r.x_support);
    j["input_block"] = matrix_json(r.input_block);
    j["conditions"]["i"] = r.conditions.cond_i;
    j["conditions"]["ii"] = r.conditions.cond_ii;
    j["conditions"]["iii"] = r.conditions.cond_iii;
    if (r.conditions.witness_vb)
        j["conditions"]["witness"] = r.conditions.witness_vb->to_string();
    j["conditions_enforced"] = r.conditions_enforced;
    j["code_stabilizer"] = paulis_json(r.code_stabilizer);
    j["word_operators"] = paulis_json(r.word_operators);
    j["xi"]["k"] = r.xi.k();
    j["xi"]["matrix"] = matrix_json(r.xi.xi());
    return j;
}

PipelineRecord record_from_json(const nlohmann::json& j) {
    if (j.value("schema", "") != "stabgraph-record")
        throw FormatError("not a stabgraph record (missing schema tag)");
    PipelineRecord r;
    r.code.n = j.at("code").at("n").get<int>();
    r.code.k = j.at("code").at("k").get<int>();
    r.code.generators = paulis_from_json(j.at("code").at("generators"), r.code.n);
    r.code.logical_x = paulis_from_json(j.at("code").at("logical_x"), r.code.n);
    r.code.logical_z = paulis_from_json(j.at("code").at("logical_z"), r.code.n);
    if (j.at("code").contains("claimed_distance"))
        r.code.claimed_distance = j.at("code").at("claimed_distance").get<int>();
    r.options.orbit_bound = j.at("options").at("orbit_bound").get<std::size_t>();
    r.options.prefer_all_conditions = j.at("options").at("prefer_all_conditions").get<bool>();
    r.options.oracle_cap = j.at("options").at("oracle_cap").get<int>();
    r.cws_binary = matrix_from_json(j.at("cws_binary"));
    r.cws_standard_form = j.at("cws_standard_form").get<bool>();
    r.hadamard_set = j.at("hadamard_set").get<std::vector<int>>();
    r.diagonal_corrections = j.at("diagonal_corrections").get<std::vector<int>>();
    r.sign_fixes = j.at("sign_fixes").get<std::vector<int>>();
    r.clifford_record = gates_from_json(j.at("clifford_record"));
    r.gamma_initial = matrix_from_json(j.at("gamma_initial"));
    r.lc_sequence = j.at("lc_sequence").get<std::vector<int>>();
    r.gamma = matrix_from_json(j.at("gamma"));
    r.x_support = matrix_from_json(j.at("x_support"));
    r.input_block = matrix_from_json(j.at("input_block"));
    r.conditions.cond_i = j.at("conditions").at("i").get<bool>();
    r.conditions.cond_ii = j.at("conditions").at("ii").get<bool>();
    r.conditions.cond_iii = j.at("conditions").at("iii").get<bool>();
    if (j.at("conditions").contains("witness"))
        r.conditions.witness_vb =
            BitVector::from_string(j.at("conditions").at("witness").get<std::string>());
    r.conditions_enforced = j.at("conditions_enforced").get<bool>();
    r.code_stabilizer = paulis_from_json(j.at("code_stabilizer"), r.code.n);
    r.word_operators = paulis_from_json(j.at("word_operators"), r.code.n);
    r.xi = CoincidenceMatrix::from_xi(matrix_from_json(j.at("xi").at("matrix")),
                                      j.at("xi").at("k").get<int>());
    return r;
}

nlohmann::json detection_report_to_json(const DetectionReport& rep) {
    nlohmann::json j;
    j["schema"] = "stabgraph-detection-report";
    j["version"] = 1;
    j["mode"] = rep.mode == Mode::strong ? "strong" : "weak";
    j["e"] = rep.requested_e;
    j["corrects_e"] = rep.corrects_e;
    j["all_detected"] = rep.all_detected;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : rep.per_config) {
        nlohmann::json entry;
        nlohmann::json verts = nlohmann::json::array();
        for (int x : v.config.vertices)
            verts.push_back(x + 1);  // 1-based in user-facing output
        entry["E"] = verts;
        entry["strong"] = v.strong;
        entry["weak"] = v.weak;
        arr.push_back(entry);
    }
    j["configurations"] = arr;
    return j;
}

nlohmann::json agreement_report_to_json(const AgreementReport& rep) {
    nlohmann::json j;
    j["schema"] = "stabgraph-agreement-report";
    j["version"] = 1;
    j["disagreements"] = rep.disagreements;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& entry : rep.per_config) {
        nlohmann::json e;
        nlohmann::json verts = nlohmann::json::array();
        for (int x : entry.config.vertices)
            verts.push_back(x + 1);
        e["E"] = verts;
        e["graph_weak"] = entry.graph_weak;
        e["oracle"] = entry.oracle;
        arr.push_back(e);
    }
    j["configurations"] = arr;
    return j;
}

std::string xi_to_matrix_text(const CoincidenceMatrix& xi) {
    std::string s = std::to_string(xi.k()) + " " + std::to_string(xi.n()) + "\n";
    for (const auto& row : xi.xi().to_strings())
        s += row + "\n";
    return s;
}

CoincidenceMatrix xi_from_matrix_text(std::istream& in) {
    int k = -1, n = -1;
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty coincidence matrix file");
    {
        std::istringstream hs(line);
        if (!(hs >> k >> n) || k < 0 || n <= 0)
            throw ParseError("expected header 'k n'");
    }
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        std::string bits;
        for (char c : line) {
            if (c == '0' || c == '1')
                bits += c;
            else if (c != ' ' && c != '\t' && c != '\r')
                throw ParseError("coincidence matrix rows must contain only 0/1");
        }
        if (!bits.empty())
            rows.push_back(bits);
    }
    if (rows.size() != static_cast<std::size_t>(n + k))
        throw ParseError("expected " + std::to_string(n + k) + " matrix rows, found " +
                         std::to_string(rows.size()));
    BitMatrix m = BitMatrix::from_strings(rows);
    if (m.cols() != static_cast<std::size_t>(n + k))
        throw ParseError("coincidence matrix must be square");
    return CoincidenceMatrix::from_xi(std::move(m), k);
}

CoincidenceMatrix load_xi_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open coincidence matrix file: " + path);
    return xi_from_matrix_text(f);
}

std::string input_vertex_label(int i) {
    std::string s = "0";
    for (int t = 0; t < i; ++t)
        s += '\'';
    return s;
}

std::string xi_to_dot(const CoincidenceMatrix& xi) {
    std::ostringstream os;
    os << "graph coincidence {\n";
    for (int i = 0; i < xi.k(); ++i)
        os << "  i" << i << " [shape=square, label=\"" << input_vertex_label(i) << "\"];\n";
    for (int v = 0; v < xi.n(); ++v)
        os << "  v" << (v + 1) << " [shape=circle, label=\"" << (v + 1) << "\"];\n";
    for (int i = 0; i < xi.k(); ++i)
        for (int v = 0; v < xi.n(); ++v)
            if (xi.input_block().get(i, v))
                os << "  i" << i << " -- v" << (v + 1) << ";\n";
    for (int a = 0; a < xi.n(); ++a)
        for (int b = a + 1; b < xi.n(); ++b)
            if (xi.xi().get(xi.k() + a, xi.k() + b))
                os << "  v" << (a + 1) << " -- v" << (b + 1) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace stabgraph
