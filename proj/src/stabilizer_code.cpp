#include "stabgraph/stabilizer_code.hpp"

#include <fstream>
#include <sstream>

namespace stabgraph {

std::string ValidationReport::summary() const {
    if (issues.empty())
        return "ok";
    std::string s;
    for (const auto& is : issues) {
        s += is.what;
        if (is.i >= 0)
            s += " (operators " + std::to_string(is.i) + (is.j >= 0 ? "," + std::to_string(is.j) : "") + ")";
        s += "\n";
    }
    return s;
}

ValidationReport validate(const StabilizerCode& code) {
    ValidationReport rep;
    auto issue = [&rep](std::string what, int i = -1, int j = -1) {
        rep.issues.push_back({std::move(what), i, j});
    };
    if (code.n <= 0)
        issue("n must be positive");
    if (code.k < 0 || code.k > code.n)
        issue("k must lie in [0, n]");
    if (static_cast<int>(code.generators.size()) != code.n - code.k)
        issue("expected n-k generators");
    if (static_cast<int>(code.logical_x.size()) != code.k ||
        static_cast<int>(code.logical_z.size()) != code.k)
        issue("expected k logical X and k logical Z operators");
    if (!rep.ok())
        return rep;
    for (const auto& p : code.generators)
        if (p.n() != code.n)
            issue("generator qubit count mismatch");
    for (const auto& p : code.logical_x)
        if (p.n() != code.n)
            issue("logical X qubit count mismatch");
    for (const auto& p : code.logical_z)
        if (p.n() != code.n)
            issue("logical Z qubit count mismatch");
    if (!rep.ok())
        return rep;

    int m = code.n - code.k;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (symplectic_product(code.generators[i], code.generators[j]))
                issue("generators anticommute", i + 1, j + 1);
    if (rank(StabilizerMatrix(code.generators).binary_form()) != static_cast<std::size_t>(m))
        issue("generators are not independent over F2");
    for (int i = 0; i < code.k; ++i) {
        for (int j = 0; j < m; ++j) {
            if (symplectic_product(code.logical_x[i], code.generators[j]))
                issue("logical X anticommutes with a generator", i + 1, j + 1);
            if (symplectic_product(code.logical_z[i], code.generators[j]))
                issue("logical Z anticommutes with a generator", i + 1, j + 1);
        }
        for (int j = 0; j < code.k; ++j) {
            int want_xz = (i == j) ? 1 : 0;
            if (symplectic_product(code.logical_x[i], code.logical_z[j]) != want_xz)
                issue(want_xz ? "logical X̄_i must anticommute with Z̄_i"
                              : "logical X̄_i must commute with Z̄_j",
                      i + 1, j + 1);
            if (j > i && symplectic_product(code.logical_x[i], code.logical_x[j]))
                issue("logical X operators must commute", i + 1, j + 1);
            if (j > i && symplectic_product(code.logical_z[i], code.logical_z[j]))
                issue("logical Z operators must commute", i + 1, j + 1);
        }
    }
    return rep;
}

bool compute_standard_form(const StabilizerMatrix& cs,
                           const std::vector<PauliOperator>& words) {
    int nq = cs.n();
    if (cs.size() != static_cast<std::size_t>(nq))
        return false;
    BitMatrix zb = cs.z_block();
    if (cs.x_block() != BitMatrix::identity(nq))
        return false;
    if (!zb.is_symmetric() || !zb.is_zero_diagonal())
        return false;
    for (const auto& w : words)
        if (w.x().any())
            return false;
    return true;
}

CwsRealization realize_cws(const StabilizerCode& code) {
    auto rep = validate(code);
    if (!rep.ok())
        throw InvalidCodeError("invalid stabilizer code:\n" + rep.summary());
    std::vector<PauliOperator> gens = code.generators;
    for (const auto& z : code.logical_z)
        gens.push_back(z);
    StabilizerMatrix cs(std::move(gens));
    if (rank(cs.binary_form()) != static_cast<std::size_t>(code.n))
        throw InvalidCodeError("codeword stabilizer is not full rank");

    std::vector<PauliOperator> words;
    words.reserve(std::size_t(1) << code.k);
    for (std::size_t v = 0; v < (std::size_t(1) << code.k); ++v) {
        PauliOperator w(code.n);
        for (int l = 0; l < code.k; ++l)
            if ((v >> l) & 1)
                w = w * code.logical_x[l];
        words.push_back(std::move(w));
    }
    CwsRealization out{std::move(cs), std::move(words), {}, false};
    out.standard_form = compute_standard_form(out.codeword_stabilizer, out.word_operators);
    return out;
}

BitVector classical_error_map(const PauliOperator& e, const BitMatrix& gamma) {
    std::size_t nq = gamma.rows();
    if (gamma.cols() != nq || e.n() != static_cast<int>(nq))
        throw ShapeError("classical_error_map shape mismatch");
    if (!gamma.is_symmetric() || !gamma.is_zero_diagonal())
        throw ShapeError("gamma must be a symmetric zero-diagonal adjacency matrix");
    BitVector out = e.z();
    for (std::size_t l = 0; l < nq; ++l)
        if (e.x().get(l))
            out.xor_with(gamma.row(l));
    return out;
}

StabilizerCode parse_code_file(std::istream& in) {
    std::string line;
    std::vector<std::pair<int, std::string>> lines;  // (line number, payload)
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        lines.emplace_back(lineno, line.substr(a, b - a + 1));
    }
    if (lines.empty())
        throw ParseError("code file is empty");
    std::istringstream hs(lines[0].second);
    int n = 0, k = 0;
    if (!(hs >> n >> k) || n <= 0 || k < 0 || k > n)
        throw ParseError("line " + std::to_string(lines[0].first) +
                         ": expected header 'n k'");
    std::size_t want = static_cast<std::size_t>(n - k) + 2 * static_cast<std::size_t>(k);
    if (lines.size() - 1 != want)
        throw ParseError("expected " + std::to_string(want) + " operator lines, found " +
                         std::to_string(lines.size() - 1));
    StabilizerCode code;
    code.n = n;
    code.k = k;
    std::size_t idx = 1;
    auto take = [&](std::vector<PauliOperator>& dst, int count) {
        for (int i = 0; i < count; ++i, ++idx) {
            try {
                dst.push_back(PauliOperator::parse(lines[idx].second, n));
            } catch (const Error& e) {
                throw ParseError("line " + std::to_string(lines[idx].first) + ": " + e.what());
            }
        }
    };
    take(code.generators, n - k);
    take(code.logical_x, k);
    take(code.logical_z, k);
    return code;
}

StabilizerCode load_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open code file: " + path);
    return parse_code_file(f);
}

std::string code_to_text(const StabilizerCode& code) {
    std::string s = std::to_string(code.n) + " " + std::to_string(code.k) + "\n";
    for (const auto& g : code.generators)
        s += g.to_string() + "\n";
    for (const auto& x : code.logical_x)
        s += x.to_string() + "\n";
    for (const auto& z : code.logical_z)
        s += z.to_string() + "\n";
    return s;
}

}  // namespace stabgraph
