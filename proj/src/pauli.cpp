#include "stabgraph/pauli.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace stabgraph {

namespace {

// Site encoding s = z + 2x: 0=I, 1=Z, 2=X, 3=Y.
constexpr char kSiteSymbol[4] = {'I', 'Z', 'X', 'Y'};

// i-exponent of the phase picked up by the ordered site product a*b,
// e.g. X*Z = -iY -> 3. Verified against dense matrices in the test suite.
constexpr int kMulPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

// Single-qubit conjugation tables: site -> (site', i-exponent).
// H: X<->Z, Y->-Y.  P: X->Y->-X, Z fixed.
constexpr int kConjH[4][2] = {{0, 0}, {2, 0}, {1, 0}, {3, 2}};
constexpr int kConjP[4][2] = {{0, 0}, {1, 0}, {3, 0}, {2, 2}};

// Two-qubit conjugation tables indexed by 4*ctrl+tgt -> (ctrl', tgt', i-exponent).
constexpr int kConjCnot[16][3] = {
    {0, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 3, 0},
    {1, 0, 0}, {0, 1, 0}, {1, 2, 0}, {0, 3, 0},
    {2, 2, 0}, {3, 3, 2}, {2, 0, 0}, {3, 1, 0},
    {3, 2, 0}, {2, 3, 0}, {3, 0, 0}, {2, 1, 2},
};
constexpr int kConjCp[16][3] = {
    {0, 0, 0}, {0, 1, 0}, {1, 2, 0}, {1, 3, 0},
    {1, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 3, 0},
    {2, 1, 0}, {2, 0, 0}, {3, 3, 0}, {3, 2, 2},
    {3, 1, 0}, {3, 0, 0}, {2, 3, 2}, {2, 2, 0},
};

int site_of(const BitVector& z, const BitVector& x, std::size_t j) {
    return (z.get(j) ? 1 : 0) + (x.get(j) ? 2 : 0);
}

void set_site(BitVector& z, BitVector& x, std::size_t j, int s) {
    z.set(j, s & 1);
    x.set(j, (s >> 1) & 1);
}

}  // namespace

std::string gate_name(Gate g) {
    switch (g) {
        case Gate::H: return "H";
        case Gate::P: return "P";
        case Gate::CNOT: return "CNOT";
        case Gate::CP: return "CP";
    }
    return "?";
}

Gate gate_from_name(std::string_view name) {
    if (name == "H") return Gate::H;
    if (name == "P") return Gate::P;
    if (name == "CNOT") return Gate::CNOT;
    if (name == "CP") return Gate::CP;
    throw ParseError("unknown gate name: " + std::string(name));
}

PauliOperator::PauliOperator(int n, int phase, BitVector z, BitVector x)
    : n_(n), phase_(((phase % 4) + 4) % 4), z_(std::move(z)), x_(std::move(x)) {
    if (z_.size() != static_cast<std::size_t>(n_) || x_.size() != static_cast<std::size_t>(n_))
        throw ShapeError("Pauli z/x length must equal n");
}

PauliOperator PauliOperator::parse(std::string_view text, int n) {
    std::string s(text);
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    int phase = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        if (s[0] == '-')
            phase = 2;
        s.erase(s.begin());
    }
    if (!s.empty() && s[0] == 'i') {
        phase += 1;
        s.erase(s.begin());
    }
    if (s.empty())
        throw ParseError("empty Pauli text");

    bool sparse = s.find_first_of("0123456789 \t") != std::string::npos;
    PauliOperator out(n);
    out.phase_ = ((phase % 4) + 4) % 4;
    if (!sparse) {
        if (s.size() != static_cast<std::size_t>(n))
            throw ParseError("Pauli string has length " + std::to_string(s.size()) +
                             ", expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            switch (s[j]) {
                case 'I': break;
                case 'X': out.x_.set(j, true); break;
                case 'Z': out.z_.set(j, true); break;
                case 'Y': out.z_.set(j, true); out.x_.set(j, true); break;
                default:
                    throw ParseError(std::string("bad Pauli symbol '") + s[j] + "'");
            }
        }
        return out;
    }
    std::istringstream ss(s);
    std::string tok;
    PauliOperator acc(n);
    acc.phase_ = out.phase_;
    while (ss >> tok) {
        char sym = tok[0];
        if (sym != 'X' && sym != 'Y' && sym != 'Z' && sym != 'I')
            throw ParseError(std::string("bad Pauli symbol '") + sym + "'");
        int idx = 0;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw ParseError("bad sparse Pauli token '" + tok + "'");
        }
        if (idx < 1 || idx > n)
            throw IndexError("qubit index " + std::to_string(idx) + " out of range 1.." +
                             std::to_string(n));
        PauliOperator factor(n);
        switch (sym) {
            case 'X': factor.x_.set(idx - 1, true); break;
            case 'Z': factor.z_.set(idx - 1, true); break;
            case 'Y': factor.z_.set(idx - 1, true); factor.x_.set(idx - 1, true); break;
            default: break;
        }
        acc = acc * factor;
    }
    return acc;
}

std::size_t PauliOperator::weight() const {
    std::size_t w = 0;
    for (int j = 0; j < n_; ++j)
        if (z_.get(j) || x_.get(j))
            ++w;
    return w;
}

PauliOperator PauliOperator::phase_stripped() const {
    return PauliOperator(n_, 0, z_, x_);
}

std::string PauliOperator::to_string() const {
    static const char* kPrefix[4] = {"+", "i", "-", "-i"};
    std::string s = kPrefix[phase_];
    for (int j = 0; j < n_; ++j)
        s += kSiteSymbol[site_of(z_, x_, j)];
    return s;
}

std::string PauliOperator::to_sparse_string() const {
    static const char* kPrefix[4] = {"", "i ", "- ", "-i "};
    std::string s = kPrefix[phase_];
    bool first = true;
    for (int j = 0; j < n_; ++j) {
        int site = site_of(z_, x_, j);
        if (site == 0)
            continue;
        if (!first)
            s += ' ';
        s += kSiteSymbol[site];
        s += std::to_string(j + 1);
        first = false;
    }
    if (first)
        s += "I1";  // identity: name one site so the text is non-empty
    return s;
}

PauliOperator PauliOperator::operator*(const PauliOperator& o) const {
    if (o.n_ != n_)
        throw ShapeError("Pauli product length mismatch");
    PauliOperator out(n_);
    int t = phase_ + o.phase_;
    for (int j = 0; j < n_; ++j) {
        int a = site_of(z_, x_, j);
        int b = site_of(o.z_, o.x_, j);
        t += kMulPhase[a][b];
        set_site(out.z_, out.x_, j, a ^ b);
    }
    out.phase_ = ((t % 4) + 4) % 4;
    return out;
}

int symplectic_product(const PauliOperator& p, const PauliOperator& q) {
    if (p.n() != q.n())
        throw ShapeError("symplectic product length mismatch");
    return (p.z().dot(q.x()) ^ p.x().dot(q.z())) ? 1 : 0;
}

PauliOperator conjugate(const PauliOperator& p, Gate gate, int a, int b) {
    if (a < 0 || a >= p.n())
        throw IndexError("gate target out of range");
    bool two_qubit = (gate == Gate::CNOT || gate == Gate::CP);
    if (two_qubit) {
        if (b < 0 || b >= p.n())
            throw IndexError("gate target out of range");
        if (a == b)
            throw IndexError("two-qubit gate targets must be distinct");
    }
    BitVector z = p.z(), x = p.x();
    int t = p.phase_exponent();
    if (!two_qubit) {
        int s = (z.get(a) ? 1 : 0) + (x.get(a) ? 2 : 0);
        const int(*table)[2] = (gate == Gate::H) ? kConjH : kConjP;
        t += table[s][1];
        z.set(a, table[s][0] & 1);
        x.set(a, (table[s][0] >> 1) & 1);
    } else {
        int sc = (z.get(a) ? 1 : 0) + (x.get(a) ? 2 : 0);
        int st = (z.get(b) ? 1 : 0) + (x.get(b) ? 2 : 0);
        const int(*table)[3] = (gate == Gate::CNOT) ? kConjCnot : kConjCp;
        const int* e = table[sc * 4 + st];
        t += e[2];
        z.set(a, e[0] & 1);
        x.set(a, (e[0] >> 1) & 1);
        z.set(b, e[1] & 1);
        x.set(b, (e[1] >> 1) & 1);
    }
    return PauliOperator(p.n(), t, std::move(z), std::move(x));
}

PauliOperator conjugate(const PauliOperator& p, const GateOp& op) {
    return conjugate(p, op.gate, op.a, op.b);
}

PauliOperator conjugate(const PauliOperator& p, const std::vector<GateOp>& circuit) {
    PauliOperator out = p;
    for (const auto& op : circuit)
        out = conjugate(out, op);
    return out;
}

StabilizerMatrix::StabilizerMatrix(std::vector<PauliOperator> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 1; i < gens_.size(); ++i)
        if (gens_[i].n() != gens_[0].n())
            throw ShapeError("stabilizer generators must share one qubit count");
}

int StabilizerMatrix::n() const {
    return gens_.empty() ? 0 : gens_[0].n();
}

BitMatrix StabilizerMatrix::binary_form() const {
    int nq = n();
    BitMatrix m(gens_.size(), 2 * nq);
    for (std::size_t r = 0; r < gens_.size(); ++r) {
        for (int j = 0; j < nq; ++j) {
            if (gens_[r].z().get(j))
                m.set(r, j, true);
            if (gens_[r].x().get(j))
                m.set(r, nq + j, true);
        }
    }
    return m;
}

BitMatrix StabilizerMatrix::z_block() const {
    int nq = n();
    BitMatrix m(gens_.size(), nq);
    for (std::size_t r = 0; r < gens_.size(); ++r)
        for (int j = 0; j < nq; ++j)
            if (gens_[r].z().get(j))
                m.set(r, j, true);
    return m;
}

BitMatrix StabilizerMatrix::x_block() const {
    int nq = n();
    BitMatrix m(gens_.size(), nq);
    for (std::size_t r = 0; r < gens_.size(); ++r)
        for (int j = 0; j < nq; ++j)
            if (gens_[r].x().get(j))
                m.set(r, j, true);
    return m;
}

StabilizerMatrix apply_local_clifford(const StabilizerMatrix& sm,
                                      const std::vector<GateOp>& circuit) {
    std::vector<PauliOperator> out;
    out.reserve(sm.size());
    for (const auto& g : sm.generators())
        out.push_back(conjugate(g, circuit));
    return StabilizerMatrix(std::move(out));
}

}  // namespace stabgraph
