#include "stabgraph/kl_oracle.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <thread>

namespace stabgraph {

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : amps)
        s += std::norm(a);
    return std::sqrt(s);
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.n != b.n)
        throw ShapeError("inner product dimension mismatch");
    Amplitude acc = 0;
    for (std::size_t i = 0; i < a.amps.size(); ++i)
        acc += std::conj(a.amps[i]) * b.amps[i];
    return acc;
}

StateVector graph_state(const Graph& g, int cap) {
    int nq = g.n();
    if (nq > cap)
        throw TooManyQubitsError("graph state on " + std::to_string(nq) +
                                 " qubits exceeds the oracle cap " + std::to_string(cap) +
                                 " (raise --oracle-cap)");
    StateVector s;
    s.n = nq;
    std::size_t dim = std::size_t(1) << nq;
    s.amps.resize(dim);
    // Row masks with qubit 0 as MSB.
    std::vector<std::uint64_t> row(nq, 0);
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j)
            if (g.adjacency().get(i, j))
                row[i] |= std::uint64_t(1) << (nq - 1 - j);
    double scale = 1.0 / std::sqrt(double(dim));
    for (std::size_t mu = 0; mu < dim; ++mu) {
        // Count edges inside the support twice, once per endpoint, then halve.
        std::size_t twice = 0;
        std::uint64_t m = mu;
        for (int i = 0; i < nq; ++i)
            if ((mu >> (nq - 1 - i)) & 1)
                twice += std::popcount(row[i] & m);
        s.amps[mu] = ((twice / 2) % 2 == 0) ? scale : -scale;
    }
    return s;
}

StateVector apply_pauli(const StateVector& s, const PauliOperator& p) {
    if (p.n() != s.n)
        throw ShapeError("apply_pauli qubit count mismatch");
    int nq = s.n;
    std::uint64_t xmask = 0, zmask = 0, ymask = 0;
    for (int j = 0; j < nq; ++j) {
        std::uint64_t bit = std::uint64_t(1) << (nq - 1 - j);
        bool zb = p.z().get(j), xb = p.x().get(j);
        if (xb)
            xmask |= bit;
        if (zb && xb)
            ymask |= bit;
        else if (zb)
            zmask |= bit;
    }
    static const Amplitude kI[4] = {1.0, {0.0, 1.0}, -1.0, {0.0, -1.0}};
    StateVector out;
    out.n = nq;
    out.amps.resize(s.amps.size());
    int ny = std::popcount(ymask);
    for (std::size_t mu = 0; mu < s.amps.size(); ++mu) {
        // Z gives (-1)^{mu_j}; Y gives i(-1)^{mu_j} and also flips the bit.
        int t = (p.phase_exponent() + ny) % 4;
        int signs = std::popcount(mu & (zmask | ymask));
        if (signs & 1)
            t = (t + 2) % 4;
        out.amps[mu ^ xmask] += kI[t] * s.amps[mu];
    }
    return out;
}

void apply_single_qubit(StateVector& s, int qubit, const std::array<Amplitude, 4>& u) {
    if (qubit < 0 || qubit >= s.n)
        throw IndexError("qubit out of range");
    std::size_t bit = std::size_t(1) << (s.n - 1 - qubit);
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (i & bit)
            continue;
        Amplitude a0 = s.amps[i];
        Amplitude a1 = s.amps[i | bit];
        s.amps[i] = u[0] * a0 + u[1] * a1;
        s.amps[i | bit] = u[2] * a0 + u[3] * a1;
    }
}

StateVector apply_lc_unitary(const StateVector& s, const Graph& g, int a) {
    if (a < 0 || a >= g.n())
        throw IndexError("vertex out of range");
    const double r = 1.0 / std::sqrt(2.0);
    const Amplitude i1(0.0, 1.0);
    const Amplitude w = std::polar(1.0, M_PI / 4);
    const std::array<Amplitude, 4> tau_x = {-r, i1 * r, i1 * r, -r};    // sqrt(-iX)
    const std::array<Amplitude, 4> tau_z = {w, 0.0, 0.0, std::conj(w)};  // sqrt(iZ)
    StateVector out = s;
    apply_single_qubit(out, a, tau_x);
    for (int b : g.neighbors(a))
        apply_single_qubit(out, b, tau_z);
    return out;
}

CodeSpace codespace_from_cws(const Graph& g, const std::vector<PauliOperator>& word_ops,
                             const std::vector<int>& pending_diagonal_corrections, int cap) {
    StateVector base = graph_state(g, cap);
    std::vector<GateOp> fix;
    for (int q : pending_diagonal_corrections) {
        fix.push_back({Gate::P, q});
        fix.push_back({Gate::P, q});
        fix.push_back({Gate::P, q});
    }
    CodeSpace cs;
    cs.codewords.reserve(word_ops.size());
    for (const auto& w : word_ops) {
        PauliOperator op = fix.empty() ? w : conjugate(w, fix);
        cs.codewords.push_back(apply_pauli(base, op));
    }
    for (std::size_t i = 0; i < cs.codewords.size(); ++i) {
        for (std::size_t j = i; j < cs.codewords.size(); ++j) {
            Amplitude ip = inner_product(cs.codewords[i], cs.codewords[j]);
            Amplitude want = (i == j) ? 1.0 : 0.0;
            if (std::abs(ip - want) > kOracleTol)
                throw NotOrthogonalError("codewords " + std::to_string(i) + "," +
                                         std::to_string(j) +
                                         " are not orthonormal (standardization bug)");
        }
    }
    return cs;
}

KlResult kl_check(const CodeSpace& cs, const std::vector<PauliOperator>& errors) {
    std::size_t dim = cs.codewords.size();
    for (const auto& f : errors) {
        std::vector<StateVector> fc;
        fc.reserve(dim);
        for (const auto& c : cs.codewords)
            fc.push_back(apply_pauli(c, f));
        Amplitude omega = inner_product(cs.codewords[0], fc[0]);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                Amplitude m = inner_product(cs.codewords[i], fc[j]);
                Amplitude want = (i == j) ? omega : Amplitude(0.0);
                if (std::abs(m - want) > kOracleTol)
                    return {false, KlWitness{f, static_cast<int>(i), static_cast<int>(j)}};
            }
        }
    }
    return {true, std::nullopt};
}

std::vector<PauliOperator> paulis_with_support_in(int n, const std::vector<int>& sites) {
    std::vector<PauliOperator> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < sites.size(); ++i)
        total *= 4;
    for (std::size_t combo = 1; combo < total; ++combo) {
        BitVector z(n), x(n);
        std::size_t c = combo;
        for (int site : sites) {
            int s = c % 4;  // 0=I 1=Z 2=X 3=Y
            c /= 4;
            z.set(site, s & 1);
            x.set(site, (s >> 1) & 1);
        }
        out.emplace_back(n, 0, std::move(z), std::move(x));
    }
    return out;
}

std::vector<PauliOperator> paulis_up_to_weight(int n, int w) {
    std::vector<PauliOperator> out;
    for (int weight = 1; weight <= std::min(w, n); ++weight) {
        std::vector<int> idx(weight);
        for (int i = 0; i < weight; ++i)
            idx[i] = i;
        while (true) {
            std::size_t total = 1;
            for (int i = 0; i < weight; ++i)
                total *= 3;
            for (std::size_t combo = 0; combo < total; ++combo) {
                BitVector z(n), x(n);
                std::size_t c = combo;
                for (int i = 0; i < weight; ++i) {
                    int s = 1 + static_cast<int>(c % 3);  // 1=Z 2=X 3=Y
                    c /= 3;
                    z.set(idx[i], s & 1);
                    x.set(idx[i], (s >> 1) & 1);
                }
                out.emplace_back(n, 0, std::move(z), std::move(x));
            }
            int i = weight - 1;
            while (i >= 0 && idx[i] == n - weight + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < weight; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

AgreementReport cross_validate(const CoincidenceMatrix& xi, const CodeSpace& cs, int e,
                               int threads) {
    DetectionReport det = verify_correction(xi, e, Mode::weak, threads);
    AgreementReport rep;
    rep.per_config.resize(det.per_config.size());

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& v = det.per_config[i];
            AgreementEntry entry;
            entry.config = v.config;
            entry.graph_weak = v.weak;
            entry.oracle =
                kl_check(cs, paulis_with_support_in(xi.n(), v.config.vertices)).ok;
            rep.per_config[i] = std::move(entry);
        }
    };
    int nthreads = std::max(1, threads);
    if (nthreads == 1 || rep.per_config.size() < 2) {
        work(0, rep.per_config.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (rep.per_config.size() + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t b = t * chunk;
            std::size_t en = std::min(rep.per_config.size(), b + chunk);
            if (b >= en)
                break;
            pool.emplace_back(work, b, en);
        }
        for (auto& th : pool)
            th.join();
    }
    for (const auto& entry : rep.per_config)
        if (entry.graph_weak != entry.oracle)
            ++rep.disagreements;
    return rep;
}

std::string AgreementReport::table() const {
    std::ostringstream os;
    os << "config        graph(weak)  oracle(KL)\n";
    for (const auto& entry : per_config) {
        std::string lbl = entry.config.label(0);
        os << lbl << std::string(lbl.size() < 14 ? 14 - lbl.size() : 1, ' ')
           << (entry.graph_weak ? "detect  " : "MISS    ") << "     "
           << (entry.oracle ? "detect" : "MISS") << "\n";
    }
    os << "disagreements: " << disagreements << "\n";
    return os.str();
}

}  // namespace stabgraph
