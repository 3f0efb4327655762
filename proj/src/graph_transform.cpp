#include "stabgraph/graph_transform.hpp"

#include <deque>
#include <unordered_set>

namespace stabgraph {

Graph::Graph(BitMatrix adjacency) : adj_(std::move(adjacency)) {
    if (adj_.rows() != adj_.cols())
        throw ShapeError("adjacency matrix must be square");
    if (!adj_.is_symmetric())
        throw ShapeError("adjacency matrix must be symmetric");
    if (!adj_.is_zero_diagonal())
        throw ShapeError("adjacency matrix must have zero diagonal");
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int j = 0; j < n(); ++j)
        if (adj_.get(v, j))
            out.push_back(j);
    return out;
}

std::pair<BitMatrix, BitMatrix> transpose_stabilizer(const StabilizerMatrix& sm) {
    int nq = sm.n();
    if (sm.size() != static_cast<std::size_t>(nq))
        throw ShapeError("transpose stabilizer requires an n x 2n binary form");
    return {sm.z_block().transposed(), sm.x_block().transposed()};
}

namespace {

void append_p_dagger(std::vector<GateOp>& circ, int q) {
    // P^3 conjugates like P^dagger.
    circ.push_back({Gate::P, q});
    circ.push_back({Gate::P, q});
    circ.push_back({Gate::P, q});
}

void append_z(std::vector<GateOp>& circ, int q) {
    // Z = P^2 up to phase; conjugation by Z flips the sign of X/Y at q.
    circ.push_back({Gate::P, q});
    circ.push_back({Gate::P, q});
}

}  // namespace

GraphFormResult graph_canonicalize(const StabilizerMatrix& sm) {
    int nq = sm.n();
    if (sm.size() != static_cast<std::size_t>(nq))
        throw ShapeError("graph form needs exactly n generators");
    BitMatrix xb = sm.x_block();
    BitMatrix coeff = invert(xb);  // throws SingularError for the caller to handle

    // New generator j = product of old generators selected by row j of coeff;
    // all factors commute, so the order does not affect the phase.
    std::vector<PauliOperator> gens;
    gens.reserve(nq);
    for (int j = 0; j < nq; ++j) {
        PauliOperator p(nq);
        for (int i = 0; i < nq; ++i)
            if (coeff.get(j, i))
                p = p * sm.generator(i);
        gens.push_back(std::move(p));
    }

    GraphFormResult out;
    for (int j = 0; j < nq; ++j) {
        if (gens[j].x() != BitVector::unit(nq, j))
            throw Error("internal: basis change did not produce unit X parts");
        if (gens[j].z().get(j)) {
            out.diagonal.push_back(j);
            std::vector<GateOp> fix;
            append_p_dagger(fix, j);
            for (auto& g : gens)
                g = conjugate(g, fix);
            out.applied.insert(out.applied.end(), fix.begin(), fix.end());
        }
    }
    for (int j = 0; j < nq; ++j) {
        int t = gens[j].phase_exponent();
        if (t == 1 || t == 3)
            throw Error("internal: canonical generator has imaginary phase");
        if (t == 2) {
            out.signs.push_back(j);
            std::vector<GateOp> fix;
            append_z(fix, j);
            for (auto& g : gens)
                g = conjugate(g, fix);
            out.applied.insert(out.applied.end(), fix.begin(), fix.end());
        }
    }

    BitMatrix gamma(nq, nq);
    for (int j = 0; j < nq; ++j) {
        for (int c = 0; c < nq; ++c)
            if (gens[j].z().get(c))
                gamma.set(j, c, true);
        if (gens[j].phase_exponent() != 0 || gens[j].x() != BitVector::unit(nq, j))
            throw Error("internal: canonicalization failed to reach +X^j Z^row form");
    }
    out.graph = Graph(gamma);  // validates symmetry and zero diagonal
    out.generators = StabilizerMatrix(std::move(gens));
    return out;
}

StandardizationResult standardize(const CwsRealization& cws) {
    const StabilizerMatrix& cs = cws.codeword_stabilizer;
    int nq = cs.n();
    if (cs.size() != static_cast<std::size_t>(nq) ||
        rank(cs.binary_form()) != static_cast<std::size_t>(nq))
        throw ShapeError("codeword stabilizer must have full rank n");

    BitMatrix zb = cs.z_block();
    BitMatrix xb = cs.x_block();

    // Subset search: increasing size, lexicographic within a size, first
    // success wins. Swapping column j of Z and X is what a Hadamard on j does.
    std::vector<int> chosen;
    bool found = false;
    std::vector<int> subset;
    auto try_subset = [&](const std::vector<int>& s) {
        BitMatrix x2 = xb;
        for (int j : s)
            for (std::size_t r = 0; r < x2.rows(); ++r)
                x2.set(r, j, zb.get(r, j));
        if (rank(x2) == static_cast<std::size_t>(nq)) {
            chosen = s;
            return true;
        }
        return false;
    };
    for (int size = 0; size <= nq && !found; ++size) {
        subset.assign(size, 0);
        for (int i = 0; i < size; ++i)
            subset[i] = i;
        while (true) {
            if (try_subset(subset)) {
                found = true;
                break;
            }
            // next lexicographic combination
            int i = size - 1;
            while (i >= 0 && subset[i] == nq - size + i)
                --i;
            if (i < 0)
                break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }
    if (!found)
        throw Error("no Hadamard subset makes the X block invertible (corrupted input)");

    std::vector<GateOp> circuit;
    for (int j : chosen)
        circuit.push_back({Gate::H, j});
    StabilizerMatrix rotated = apply_local_clifford(cs, circuit);
    GraphFormResult canon = graph_canonicalize(rotated);

    StandardizationResult out;
    out.graph = canon.graph;
    out.hadamard_set = chosen;
    out.post_clifford = circuit;
    out.post_clifford.insert(out.post_clifford.end(), canon.applied.begin(), canon.applied.end());
    out.diagonal_corrections = canon.diagonal;
    out.sign_fixes = canon.signs;
    out.graph_generators = canon.generators;
    return out;
}

Graph local_complement(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw IndexError("local complementation vertex out of range");
    BitMatrix adj = g.adjacency();
    auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            bool cur = adj.get(nb[a], nb[b]);
            adj.set(nb[a], nb[b], !cur);
            adj.set(nb[b], nb[a], !cur);
        }
    }
    return Graph(std::move(adj));
}

bool verify_q_transform(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw IndexError("vertex out of range");
    int nq = g.n();
    const BitMatrix& gamma = g.adjacency();
    // Q_v blocks: A = I, B = diag(Gamma_v), C = Lambda_v, D = I.
    BitMatrix a = BitMatrix::identity(nq);
    BitMatrix b(nq, nq), c(nq, nq);
    for (int j = 0; j < nq; ++j)
        if (gamma.get(v, j))
            b.set(j, j, true);
    c.set(v, v, true);
    BitMatrix d = BitMatrix::identity(nq);

    BitMatrix num = a * gamma;
    for (int r = 0; r < nq; ++r)
        for (int col = 0; col < nq; ++col)
            if (b.get(r, col))
                num.set(r, col, !num.get(r, col));
    BitMatrix den = c * gamma;
    for (int r = 0; r < nq; ++r)
        den.set(r, r, !den.get(r, r));  // + I

    BitMatrix den_inv;
    try {
        den_inv = invert(den);
    } catch (const SingularError&) {
        throw SingularError("Lambda_v Gamma + I is singular; Q_v is undefined here");
    }
    BitMatrix lhs = num * den_inv;
    return lhs == local_complement(g, v).adjacency();
}

LcOrbit lc_orbit(const Graph& g, std::size_t max_size) {
    LcOrbit out;
    std::unordered_set<std::string> seen;
    std::deque<Graph> queue;
    seen.insert(g.key());
    out.graphs.push_back(g);
    queue.push_back(g);
    while (!queue.empty()) {
        Graph cur = queue.front();
        queue.pop_front();
        for (int v = 0; v < cur.n(); ++v) {
            Graph next = local_complement(cur, v);
            if (seen.count(next.key()))
                continue;
            if (out.graphs.size() >= max_size) {
                out.truncated = true;
                return out;
            }
            seen.insert(next.key());
            out.graphs.push_back(next);
            queue.push_back(next);
        }
    }
    return out;
}

std::vector<GateOp> lc_unitary(const Graph& g, int a) {
    if (a < 0 || a >= g.n())
        throw IndexError("vertex out of range");
    std::vector<GateOp> circ;
    // sqrt(-iX) on a: conjugates X->X, Z->-Y, same action as P†·H·P†.
    append_p_dagger(circ, a);
    circ.push_back({Gate::H, a});
    append_p_dagger(circ, a);
    // sqrt(iZ) branch diag(w, w^-1) on each neighbor: conjugates like P†.
    for (int b : g.neighbors(a))
        append_p_dagger(circ, b);
    return circ;
}

}  // namespace stabgraph
