#include "stabgraph/coincidence.hpp"

#include <deque>
#include <unordered_set>

namespace stabgraph {

CoincidenceMatrix::CoincidenceMatrix(const Graph& gamma, BitMatrix input_block,
                                     AttachmentReport report)
    : k_(static_cast<int>(input_block.rows())),
      n_(gamma.n()),
      input_block_(std::move(input_block)),
      report_(std::move(report)) {
    if (k_ > 0 && input_block_.cols() != static_cast<std::size_t>(n_))
        throw ShapeError("input block must be k x n");
    xi_ = BitMatrix(n_ + k_, n_ + k_);
    for (int r = 0; r < k_; ++r) {
        for (int c = 0; c < n_; ++c) {
            if (input_block_.get(r, c)) {
                xi_.set(r, k_ + c, true);
                xi_.set(k_ + c, r, true);
            }
        }
    }
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (gamma.adjacency().get(r, c))
                xi_.set(k_ + r, k_ + c, true);
}

CoincidenceMatrix CoincidenceMatrix::from_xi(BitMatrix xi, int k) {
    if (xi.rows() != xi.cols())
        throw FormatError("coincidence matrix must be square");
    int total = static_cast<int>(xi.rows());
    if (k < 0 || k > total)
        throw FormatError("input count k out of range");
    int n = total - k;
    if (!xi.is_symmetric())
        throw FormatError("coincidence matrix must be symmetric");
    if (!xi.is_zero_diagonal())
        throw FormatError("coincidence matrix must have zero diagonal");
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            if (xi.get(r, c))
                throw FormatError("input-input block of the coincidence matrix must be zero");
    BitMatrix block(k, n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c)
            if (xi.get(r, k + c))
                block.set(r, c, true);
    BitMatrix adj(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (xi.get(k + r, k + c))
                adj.set(r, c, true);
    Graph g(std::move(adj));  // validates the output block
    AttachmentReport rep = check_conditions(g, block);
    return CoincidenceMatrix(g, std::move(block), std::move(rep));
}

Graph CoincidenceMatrix::graph() const {
    BitMatrix adj(n_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (xi_.get(k_ + r, k_ + c))
                adj.set(r, c, true);
    return Graph(std::move(adj));
}

StabilizerMatrix graph_form_stabilizer(const Graph& gamma,
                                       const std::vector<BitVector>& kernel_vectors) {
    int nq = gamma.n();
    std::vector<PauliOperator> gens;
    gens.reserve(kernel_vectors.size());
    for (const auto& k : kernel_vectors) {
        if (k.size() != static_cast<std::size_t>(nq))
            throw ShapeError("kernel vector length must equal the vertex count");
        gens.emplace_back(nq, 0, gamma.adjacency() * k, k);
    }
    return StabilizerMatrix(std::move(gens));
}

BitMatrix derive_input_block(const Graph& gamma, const BitMatrix& x_support) {
    int nq = gamma.n();
    if (x_support.rows() > 0 && x_support.cols() != static_cast<std::size_t>(nq))
        throw ShapeError("x_support columns must equal the vertex count");
    std::size_t r = rank(x_support);
    if (r != x_support.rows())
        throw RankError("x_support rows are linearly dependent");
    // Rows of B† span the orthogonal complement: kernel of x_support read as a map.
    BitMatrix support = x_support.rows() ? x_support : BitMatrix(0, nq);
    std::vector<BitVector> comp = kernel(support);
    if (comp.empty())
        return BitMatrix(0, nq);
    BitMatrix out = rref(BitMatrix::from_rows(comp));
    if (out.rows() != static_cast<std::size_t>(nq) - r)
        throw RankError("orthogonal complement has unexpected dimension");
    return out;
}

AttachmentReport check_conditions(const Graph& gamma, const BitMatrix& input_block) {
    AttachmentReport rep;
    int nq = gamma.n();
    int k = static_cast<int>(input_block.rows());
    if (k > 0 && input_block.cols() != static_cast<std::size_t>(nq))
        throw ShapeError("input block must be k x n");
    rep.cond_i = rank(gamma.adjacency()) < static_cast<std::size_t>(nq);
    if (k == 0) {
        // No inputs to attach: nothing to check beyond cond_i.
        rep.cond_ii = true;
        rep.cond_iii = true;
        return rep;
    }
    bool independent = rank(input_block) == static_cast<std::size_t>(k);
    bool contained = true;
    for (int r = 0; r < k; ++r)
        if (!in_span(input_block.row(r), gamma.adjacency()))
            contained = false;
    rep.cond_ii = independent && !contained;
    // cond iii: nonzero v_B = B†ᵀ c with Gamma v_B = 0, i.e. c in ker(Gamma B†ᵀ).
    BitMatrix gb = gamma.adjacency() * input_block.transposed();
    for (const auto& c : kernel(gb)) {
        if (!c.any())
            continue;
        BitVector v = input_block.transposed() * c;
        if (v.any()) {
            rep.cond_iii = true;
            rep.witness_vb = v;
            break;
        }
    }
    return rep;
}

CoincidenceMatrix attach_inputs(const Graph& gamma, const BitMatrix& input_block,
                                AttachPolicy policy) {
    int k = static_cast<int>(input_block.rows());
    AttachmentReport rep = check_conditions(gamma, input_block);
    if (k > 0) {
        if (!rep.cond_i)
            throw ConditionError(1, "condition i violated: adjacency matrix has full rank");
        if (rank(input_block) != static_cast<std::size_t>(k))
            throw ConditionError(2, "condition ii violated: input block rows are dependent");
        if (policy == AttachPolicy::enforce_all) {
            if (!rep.cond_ii)
                throw ConditionError(2,
                                     "condition ii violated: input span lies inside the "
                                     "row span of the adjacency matrix");
            if (!rep.cond_iii)
                throw ConditionError(3,
                                     "condition iii violated: no nonzero input-span vector "
                                     "is orthogonal to every adjacency row");
        }
    }
    return CoincidenceMatrix(gamma, input_block, rep);
}

std::pair<Graph, std::vector<int>> ensure_singular(const Graph& gamma, std::size_t max_orbit) {
    int nq = gamma.n();
    if (rank(gamma.adjacency()) < static_cast<std::size_t>(nq))
        return {gamma, {}};
    std::unordered_set<std::string> seen;
    seen.insert(gamma.key());
    std::deque<std::pair<Graph, std::vector<int>>> queue;
    queue.push_back({gamma, {}});
    while (!queue.empty()) {
        auto [cur, seq] = queue.front();
        queue.pop_front();
        for (int v = 0; v < nq; ++v) {
            Graph next = local_complement(cur, v);
            if (seen.count(next.key()))
                continue;
            seen.insert(next.key());
            std::vector<int> nseq = seq;
            nseq.push_back(v);
            if (rank(next.adjacency()) < static_cast<std::size_t>(nq))
                return {next, nseq};
            if (seen.size() >= max_orbit)
                throw SearchExhaustedError(max_orbit,
                                           "no singular LC-equivalent graph within the bound");
            queue.push_back({next, std::move(nseq)});
        }
    }
    throw SearchExhaustedError(seen.size(),
                               "LC orbit exhausted without finding a singular graph");
}

}  // namespace stabgraph
