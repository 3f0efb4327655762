#pragma once

#include <utility>
#include <vector>

#include "stabgraph/pauli.hpp"
#include "stabgraph/stabilizer_code.hpp"

namespace stabgraph {

/// Simple graph on n vertices: symmetric F2 adjacency with zero diagonal.
class Graph {
  public:
    Graph() = default;
    explicit Graph(BitMatrix adjacency);
    static Graph empty(int n) { return Graph(BitMatrix(n, n)); }

    int n() const { return static_cast<int>(adj_.rows()); }
    const BitMatrix& adjacency() const { return adj_; }
    bool edge(int i, int j) const { return adj_.get(i, j); }
    std::vector<int> neighbors(int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;
    std::string key() const { return adj_.key(); }

  private:
    BitMatrix adj_;
};

/// T = S_b^T = (Z^T; X^T) = (A; B). Returns the pair (A, B), both n x n.
std::pair<BitMatrix, BitMatrix> transpose_stabilizer(const StabilizerMatrix& sm);

/// Exact graph form of a maximal abelian Pauli set whose X block is invertible:
/// regenerates the set as {+X^j Z^{Gamma_j}} by F2 basis change with full phase
/// tracking. Diagonal entries of the raw A B^-1 are cleared by phase-gate
/// conjugations (recorded in `diagonal`), and -1 generator signs by Pauli-Z
/// conjugations (recorded in `signs`). `applied` holds every gate conjugation
/// performed here, in order, so callers can replay it on other operators.
struct GraphFormResult {
    Graph graph;
    StabilizerMatrix generators;
    std::vector<int> diagonal;
    std::vector<int> signs;
    std::vector<GateOp> applied;
};
GraphFormResult graph_canonicalize(const StabilizerMatrix& sm);

struct StandardizationResult {
    Graph graph;
    std::vector<int> hadamard_set;
    std::vector<GateOp> post_clifford;  // Hadamards plus the canonicalization gates
    std::vector<int> diagonal_corrections;
    std::vector<int> sign_fixes;
    StabilizerMatrix graph_generators;
};

/// Van den Nest standardization adapted to codeword stabilizers. Searches
/// Hadamard subsets by increasing size, lexicographic within a size, and stops
/// at the first subset making the X block invertible.
StandardizationResult standardize(const CwsRealization& cws);

/// Toggle all edges inside the neighborhood of v.
Graph local_complement(const Graph& g, int v);

/// Checks Q_v(Gamma) = (A Gamma + B)(C Gamma + D)^-1 against local_complement,
/// with Q_v = (I, diag(Gamma_v); Lambda_v, I).
bool verify_q_transform(const Graph& g, int v);

struct LcOrbit {
    std::vector<Graph> graphs;  // deterministic BFS discovery order, g first
    bool truncated = false;
};
LcOrbit lc_orbit(const Graph& g, std::size_t max_size);

/// Local Clifford realizing LC at vertex a, compiled to {H,P} gates:
/// sqrt(-iX) on a and the matching sqrt(iZ) branch on each neighbor.
std::vector<GateOp> lc_unitary(const Graph& g, int a);

}  // namespace stabgraph
