#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stabgraph/graph_transform.hpp"

namespace stabgraph {

inline constexpr std::size_t kDefaultOrbitBound = 65536;

/// Verdicts for the three Schlingemann input-attachment conditions.
struct AttachmentReport {
    bool cond_i = false;    // rank(Gamma) < n, the F2 meaning of det = 0 (mod 2)
    bool cond_ii = false;   // input rows independent and their span not inside rowspan(Gamma)
    bool cond_iii = false;  // some nonzero v_B in rowspan(input_block) with Gamma v_B = 0
    std::optional<BitVector> witness_vb;
};

/// Block coincidence matrix Xi = (0 B†; B Gamma) over input+output vertices.
class CoincidenceMatrix {
  public:
    CoincidenceMatrix() = default;

    /// Assembles and validates the block form from its parts.
    CoincidenceMatrix(const Graph& gamma, BitMatrix input_block, AttachmentReport report);

    /// Reconstructs from a full (n+k)x(n+k) matrix, validating every invariant
    /// (symmetry, zero diagonal, zero input block). Throws FormatError.
    static CoincidenceMatrix from_xi(BitMatrix xi, int k);

    int k() const { return k_; }
    int n() const { return n_; }
    const BitMatrix& xi() const { return xi_; }
    const BitMatrix& input_block() const { return input_block_; }
    Graph graph() const;
    const AttachmentReport& report() const { return report_; }

    friend bool operator==(const CoincidenceMatrix& a, const CoincidenceMatrix& b) {
        return a.xi_ == b.xi_ && a.k_ == b.k_;
    }

  private:
    int k_ = 0, n_ = 0;
    BitMatrix xi_;
    BitMatrix input_block_;
    AttachmentReport report_;
};

/// Generators X^k Z^{Gamma k} (phase +1) for each kernel vector k.
StabilizerMatrix graph_form_stabilizer(const Graph& gamma,
                                       const std::vector<BitVector>& kernel_vectors);

/// Canonical (RREF) basis of the dot-product orthogonal complement of the
/// row span of x_support: the k x n input block B† with ker B† = span(x_support).
/// x_support must have n - k independent rows (k = n - rank), or RankError.
BitMatrix derive_input_block(const Graph& gamma, const BitMatrix& x_support);

AttachmentReport check_conditions(const Graph& gamma, const BitMatrix& input_block);

/// Which conditions attach_inputs enforces. The paper's worked example and
/// every LC representative of the [[8,3,3]] code violate condition iii, so the
/// pipeline falls back to the structural gate (condition i plus full input
/// rank) when no representative satisfies all three.
enum class AttachPolicy { enforce_all, structural };

CoincidenceMatrix attach_inputs(const Graph& gamma, const BitMatrix& input_block,
                                AttachPolicy policy = AttachPolicy::enforce_all);

/// Searches LC sequences breadth-first (shortest first, lowest vertex first)
/// until a graph with rank < n is found. Returns the input unchanged when it
/// is already singular. Throws SearchExhaustedError past max_orbit graphs.
std::pair<Graph, std::vector<int>> ensure_singular(const Graph& gamma,
                                                   std::size_t max_orbit = kDefaultOrbitBound);

}  // namespace stabgraph
