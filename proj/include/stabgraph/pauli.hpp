#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stabgraph/gf2_linalg.hpp"

namespace stabgraph {

enum class Gate { H, P, CNOT, CP };

std::string gate_name(Gate g);
Gate gate_from_name(std::string_view name);

/// One local Clifford gate application. b is -1 for single-qubit gates.
struct GateOp {
    Gate gate;
    int a;
    int b = -1;

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// n-qubit Pauli operator with exact phase i^phase, dually represented as a
/// symbol string and the binary symplectic pair (z|x). Site (z_j,x_j) reads
/// (0,0)=I, (1,0)=Z, (0,1)=X, (1,1)=Y, with Y the genuine Pauli Y.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(int n) : n_(n), phase_(0), z_(n), x_(n) {}
    PauliOperator(int n, int phase, BitVector z, BitVector x);

    /// Accepts a dense form "[sign][IXYZ]{n}" (sign one of +, -, i, +i, -i)
    /// or the sparse product form "X2 X4 Y5 Z6" with 1-based qubit indices.
    static PauliOperator parse(std::string_view text, int n);

    int n() const { return n_; }
    /// Exponent t of the global phase i^t, in {0,1,2,3}.
    int phase_exponent() const { return phase_; }
    const BitVector& z() const { return z_; }
    const BitVector& x() const { return x_; }

    bool is_identity() const { return phase_ == 0 && !z_.any() && !x_.any(); }
    std::size_t weight() const;
    /// Same operator with phase reset to +1 (the graph-side view).
    PauliOperator phase_stripped() const;

    std::string to_string() const;
    std::string to_sparse_string() const;

    /// Exact product including phase. Operands must have equal n.
    PauliOperator operator*(const PauliOperator& o) const;

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

  private:
    int n_ = 0;
    int phase_ = 0;
    BitVector z_, x_;
};

/// z1.x2 + x1.z2 mod 2; zero iff the operators commute.
int symplectic_product(const PauliOperator& p, const PauliOperator& q);

/// U p U^dagger with exact phase tracking.
PauliOperator conjugate(const PauliOperator& p, Gate gate, int a, int b = -1);
PauliOperator conjugate(const PauliOperator& p, const GateOp& op);
PauliOperator conjugate(const PauliOperator& p, const std::vector<GateOp>& circuit);

/// An ordered list of Pauli generators plus its (Z|X) binary form.
class StabilizerMatrix {
  public:
    StabilizerMatrix() = default;
    explicit StabilizerMatrix(std::vector<PauliOperator> gens);

    int n() const;
    std::size_t size() const { return gens_.size(); }
    const std::vector<PauliOperator>& generators() const { return gens_; }
    const PauliOperator& generator(std::size_t i) const { return gens_[i]; }

    /// rows x 2n matrix laid out as (Z|X), row i = (z_i | x_i).
    BitMatrix binary_form() const;
    BitMatrix z_block() const;
    BitMatrix x_block() const;

    friend bool operator==(const StabilizerMatrix&, const StabilizerMatrix&) = default;

  private:
    std::vector<PauliOperator> gens_;
};

/// Conjugates every generator through the circuit in sequence.
StabilizerMatrix apply_local_clifford(const StabilizerMatrix& sm,
                                      const std::vector<GateOp>& circuit);

}  // namespace stabgraph
