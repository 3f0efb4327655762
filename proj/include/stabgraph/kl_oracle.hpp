#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "stabgraph/sw_checker.hpp"

namespace stabgraph {

inline constexpr double kOracleTol = 1e-9;
inline constexpr int kDefaultOracleCap = 14;

using Amplitude = std::complex<double>;

/// Dense n-qubit state. Qubit 1 (index 0) is the most significant bit of the
/// amplitude index.
struct StateVector {
    int n = 0;
    std::vector<Amplitude> amps;

    double norm() const;
};

Amplitude inner_product(const StateVector& a, const StateVector& b);

/// Graph state by the quadratic-form amplitude formula: amplitude of basis
/// state mu is 2^{-n/2} (-1)^{#edges inside supp(mu)}.
StateVector graph_state(const Graph& g, int cap = kDefaultOracleCap);

StateVector apply_pauli(const StateVector& s, const PauliOperator& p);

/// In-place single-qubit unitary, row-major 2x2 {u00,u01,u10,u11}.
void apply_single_qubit(StateVector& s, int qubit, const std::array<Amplitude, 4>& u);

/// The exact LC local unitary on states: sqrt(-iX) on a, sqrt(iZ) (the
/// diag(w, w^-1) branch) on each neighbor of a.
StateVector apply_lc_unitary(const StateVector& s, const Graph& g, int a);

struct CodeSpace {
    std::vector<StateVector> codewords;  // orthonormal
};

/// Codewords w_l |G>. Word operators must already be in the graph frame except
/// for optional pending diagonal corrections, which are applied here as
/// phase-gate conjugations on the listed qubits. Orthonormality is checked,
/// not repaired.
CodeSpace codespace_from_cws(const Graph& g, const std::vector<PauliOperator>& word_ops,
                             const std::vector<int>& pending_diagonal_corrections = {},
                             int cap = kDefaultOracleCap);

struct KlWitness {
    PauliOperator op;
    int i = 0, j = 0;
};

struct KlResult {
    bool ok = true;
    std::optional<KlWitness> witness;
};

/// Knill-Laflamme test: for every F the matrix M_ij = <c_i|F|c_j> must equal
/// omega(F) I, with omega estimated as M_00. Any consistent scalar passes,
/// including omega = 0.
KlResult kl_check(const CodeSpace& cs, const std::vector<PauliOperator>& errors);

/// All 4^|sites|-1 nontrivial Paulis supported inside the given sites.
std::vector<PauliOperator> paulis_with_support_in(int n, const std::vector<int>& sites);
/// All nontrivial Paulis of weight <= w.
std::vector<PauliOperator> paulis_up_to_weight(int n, int w);

struct AgreementEntry {
    ErrorConfiguration config;
    bool graph_weak = false;
    bool oracle = false;
};

struct AgreementReport {
    std::vector<AgreementEntry> per_config;
    int disagreements = 0;

    std::string table() const;
};

/// For every configuration |E| <= 2e compares detect_weak against the KL
/// verdict over all Paulis supported inside E.
AgreementReport cross_validate(const CoincidenceMatrix& xi, const CodeSpace& cs, int e,
                               int threads = 1);

}  // namespace stabgraph
