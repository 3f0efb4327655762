#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "stabgraph/kl_oracle.hpp"
#include "stabgraph/pauli.hpp"

using namespace stabgraph;

namespace {

PauliOperator random_pauli(int n, std::mt19937_64& rng) {
    BitVector z(n), x(n);
    for (int j = 0; j < n; ++j) {
        z.set(j, rng() & 1);
        x.set(j, rng() & 1);
    }
    return PauliOperator(n, static_cast<int>(rng() % 4), std::move(z), std::move(x));
}

// Dense matrix of a Pauli, built solely through the state-vector module, used
// as an independent check of the algebraic conjugation tables.
std::vector<std::vector<Amplitude>> dense_matrix(const PauliOperator& p) {
    int dim = 1 << p.n();
    std::vector<std::vector<Amplitude>> m(dim, std::vector<Amplitude>(dim, 0.0));
    for (int col = 0; col < dim; ++col) {
        StateVector basis;
        basis.n = p.n();
        basis.amps.assign(dim, 0.0);
        basis.amps[col] = 1.0;
        StateVector out = apply_pauli(basis, p);
        for (int row = 0; row < dim; ++row)
            m[row][col] = out.amps[row];
    }
    return m;
}

std::vector<std::vector<Amplitude>> gate_matrix(Gate g) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (g) {
        case Gate::H:
            return {{r, r}, {r, -r}};
        case Gate::P:
            return {{1.0, 0.0}, {0.0, Amplitude(0.0, 1.0)}};
        case Gate::CNOT:
            return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        case Gate::CP:
            return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    }
    return {};
}

std::vector<std::vector<Amplitude>> matmul(const std::vector<std::vector<Amplitude>>& a,
                                           const std::vector<std::vector<Amplitude>>& b) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    std::vector<std::vector<Amplitude>> out(n, std::vector<Amplitude>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] += a[i][l] * b[l][j];
    return out;
}

std::vector<std::vector<Amplitude>> dagger(const std::vector<std::vector<Amplitude>>& a) {
    std::vector<std::vector<Amplitude>> out(a[0].size(), std::vector<Amplitude>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            out[j][i] = std::conj(a[i][j]);
    return out;
}

bool close(const std::vector<std::vector<Amplitude>>& a,
           const std::vector<std::vector<Amplitude>>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            if (std::abs(a[i][j] - b[i][j]) > 1e-12)
                return false;
    return true;
}

}  // namespace

TEST_CASE("parse dense and sparse forms") {
    auto g1 = PauliOperator::parse("XXXXXXXX", 8);
    CHECK(g1 == PauliOperator::parse("X1 X2 X3 X4 X5 X6 X7 X8", 8));
    CHECK(g1.x().count() == 8);
    CHECK_FALSE(g1.z().any());

    auto id = PauliOperator::parse("IIIIIIII", 8);
    CHECK(id.is_identity());
    CHECK(id.phase_exponent() == 0);

    auto g3 = PauliOperator::parse("X2 X4 Y5 Z6 Y7 Z8", 8);
    CHECK(g3 == PauliOperator::parse("IXIXYZYZ", 8));

    CHECK(PauliOperator::parse("-XZ", 2).phase_exponent() == 2);
    CHECK(PauliOperator::parse("iXZ", 2).phase_exponent() == 1);
    CHECK(PauliOperator::parse("-iXZ", 2).phase_exponent() == 3);
    CHECK(PauliOperator::parse("+XZ", 2).phase_exponent() == 0);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(PauliOperator::parse("XXQ", 3), ParseError);      // BadSymbol
    CHECK_THROWS_AS(PauliOperator::parse("XX", 3), ParseError);       // LengthMismatch
    CHECK_THROWS_AS(PauliOperator::parse("X9", 8), IndexError);       // IndexOutOfRange
    CHECK_THROWS_AS(PauliOperator::parse("X0", 8), IndexError);
}

TEST_CASE("print round trip") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + static_cast<int>(rng() % 10);
        PauliOperator p = random_pauli(n, rng);
        CHECK(PauliOperator::parse(p.to_string(), n) == p);
        CHECK(PauliOperator::parse(p.to_sparse_string(), n) == p);
    }
}

TEST_CASE("symplectic product fixtures") {
    CHECK(symplectic_product(PauliOperator::parse("XX", 2), PauliOperator::parse("ZZ", 2)) == 0);
    CHECK(symplectic_product(PauliOperator::parse("X", 1), PauliOperator::parse("Z", 1)) == 1);

    // Every pair among the [[8,3,3]] codeword stabilizer generators commutes.
    std::vector<PauliOperator> all;
    for (const auto& s : fixtures::kGottesmanGenerators)
        all.push_back(PauliOperator::parse(s, 8));
    for (const auto& s : fixtures::kGottesmanLogicalZ)
        all.push_back(PauliOperator::parse(s, 8));
    for (const auto& a : all)
        for (const auto& b : all)
            CHECK(symplectic_product(a, b) == 0);
}

TEST_CASE("pauli product phases against dense matrices") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + static_cast<int>(rng() % 3);
        PauliOperator a = random_pauli(n, rng);
        PauliOperator b = random_pauli(n, rng);
        CHECK(close(dense_matrix(a * b), matmul(dense_matrix(a), dense_matrix(b))));
    }
}

TEST_CASE("conjugation fixtures") {
    auto X = PauliOperator::parse("X", 1);
    auto Y = PauliOperator::parse("Y", 1);
    CHECK(conjugate(X, Gate::H, 0) == PauliOperator::parse("Z", 1));
    CHECK(conjugate(Y, Gate::H, 0) == PauliOperator::parse("-Y", 1));
    CHECK(conjugate(PauliOperator::parse("XI", 2), Gate::CNOT, 0, 1) ==
          PauliOperator::parse("XX", 2));
    CHECK(conjugate(PauliOperator::parse("XI", 2), Gate::CP, 0, 1) ==
          PauliOperator::parse("XZ", 2));
    CHECK(conjugate(PauliOperator::parse("II", 2), Gate::CNOT, 0, 1) ==
          PauliOperator::parse("II", 2));

    CHECK_THROWS_AS(conjugate(X, Gate::H, 5), IndexError);
    CHECK_THROWS_AS(conjugate(PauliOperator::parse("XI", 2), Gate::CNOT, 1, 1), IndexError);
}

TEST_CASE("conjugation periodicity") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        PauliOperator p = random_pauli(3, rng);
        PauliOperator h2 = conjugate(conjugate(p, Gate::H, 1), Gate::H, 1);
        CHECK(h2 == p);
        PauliOperator p4 = p;
        for (int i = 0; i < 4; ++i)
            p4 = conjugate(p4, Gate::P, 2);
        CHECK(p4 == p);
    }
}

TEST_CASE("conjugation tables against dense matrices") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200; ++t) {
        PauliOperator p = random_pauli(2, rng);
        for (Gate g : {Gate::H, Gate::P}) {
            for (int q = 0; q < 2; ++q) {
                auto u1 = gate_matrix(g);
                std::vector<std::vector<Amplitude>> u;
                // embed into two qubits
                u.assign(4, std::vector<Amplitude>(4, 0.0));
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int c = 0; c < 2; ++c)
                            for (int d = 0; d < 2; ++d) {
                                Amplitude val = (q == 0)
                                                    ? u1[a][b] * Amplitude(c == d ? 1.0 : 0.0)
                                                    : Amplitude(a == b ? 1.0 : 0.0) * u1[c][d];
                                u[a * 2 + c][b * 2 + d] = val;
                            }
                auto lhs = dense_matrix(conjugate(p, g, q));
                auto rhs = matmul(matmul(u, dense_matrix(p)), dagger(u));
                CHECK(close(lhs, rhs));
            }
        }
        for (Gate g : {Gate::CNOT, Gate::CP}) {
            auto u = gate_matrix(g);
            auto lhs = dense_matrix(conjugate(p, g, 0, 1));
            auto rhs = matmul(matmul(u, dense_matrix(p)), dagger(u));
            CHECK(close(lhs, rhs));
        }
    }
}

TEST_CASE("symplectic product preserved under conjugation") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 1000; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        PauliOperator p = random_pauli(n, rng);
        PauliOperator q = random_pauli(n, rng);
        int before = symplectic_product(p, q);
        int a = static_cast<int>(rng() % n);
        int b = static_cast<int>((a + 1 + rng() % (n - 1)) % n);
        Gate g = static_cast<Gate>(rng() % 4);
        bool two = (g == Gate::CNOT || g == Gate::CP);
        PauliOperator pc = two ? conjugate(p, g, a, b) : conjugate(p, g, a);
        PauliOperator qc = two ? conjugate(q, g, a, b) : conjugate(q, g, a);
        CHECK(symplectic_product(pc, qc) == before);
    }
}

TEST_CASE("apply_local_clifford reproduces the printed standard-form matrix") {
    std::vector<PauliOperator> gens;
    for (const auto& s : fixtures::kGottesmanGenerators)
        gens.push_back(PauliOperator::parse(s, 8));
    for (const auto& s : fixtures::kGottesmanLogicalZ)
        gens.push_back(PauliOperator::parse(s, 8));
    StabilizerMatrix sm(gens);
    CHECK(sm.binary_form() == fixtures::h_cws_gottesman());

    // Hadamards on qubits 1,2,3,5 (1-based). The binary form matches the
    // printed matrix; phases may differ, which the standardization later
    // clears explicitly.
    std::vector<GateOp> circ = {{Gate::H, 0}, {Gate::H, 1}, {Gate::H, 2}, {Gate::H, 4}};
    StabilizerMatrix rotated = apply_local_clifford(sm, circ);
    CHECK(rotated.binary_form() == fixtures::h_cws_prime_gottesman());
    CHECK(rotated.size() == sm.size());
    CHECK(rank(rotated.binary_form()) == 8);

    // Empty circuit and an H applied twice are both identities.
    CHECK(apply_local_clifford(sm, {}) == sm);
    CHECK(apply_local_clifford(sm, {{Gate::H, 3}, {Gate::H, 3}}) == sm);
}

TEST_CASE("binary form consistent with symbols") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        PauliOperator p = random_pauli(n, rng);
        // Rebuild from the binary form and compare symbol strings.
        PauliOperator q(n, p.phase_exponent(), p.z(), p.x());
        CHECK(q.to_string() == p.to_string());
    }
}
