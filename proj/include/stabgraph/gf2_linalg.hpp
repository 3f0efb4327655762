#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "stabgraph/errors.hpp"

namespace stabgraph {

/// Dense bit-packed vector over F2.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t len, std::size_t i);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void xor_with(const BitVector& o);
    /// Mod-2 inner product.
    bool dot(const BitVector& o) const;
    bool any() const;
    std::size_t count() const;

    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

    const std::vector<std::uint64_t>& words() const { return w_; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense bit-packed row-major matrix over F2. An empty matrix is legal (rank 0).
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t m = std::uint64_t(1) << (c & 63);
        if (v)
            w_[r * stride_ + (c >> 6)] |= m;
        else
            w_[r * stride_ + (c >> 6)] &= ~m;
    }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    /// rows[dst] ^= rows[src]
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transposed() const;
    BitMatrix submatrix(const std::vector<std::size_t>& row_sel,
                        const std::vector<std::size_t>& col_sel) const;
    /// Stack other's rows below this matrix (column counts must match).
    BitMatrix vstack(const BitMatrix& other) const;

    bool is_symmetric() const;
    bool is_zero_diagonal() const;

    std::vector<std::string> to_strings() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    /// Stable byte key for dedup containers.
    std::string key() const;

  private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> w_;
};

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
BitVector operator*(const BitMatrix& a, const BitVector& v);

/// F2 row rank. Deterministic Gaussian elimination (lowest-index pivot row).
std::size_t rank(const BitMatrix& m);

/// Inverse of a square matrix; throws SingularError (the caller takes the
/// non-invertible branch of the standardization algorithm).
BitMatrix invert(const BitMatrix& m);

/// Basis of {x : m x = 0}. Size = cols - rank. Deterministic and reproducible:
/// free columns in ascending order, RREF back-substitution.
std::vector<BitVector> kernel(const BitMatrix& m);

/// True iff v is an F2 linear combination of the rows.
bool in_span(const BitVector& v, const BitMatrix& rows);

/// True iff m x = 0 has only the trivial solution (rank == cols).
bool solve_homogeneous(const BitMatrix& m);

/// Canonical reduced row echelon form with zero rows dropped.
BitMatrix rref(const BitMatrix& m);

}  // namespace stabgraph
