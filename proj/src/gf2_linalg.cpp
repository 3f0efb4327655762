#include "stabgraph/gf2_linalg.hpp"

#include <algorithm>
#include <bit>

namespace stabgraph {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw ParseError("bit string must contain only 0/1");
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t i) {
    BitVector v(len);
    v.set(i, true);
    return v;
}

void BitVector::xor_with(const BitVector& o) {
    if (o.len_ != len_)
        throw ShapeError("BitVector length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] ^= o.w_[i];
}

bool BitVector::dot(const BitVector& o) const {
    if (o.len_ != len_)
        throw ShapeError("BitVector length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

bool BitVector::any() const {
    for (auto w : w_)
        if (w)
            return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : w_)
        c += std::popcount(w);
    return c;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> v;
    for (auto r : rows)
        v.emplace_back(r);
    return from_strings(v);
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty())
        return BitMatrix();
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw ShapeError("ragged rows in bit matrix literal");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (rows[r][c] == '1')
                m.set(r, c, true);
            else if (rows[r][c] != '0')
                throw ParseError("bit matrix rows must contain only 0/1");
        }
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    if (rows.empty())
        return BitMatrix();
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t i = 0; i < stride_; ++i)
        const_cast<std::vector<std::uint64_t>&>(v.words())[i] = w_[r * stride_ + i];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_)
        throw ShapeError("row length mismatch");
    for (std::size_t i = 0; i < stride_; ++i)
        w_[r * stride_ + i] = v.words()[i];
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t i = 0; i < stride_; ++i)
        w_[dst * stride_ + i] ^= w_[src * stride_ + i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < stride_; ++i)
        std::swap(w_[a * stride_ + i], w_[b * stride_ + i]);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::submatrix(const std::vector<std::size_t>& row_sel,
                               const std::vector<std::size_t>& col_sel) const {
    BitMatrix m(row_sel.size(), col_sel.size());
    for (std::size_t r = 0; r < row_sel.size(); ++r)
        for (std::size_t c = 0; c < col_sel.size(); ++c)
            if (get(row_sel[r], col_sel[c]))
                m.set(r, c, true);
    return m;
}

BitMatrix BitMatrix::vstack(const BitMatrix& other) const {
    if (rows_ == 0)
        return other;
    if (other.rows() == 0)
        return *this;
    if (other.cols() != cols_)
        throw ShapeError("vstack column mismatch");
    BitMatrix m(rows_ + other.rows(), cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        m.set_row(r, row(r));
    for (std::size_t r = 0; r < other.rows(); ++r)
        m.set_row(rows_ + r, other.row(r));
    return m;
}

bool BitMatrix::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r))
                return false;
    return true;
}

bool BitMatrix::is_zero_diagonal() const {
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        if (get(i, i))
            return false;
    return true;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r).to_string());
    return out;
}

std::string BitMatrix::key() const {
    std::string s;
    s.reserve(16 + w_.size() * 8);
    s += std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (auto w : w_)
        s.append(reinterpret_cast<const char*>(&w), 8);
    return s;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matrix product shape mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector acc(b.cols());
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(r, k))
                acc.xor_with(b.row(k));
        out.set_row(r, acc);
    }
    return out;
}

BitVector operator*(const BitMatrix& a, const BitVector& v) {
    if (a.cols() != v.size())
        throw ShapeError("matrix-vector shape mismatch");
    BitVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        out.set(r, a.row(r).dot(v));
    return out;
}

namespace {

// Shared elimination: reduces m in place to RREF, returns pivot columns.
std::vector<std::size_t> eliminate(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m.get(i, c)) {
                piv = i;
                break;
            }
        }
        if (piv == m.rows())
            continue;
        m.swap_rows(r, piv);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c))
                m.xor_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    BitMatrix w = m;
    return eliminate(w).size();
}

BitMatrix invert(const BitMatrix& m) {
    if (m.rows() != m.cols())
        throw ShapeError("invert requires a square matrix");
    std::size_t n = m.rows();
    BitMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            if (m.get(r, c))
                aug.set(r, c, true);
        aug.set(r, n + r, true);
    }
    auto pivots = eliminate(aug);
    std::size_t lead = 0;
    for (auto p : pivots)
        if (p < n)
            ++lead;
    if (lead != n)
        throw SingularError("matrix is singular over F2");
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (aug.get(r, n + c))
                inv.set(r, c, true);
    return inv;
}

std::vector<BitVector> kernel(const BitMatrix& m) {
    BitMatrix w = m;
    auto pivots = eliminate(w);
    std::vector<BitVector> basis;
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        BitVector v(m.cols());
        v.set(c, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (w.get(i, c))
                v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const BitVector& v, const BitMatrix& rows) {
    if (rows.rows() == 0 || rows.cols() == 0)
        return !v.any();
    if (v.size() != rows.cols())
        throw ShapeError("in_span length mismatch");
    BitMatrix w = rows;
    auto pivots = eliminate(w);
    BitVector r = v;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (r.get(pivots[i]))
            r.xor_with(w.row(i));
    return !r.any();
}

bool solve_homogeneous(const BitMatrix& m) {
    return rank(m) == m.cols();
}

BitMatrix rref(const BitMatrix& m) {
    BitMatrix w = m;
    auto pivots = eliminate(w);
    BitMatrix out(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out.set_row(r, w.row(r));
    return out;
}

}  // namespace stabgraph
