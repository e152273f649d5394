#pragma once
// Dense linear algebra over F2 on packed 64-bit words.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace k4 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v) w_[i >> 6] |= (uint64_t{1} << (i & 63));
        else w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (uint64_t{1} << (i & 63)); }
    BitVec& operator^=(const BitVec& o);
    bool any() const;
    // parity of the bitwise AND
    bool dot(const BitVec& o) const;
    std::size_t popcount() const;
    // index of the lowest set bit, or size() when zero
    std::size_t lowest() const;
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);
    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    const BitVec& row(std::size_t r) const { return rows_[r]; }
    BitVec& row(std::size_t r) { return rows_[r]; }
    void append_row(BitVec r);

    F2Matrix transpose() const;
    F2Matrix operator*(const F2Matrix& o) const;
    F2Matrix operator+(const F2Matrix& o) const;
    BitVec apply(const BitVec& v) const;
    bool operator==(const F2Matrix& o) const;
    bool is_zero() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

// Incremental echelon basis, pivots at the lowest set column.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols), pivot_of_(cols, -1) {}
    // returns true when v was independent of the rows so far
    bool insert(BitVec v);
    bool contains(BitVec v) const;
    BitVec reduce(BitVec v) const;
    std::size_t rank() const { return basis_.size(); }
    std::size_t cols() const { return cols_; }
    bool is_pivot(std::size_t c) const { return pivot_of_[c] >= 0; }

private:
    std::size_t cols_;
    std::vector<int> pivot_of_;
    std::vector<BitVec> basis_;
};

std::size_t rank(const F2Matrix& m);
// Reduced row echelon form (leftmost pivot first); pivot columns returned.
F2Matrix rref(const F2Matrix& m, std::vector<std::size_t>* pivots = nullptr);
// Null space of m (vectors x with m x = 0), one per free column in increasing order.
std::vector<BitVec> kernel_basis(const F2Matrix& m);

}  // namespace k4
