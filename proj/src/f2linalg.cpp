#include "k4/f2linalg.hpp"

#include <bit>
#include <stdexcept>

namespace k4 {

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

bool BitVec::dot(const BitVec& o) const {
    uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVec::lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] & 1) m.set(r, c);
    }
    return m;
}

void F2Matrix::append_row(BitVec r) {
    if (rows_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row width mismatch");
    rows_.push_back(std::move(r));
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows()) throw std::invalid_argument("matrix product shape mismatch");
    F2Matrix p(rows(), o.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(r, k)) p.rows_[r] ^= o.rows_[k];
    return p;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    F2Matrix s = *this;
    for (std::size_t r = 0; r < rows(); ++r) s.rows_[r] ^= o.rows_[r];
    return s;
}

BitVec F2Matrix::apply(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    BitVec out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].dot(v)) out.set(r);
    }
    return out;
}

bool F2Matrix::operator==(const F2Matrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

bool F2Matrix::is_zero() const {
    for (const auto& r : rows_)
        if (r.any()) return false;
    return true;
}

BitVec Echelon::reduce(BitVec v) const {
    if (v.size() != cols_) throw std::invalid_argument("Echelon width mismatch");
    BitVec out(cols_);
    while (v.any()) {
        std::size_t p = v.lowest();
        int b = pivot_of_[p];
        if (b < 0) {
            out.set(p);
            v.flip(p);
        } else {
            v ^= basis_[static_cast<std::size_t>(b)];
        }
    }
    return out;
}

bool Echelon::insert(BitVec v) {
    if (v.size() != cols_) throw std::invalid_argument("Echelon width mismatch");
    while (v.any()) {
        std::size_t p = v.lowest();
        int b = pivot_of_[p];
        if (b < 0) {
            pivot_of_[p] = static_cast<int>(basis_.size());
            basis_.push_back(std::move(v));
            return true;
        }
        v ^= basis_[static_cast<std::size_t>(b)];
    }
    return false;
}

bool Echelon::contains(BitVec v) const { return !reduce(std::move(v)).any(); }

std::size_t rank(const F2Matrix& m) {
    Echelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    return e.rank();
}

F2Matrix rref(const F2Matrix& m, std::vector<std::size_t>* pivots) {
    F2Matrix a = m;
    std::vector<std::size_t> piv;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t r = lead;
        while (r < a.rows() && !a.get(r, c)) ++r;
        if (r == a.rows()) continue;
        std::swap(a.row(r), a.row(lead));
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (k != lead && a.get(k, c)) a.row(k) ^= a.row(lead);
        piv.push_back(c);
        ++lead;
    }
    if (pivots) *pivots = piv;
    return a;
}

std::vector<BitVec> kernel_basis(const F2Matrix& m) {
    std::vector<std::size_t> piv;
    F2Matrix r = rref(m, &piv);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<BitVec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        BitVec v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < piv.size(); ++i)
            if (r.get(i, f)) v.set(piv[i]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace k4
