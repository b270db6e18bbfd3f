#include "mfb/matrix.hpp"

#include "mfb/error.hpp"

#include <sstream>

namespace mfb {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
        for (long long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (auto& v : m.data_) v = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw Error(ErrorCode::InvalidInput, "block out of range");
    }
    IntMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    }
    return b;
}

bool IntMatrix::is_symmetric() const { return *this == transpose(); }

IntMatrix IntMatrix::from_blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                                 const IntMatrix& d) {
    if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_) {
        throw Error(ErrorCode::InvalidInput, "incompatible block shapes");
    }
    IntMatrix m(a.rows_ + c.rows_, a.cols_ + b.cols_);
    auto put = [&m](const IntMatrix& src, std::size_t r0, std::size_t c0) {
        for (std::size_t r = 0; r < src.rows_; ++r) {
            for (std::size_t col = 0; col < src.cols_; ++col) m(r0 + r, c0 + col) = src(r, col);
        }
    };
    put(a, 0, 0);
    put(b, 0, a.cols_);
    put(c, a.rows_, 0);
    put(d, a.rows_, a.cols_);
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidInput, "shape mismatch");
    IntMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix m = a;
    for (auto& v : m.data_) v = -v;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "shape mismatch in product");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
        }
    }
    return m;
}

IntMatrix operator*(const Int& s, const IntMatrix& a) {
    IntMatrix m = a;
    for (auto& v : m.data_) v *= s;
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
        out << "\n";
    }
    return out.str();
}

}  // namespace mfb
