#include "mdlie/matrix.hpp"

#include "mdlie/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mdlie {

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::diagonal(std::span<const Rational> d) {
    MatrixQ m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

MatrixQ MatrixQ::from_rows(std::span<const VectorQ> rows, std::size_t cols) {
    MatrixQ m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

MatrixQ MatrixQ::from_columns(std::span<const VectorQ> cols, std::size_t rows) {
    MatrixQ m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

bool MatrixQ::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

VectorQ MatrixQ::row(std::size_t r) const {
    const auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return VectorQ(first, first + static_cast<std::ptrdiff_t>(cols_));
}

VectorQ MatrixQ::column(std::size_t c) const {
    VectorQ v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void MatrixQ::set_column(std::size_t c, std::span<const Rational> v) {
    if (v.size() != rows_) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

MatrixQ MatrixQ::operator*(const MatrixQ& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product dimension mismatch");
    MatrixQ p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) += a * o(k, c);
        }
    return p;
}

VectorQ MatrixQ::operator*(std::span<const Rational> v) const {
    if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    VectorQ out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

MatrixQ MatrixQ::operator+(const MatrixQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum dimension mismatch");
    MatrixQ s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
}

MatrixQ MatrixQ::operator-(const MatrixQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference dimension mismatch");
    MatrixQ s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
    return s;
}

MatrixQ MatrixQ::scaled(const Rational& s) const {
    MatrixQ m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

std::string MatrixQ::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    }
    os << ']';
    return os.str();
}

VectorQ unit_vector(std::size_t n, std::size_t i) {
    VectorQ v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw InputError("dot product length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

VectorQ add(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw InputError("vector sum length mismatch");
    VectorQ s(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] += b[i];
    return s;
}

VectorQ scale(std::span<const Rational> a, const Rational& s) {
    VectorQ out(a.begin(), a.end());
    for (auto& x : out) x *= s;
    return out;
}

std::string to_string(std::span<const Rational> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace mdlie
