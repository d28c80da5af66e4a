#pragma once

#include "mdlie/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace mdlie {

using VectorQ = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

    static MatrixQ identity(std::size_t n);
    static MatrixQ diagonal(std::span<const Rational> d);
    /// Matrix whose rows are the given vectors (all of equal length `cols`).
    static MatrixQ from_rows(std::span<const VectorQ> rows, std::size_t cols);
    static MatrixQ from_columns(std::span<const VectorQ> cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    VectorQ row(std::size_t r) const;
    VectorQ column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Rational> v);

    MatrixQ transpose() const;
    MatrixQ operator*(const MatrixQ& o) const;
    VectorQ operator*(std::span<const Rational> v) const;
    MatrixQ operator+(const MatrixQ& o) const;
    MatrixQ operator-(const MatrixQ& o) const;
    MatrixQ scaled(const Rational& s) const;

    friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const MatrixQ& m) { return os << m.str(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

VectorQ unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
VectorQ add(std::span<const Rational> a, std::span<const Rational> b);
VectorQ scale(std::span<const Rational> a, const Rational& s);
std::string to_string(std::span<const Rational> v);

}  // namespace mdlie
