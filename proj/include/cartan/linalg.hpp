#pragma once

#include "cartan/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cartan {

using Vector = std::vector<Rational>;

// Dense rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    QMatrix transpose() const;
    Vector column(std::size_t j) const;
    Vector apply(const Vector& v) const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rational& c);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
    friend QMatrix operator*(const Rational& c, QMatrix a) { return a *= c; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

    // a*b - b*a
    static QMatrix commutator(const QMatrix& a, const QMatrix& b);

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Row-sparse rational matrix; each row holds (column, value) pairs with
// strictly increasing columns and no zero values.
struct SparseMatrix {
    using Row = std::vector<std::pair<int, Rational>>;
    int cols = 0;
    std::vector<Row> rows;

    static SparseMatrix from_dense(const QMatrix& m);
    QMatrix to_dense() const;
};

struct RrefResult {
    QMatrix reduced;
    std::vector<int> pivots;
};

struct SparseRref {
    // Nonzero rows of the reduced form, one per pivot, each with leading 1.
    std::vector<SparseMatrix::Row> rows;
    std::vector<int> pivots;
};

RrefResult rref(const QMatrix& m);
SparseRref rref(const SparseMatrix& m);

std::size_t rank(const QMatrix& m);
std::size_t rank(const SparseMatrix& m);

// Basis of {v : m v = 0}, one vector per free column, in increasing free-column order.
std::vector<Vector> nullspace(const QMatrix& m);
std::vector<Vector> nullspace(const SparseMatrix& m);

// Particular solution with free variables set to zero, or nullopt (no solution).
std::optional<Vector> solve(const QMatrix& m, const Vector& b);
std::optional<Vector> solve(const SparseMatrix& m, const Vector& b);

// Scales a rational vector to coprime integers with positive first nonzero entry.
Vector primitive_integer_vector(const Vector& v);

}  // namespace cartan
