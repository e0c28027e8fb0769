#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lieslice/rational.hpp"

namespace lieslice {

/// Dense matrix over the rationals. All elimination is exact; there is no
/// floating point anywhere in the library.
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMat(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMat identity(std::size_t n);
    static QMat zero(std::size_t rows, std::size_t cols) { return QMat(rows, cols); }
    static QMat from_rows(const std::vector<QVec>& rows);
    static QMat row(const QVec& v) { return from_rows({v}); }
    /// Parses entries given as "p/q" strings, row major.
    static QMat parse(const std::vector<std::vector<std::string>>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVec row_vec(std::size_t i) const;
    void set_row(std::size_t i, const QVec& v);
    QVec flatten() const { return data_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_diagonal() const;
    QVec diagonal() const;

    QMat transpose() const;
    Rational trace() const;

    QMat operator-() const;
    QMat& operator+=(const QMat& o);
    QMat& operator-=(const QMat& o);
    friend QMat operator+(QMat a, const QMat& b) { return a += b; }
    friend QMat operator-(QMat a, const QMat& b) { return a -= b; }
    friend QMat operator*(const QMat& a, const QMat& b);
    friend QMat operator*(const Rational& c, QMat m);
    friend bool operator==(const QMat& a, const QMat& b) = default;

    /// Lie bracket of realizations: ab - ba.
    QMat commutator(const QMat& o) const;

    /// In-place reduction to the canonical reduced row echelon form.
    /// Returns the pivot columns. Zero rows sink to the bottom.
    std::vector<std::size_t> rref();

    std::size_t rank() const;
    Rational det() const;
    /// Exact inverse; throws InputError on singular input.
    QMat inverse() const;
    bool is_nilpotent() const;
    QMat pow(std::size_t e) const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// --- vector helpers -------------------------------------------------------

Rational dot(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rational& c, const QVec& v);
bool is_zero_vec(const QVec& v);

// --- subspace computations -------------------------------------------------

/// Canonical basis of the row space: RREF with zero rows dropped.
/// Two matrices with equal row spaces produce identical results.
QMat row_space_basis(const QMat& m);

/// Canonical basis of the right kernel {x : m x = 0}, one solution per row.
QMat kernel_basis(const QMat& m);

/// Residual of v after elimination against the rows of an RREF basis.
/// Zero residual means v lies in the row space.
QVec reduce_against(const QMat& rref_basis, QVec v);

/// Coordinates of v in the rows of an RREF basis, if v lies in the span.
std::optional<QVec> coordinates_in(const QMat& rref_basis, const QVec& v);

/// Solves a x = b; empty result if inconsistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

/// Canonical basis of the intersection of two row spaces.
QMat row_space_intersection(const QMat& a, const QMat& b);

/// Stacks a on top of b (column counts must agree).
QMat vstack(const QMat& a, const QMat& b);

}  // namespace lieslice
