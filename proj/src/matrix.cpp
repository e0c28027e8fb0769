#include "lieslice/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace lieslice {

QMat::QMat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
    QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw InputError("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMat QMat::parse(const std::vector<std::vector<std::string>>& entries) {
    std::vector<QVec> rows;
    rows.reserve(entries.size());
    for (const auto& er : entries) {
        QVec r;
        r.reserve(er.size());
        for (const auto& s : er) r.push_back(Rational::parse(s));
        rows.push_back(std::move(r));
    }
    return from_rows(rows);
}

QVec QMat::row_vec(std::size_t i) const {
    return QVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void QMat::set_row(std::size_t i, const QVec& v) {
    if (v.size() != cols_) throw InputError("row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

bool QMat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool QMat::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

QVec QMat::diagonal() const {
    QVec d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = at(i, i);
    return d;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational QMat::trace() const {
    if (!is_square()) throw InputError("trace of a non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

QMat QMat::operator-() const {
    QMat m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
}

QMat& QMat::operator+=(const QMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

QMat& QMat::operator-=(const QMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in *");
    QMat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

QMat operator*(const Rational& c, QMat m) {
    for (auto& x : m.data_) x *= c;
    return m;
}

QMat QMat::commutator(const QMat& o) const {
    return (*this) * o - o * (*this);
}

std::vector<std::size_t> QMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && at(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Rational inv = Rational(1) / at(r, c);
        for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Rational f = at(i, c);
            for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t QMat::rank() const {
    QMat m = *this;
    return m.rref().size();
}

Rational QMat::det() const {
    if (!is_square()) throw InputError("determinant of a non-square matrix");
    QMat m = *this;
    Rational d = 1;
    for (std::size_t c = 0; c < m.cols_; ++c) {
        std::size_t p = c;
        while (p < m.rows_ && m.at(p, c).is_zero()) ++p;
        if (p == m.rows_) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < m.cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rational inv = Rational(1) / m.at(c, c);
        for (std::size_t i = c + 1; i < m.rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c) * inv;
            for (std::size_t j = c; j < m.cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

QMat QMat::inverse() const {
    if (!is_square()) throw InputError("inverse of a non-square matrix");
    std::size_t n = rows_;
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    aug.rref();
    for (std::size_t i = 0; i < n; ++i)
        if (!(aug.at(i, i) == Rational(1))) throw InputError("matrix is singular");
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

bool QMat::is_nilpotent() const {
    if (!is_square()) return false;
    QMat p = *this;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (p.is_zero()) return true;
        p = p * (*this);
    }
    return p.is_zero();
}

QMat QMat::pow(std::size_t e) const {
    if (!is_square()) throw InputError("power of a non-square matrix");
    QMat acc = identity(rows_);
    QMat base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::string QMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec scale(const Rational& c, const QVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero_vec(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

QMat row_space_basis(const QMat& m) {
    QMat r = m;
    std::size_t rk = r.rref().size();
    QMat out(rk, m.cols());
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
    return out;
}

QMat kernel_basis(const QMat& m) {
    QMat r = m;
    std::vector<std::size_t> pivots = r.rref();
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
    QMat out(free_cols.size(), m.cols());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        out.at(f, free_cols[f]) = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p)
            out.at(f, pivots[p]) = -r.at(p, free_cols[f]);
    }
    // Echelon order with respect to leading entries, for a canonical result.
    return row_space_basis(out);
}

QVec reduce_against(const QMat& rref_basis, QVec v) {
    if (rref_basis.rows() > 0 && v.size() != rref_basis.cols())
        throw InputError("vector length mismatch in reduction");
    for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < rref_basis.cols() && rref_basis.at(i, lead).is_zero()) ++lead;
        if (lead == rref_basis.cols()) continue;
        if (v[lead].is_zero()) continue;
        Rational f = v[lead] / rref_basis.at(i, lead);
        for (std::size_t j = lead; j < v.size(); ++j) v[j] -= f * rref_basis.at(i, j);
    }
    return v;
}

std::optional<QVec> coordinates_in(const QMat& rref_basis, const QVec& v) {
    QVec coeff(rref_basis.rows(), Rational(0));
    QVec w = v;
    for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < rref_basis.cols() && rref_basis.at(i, lead).is_zero()) ++lead;
        if (lead == rref_basis.cols()) continue;
        if (w[lead].is_zero()) continue;
        coeff[i] = w[lead] / rref_basis.at(i, lead);
        for (std::size_t j = lead; j < w.size(); ++j) w[j] -= coeff[i] * rref_basis.at(i, j);
    }
    if (!is_zero_vec(w)) return std::nullopt;
    return coeff;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
    if (a.rows() != b.size()) throw InputError("shape mismatch in solve");
    QMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    QVec x(a.cols(), Rational(0));
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug.at(p, a.cols());
    return x;
}

QMat row_space_intersection(const QMat& a, const QMat& b) {
    QMat ra = row_space_basis(a);
    QMat rb = row_space_basis(b);
    if (ra.rows() == 0 || rb.rows() == 0) return QMat(0, a.cols());
    // Coefficient vectors c with c·ra inside the span of rb: kernel of the
    // map c -> residual of c·ra against rb.
    QMat residuals(ra.rows(), ra.cols());
    for (std::size_t i = 0; i < ra.rows(); ++i)
        residuals.set_row(i, reduce_against(rb, ra.row_vec(i)));
    QMat coeff = kernel_basis(residuals.transpose());
    QMat result(coeff.rows(), ra.cols());
    for (std::size_t i = 0; i < coeff.rows(); ++i) {
        QVec v(ra.cols(), Rational(0));
        for (std::size_t j = 0; j < ra.rows(); ++j)
            if (!coeff.at(i, j).is_zero()) v = add(v, scale(coeff.at(i, j), ra.row_vec(j)));
        result.set_row(i, v);
    }
    return row_space_basis(result);
}

QMat vstack(const QMat& a, const QMat& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw InputError("column mismatch in vstack");
    QMat m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

}  // namespace lieslice
