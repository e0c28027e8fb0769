#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieslice/matrix.hpp"
#include "lieslice/rational.hpp"

namespace lieslice {

/// Univariate polynomial over the rationals, dense coefficients in
/// ascending degree with no trailing zeros. The zero polynomial has an
/// empty coefficient list and degree -1.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(Rational c);
    explicit QPoly(QVec coeffs);
    static QPoly variable();  // the monomial t
    static QPoly monomial(const Rational& c, std::size_t deg);

    long deg() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const;
    const QVec& coeffs() const { return coeffs_; }

    Rational eval(const Rational& t) const;
    QPoly derivative() const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rational& c, QPoly p);
    friend bool operator==(const QPoly& a, const QPoly& b) = default;

    /// Exact Euclidean division; returns {quotient, remainder}.
    static std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);
    /// Exact quotient; throws InputError if the division leaves a remainder.
    QPoly divide_exact(const QPoly& den) const;

    std::string str(const std::string& var = "t") const;

  private:
    void trim();
    QVec coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);
/// Square-free part: p / gcd(p, p'), made monic.
QPoly squarefree_part(const QPoly& p);
/// Extended Euclid: returns (g, u, v) with u a + v b = g, g monic.
struct PolyXgcd {
    QPoly g, u, v;
};
PolyXgcd poly_xgcd(const QPoly& a, const QPoly& b);

/// All rational roots with multiplicity stripped (each root listed once).
/// The boolean is false when the polynomial does not split over Q.
std::pair<std::vector<Rational>, bool> rational_roots_of_squarefree(const QPoly& p);

/// Characteristic polynomial det(tI - m) via the Faddeev-LeVerrier
/// recurrence; exact.
QPoly char_poly(const QMat& m);
/// Minimal polynomial by linear dependence of successive powers.
QPoly min_poly(const QMat& m);
/// Evaluates p at a square matrix.
QMat eval_poly_at(const QPoly& p, const QMat& m);

// --- sparse multivariate polynomials ---------------------------------------

/// Exponent list, sorted by variable index, exponents > 0.
using Mono = std::vector<std::pair<int, int>>;

/// Sparse multivariate polynomial used for the Grassmannian equation
/// generator. Supports ring operations and evaluation only.
class MultiPoly {
  public:
    MultiPoly() = default;
    static MultiPoly constant(const Rational& c);
    static MultiPoly var(int index);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    Rational eval(const QVec& point) const;
    std::string str(const std::string& stem = "p") const;

  private:
    void prune();
    std::map<Mono, Rational> terms_;
};

/// Determinant of a square matrix of univariate polynomials (cofactor
/// expansion; intended for the small sizes the path machinery needs).
QPoly poly_mat_det(const std::vector<std::vector<QPoly>>& m);

}  // namespace lieslice
