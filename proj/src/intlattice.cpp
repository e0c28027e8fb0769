#include "lieslice/intlattice.hpp"

#include <algorithm>

#include "lieslice/errors.hpp"

namespace lieslice {

namespace {

ZMat zident(std::size_t n) {
    ZMat m(n, ZVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMat zmul(const ZMat& a, const ZMat& b) {
    std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    ZMat m(r, ZVec(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
        }
    return m;
}

}  // namespace

Smith smith_normal_form(const ZMat& a) {
    std::size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
    Smith s{zident(r), a, zident(c)};
    ZMat& d = s.d;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(s.u[i], s.u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : d) std::swap(row[i], row[j]);
        for (auto& row : s.v) std::swap(row[i], row[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t j = 0; j < c; ++j) d[dst][j] += f * d[src][j];
        for (std::size_t j = 0; j < r; ++j) s.u[dst][j] += f * s.u[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t i = 0; i < r; ++i) d[i][dst] += f * d[i][src];
        for (std::size_t i = 0; i < c; ++i) s.v[i][dst] += f * s.v[i][src];
    };

    std::size_t t = 0;
    while (t < r && t < c) {
        // Locate a nonzero entry of least magnitude in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (d[i][j] == 0) continue;
                mpz_class m = abs(d[i][j]);
                if (!found || m < best) {
                    best = m;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        bool clean = true;
        for (std::size_t i = t + 1; i < r; ++i)
            if (d[i][t] != 0) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
                add_row(i, t, -q);
                if (d[i][t] != 0) clean = false;
            }
        for (std::size_t j = t + 1; j < c; ++j)
            if (d[t][j] != 0) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
                add_col(j, t, -q);
                if (d[t][j] != 0) clean = false;
            }
        if (!clean) continue;  // remainders shrank; pick a new pivot

        // Enforce the divisibility chain before advancing.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < r && divides_all; ++i)
            for (std::size_t j = t + 1; j < c && divides_all; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    add_row(t, i, 1);
                    divides_all = false;
                }
        if (!divides_all) continue;

        if (d[t][t] < 0) {
            for (std::size_t j = 0; j < c; ++j) d[t][j] = -d[t][j];
            for (std::size_t j = 0; j < r; ++j) s.u[t][j] = -s.u[t][j];
        }
        ++t;
    }
    return s;
}

ZMat integer_kernel(const ZMat& a) {
    if (a.empty()) return {};
    std::size_t c = a[0].size();
    Smith s = smith_normal_form(a);
    std::size_t rank = 0;
    while (rank < s.d.size() && rank < c && s.d[rank][rank] != 0) ++rank;
    ZMat out;
    for (std::size_t j = rank; j < c; ++j) {
        ZVec col(c);
        for (std::size_t i = 0; i < c; ++i) col[i] = s.v[i][j];
        out.push_back(std::move(col));
    }
    return out;
}

std::optional<ZMat> integer_right_inverse(const ZMat& w) {
    std::size_t r = w.size();
    if (r == 0) return ZMat{};
    std::size_t m = w[0].size();
    if (m < r) return std::nullopt;
    Smith s = smith_normal_form(w);
    for (std::size_t i = 0; i < r; ++i)
        if (s.d[i][i] != 1) return std::nullopt;
    // w = u^-1 [I 0] v^-1, so x = v [I; 0] u satisfies w x = I.
    ZMat embed(m, ZVec(r, 0));
    for (std::size_t i = 0; i < r; ++i) embed[i][i] = 1;
    return zmul(zmul(s.v, embed), s.u);
}

ZVec primitive_integer_vector(const QVec& v) {
    if (is_zero_vec(v)) throw InputError("zero vector has no primitive direction");
    mpz_class l = 1;
    for (const auto& x : v) {
        mpz_class d = x.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    ZVec z(v.size());
    mpz_class content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        z[i] = v[i].num() * (l / v[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    int lead_sign = 0;
    for (auto& x : z) {
        x /= content;
        if (lead_sign == 0 && x != 0) lead_sign = sgn(x);
    }
    if (lead_sign < 0)
        for (auto& x : z) x = -x;
    return z;
}

QVec to_qvec(const ZVec& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    return q;
}

ZMat zmat_from_rows(const std::vector<ZVec>& rows) {
    return rows;
}

}  // namespace lieslice
