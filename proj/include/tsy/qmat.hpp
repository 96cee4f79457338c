#ifndef TSY_QMAT_HPP
#define TSY_QMAT_HPP

#include <vector>

#include "tsy/poly.hpp"
#include "tsy/rational.hpp"

namespace tsy {

// Dense matrix over Q, row-major. Exact Gaussian elimination only; no
// pivoting heuristics beyond first-nonzero.
struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}
    static QMat identity(int n);

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const;
    friend bool operator==(const QMat&, const QMat&) = default;
    friend QMat operator*(const QMat& x, const QMat& y);
    friend QMat operator+(QMat x, const QMat& y);
    friend QMat operator-(QMat x, const QMat& y);
    friend QMat operator*(const Rational& c, QMat x);
    Rational trace() const;
};

int rank(QMat m);

// Basis of the right nullspace, one column vector per element.
std::vector<std::vector<Rational>> nullspace(QMat m);

std::vector<Rational> mat_vec(const QMat& m, const std::vector<Rational>& x);

// Characteristic polynomial in u (Faddeev-LeVerrier), monic of degree n.
Poly charpoly(const QMat& m);

}  // namespace tsy

#endif
