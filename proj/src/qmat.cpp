#include "tsy/qmat.hpp"

#include <stdexcept>

namespace tsy {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("QMat shape mismatch");
    QMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Rational& yv = y.at(k, j);
                if (yv != 0) r.at(i, j) += xv * yv;
            }
        }
    return r;
}

QMat operator+(QMat x, const QMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("QMat shape mismatch");
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
}

QMat operator-(QMat x, const QMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("QMat shape mismatch");
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
}

QMat operator*(const Rational& c, QMat x) {
    for (auto& v : x.a) v *= c;
    return x;
}

Rational QMat::trace() const {
    Rational t = 0;
    for (int i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
    return t;
}

namespace {

// returns pivot columns after in-place reduction to rref
std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        Rational inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            Rational f = m.at(i, c);
            if (f == 0) continue;
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> nullspace(QMat m) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> x(m.cols, Rational(0));
        x[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m.at(static_cast<int>(r), c);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Rational> mat_vec(const QMat& m, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != m.cols) throw std::invalid_argument("mat_vec shape mismatch");
    std::vector<Rational> r(m.rows, Rational(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && x[j] != 0) r[i] += m.at(i, j) * x[j];
    return r;
}

Poly charpoly(const QMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("charpoly needs a square matrix");
    int n = m.rows;
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMat Mk = QMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        Mk = m * Mk;
        Rational ck = -Mk.trace() / k;
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) Mk.at(i, i) += ck;
    }
    Poly p;
    for (int i = 0; i <= n; ++i) p.add_term(i, 0, c[i]);
    return p;
}

}  // namespace tsy
