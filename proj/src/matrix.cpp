#include "tsy/matrix.hpp"

#include <stdexcept>

namespace tsy {

Leg aux_leg(const GradingProfile& p) { return Leg{p.K, p.grade}; }

LeggedMatrix::LeggedMatrix(std::vector<Leg> lgs) : legs(std::move(lgs)) {
    n = 1;
    for (const Leg& l : legs) {
        if (l.dim <= 0 || static_cast<int>(l.grade.size()) != l.dim)
            throw std::invalid_argument("bad leg");
        n *= l.dim;
    }
    a.assign(static_cast<size_t>(n) * n, Poly::zero());
}

LeggedMatrix LeggedMatrix::identity(std::vector<Leg> lgs) {
    LeggedMatrix m(std::move(lgs));
    for (int i = 0; i < m.n; ++i) m.at(i, i) = Poly::one();
    return m;
}

int LeggedMatrix::fuse(const std::vector<int>& comp) const {
    int flat = 0;
    for (size_t p = 0; p < legs.size(); ++p) flat = flat * legs[p].dim + comp[p];
    return flat;
}

std::vector<int> LeggedMatrix::split(int flat) const {
    std::vector<int> comp(legs.size());
    for (int p = static_cast<int>(legs.size()) - 1; p >= 0; --p) {
        comp[p] = flat % legs[p].dim;
        flat /= legs[p].dim;
    }
    return comp;
}

int LeggedMatrix::comp_grade(int leg, int flat) const {
    int stride = 1;
    for (size_t q = leg + 1; q < legs.size(); ++q) stride *= legs[q].dim;
    return legs[leg].grade[(flat / stride) % legs[leg].dim];
}

std::vector<std::vector<int>> LeggedMatrix::grade_table() const {
    std::vector<std::vector<int>> g(legs.size(), std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> c = split(i);
        for (size_t p = 0; p < legs.size(); ++p) g[p][i] = legs[p].grade[c[p]];
    }
    return g;
}

namespace {

void require_same_legs(const LeggedMatrix& A, const LeggedMatrix& B) {
    if (A.legs != B.legs) throw std::invalid_argument("leg structure mismatch");
}

}  // namespace

LeggedMatrix graded_mul(const LeggedMatrix& A, const LeggedMatrix& B) {
    require_same_legs(A, B);
    int n = A.n;
    int L = static_cast<int>(A.legs.size());
    LeggedMatrix C(A.legs);
    C.den = A.den * B.den;
    std::vector<std::vector<int>> g = A.grade_table();

    // nonzero columns per row of A, nonzero columns per row of B
    std::vector<std::vector<int>> arow(n), brow(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!A.at(i, j).is_zero()) arow[i].push_back(j);
            if (!B.at(i, j).is_zero()) brow[i].push_back(j);
        }

    for (int i = 0; i < n; ++i)
        for (int k : arow[i]) {
            const Poly& aik = A.at(i, k);
            for (int j : brow[k]) {
                // Koszul: move E_{k_p j_p} of B past E_{i_q k_q} of A for p<q
                int e = 0;
                for (int p = 0; p < L; ++p)
                    for (int q = p + 1; q < L; ++q)
                        e += (g[p][k] + g[p][j]) * (g[q][i] + g[q][k]);
                Poly term = aik * B.at(k, j);
                if (e & 1) term = -term;
                C.at(i, j) += term;
            }
        }
    return C;
}

LeggedMatrix operator*(const LeggedMatrix& A, const LeggedMatrix& B) { return graded_mul(A, B); }

LeggedMatrix operator+(const LeggedMatrix& A, const LeggedMatrix& B) {
    require_same_legs(A, B);
    LeggedMatrix C(A.legs);
    if (A.den == B.den) {
        C.den = A.den;
        for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] + B.a[i];
    } else {
        C.den = A.den * B.den;
        for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] * B.den + B.a[i] * A.den;
    }
    return C;
}

LeggedMatrix operator-(const LeggedMatrix& A, const LeggedMatrix& B) { return A + (-B); }

LeggedMatrix operator-(const LeggedMatrix& A) {
    LeggedMatrix C = A;
    for (auto& p : C.a) p = -p;
    return C;
}

LeggedMatrix scale(const LeggedMatrix& A, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    LeggedMatrix C = A;
    C.den = A.den * den;
    for (auto& p : C.a) p = p * num;
    return C;
}

LeggedMatrix scale(const LeggedMatrix& A, const Rational& c) {
    LeggedMatrix C = A;
    for (auto& p : C.a) p = c * p;
    return C;
}

bool lm_eq(const LeggedMatrix& A, const LeggedMatrix& B) {
    if (A.legs != B.legs) return false;
    for (size_t i = 0; i < A.a.size(); ++i)
        if (A.a[i] * B.den != B.a[i] * A.den) return false;
    return true;
}

std::vector<int> one_based(const std::vector<int>& comps) {
    std::vector<int> out(comps);
    for (int& x : out) ++x;
    return out;
}

void lm_residuals(const LeggedMatrix& A, const LeggedMatrix& B, CheckReport& rep) {
    if (A.legs != B.legs) {
        rep.pass = false;
        rep.note = "shape mismatch";
        return;
    }
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            Poly r = A.at(i, j) * B.den - B.at(i, j) * A.den;
            if (!r.is_zero()) {
                std::vector<int> entry = one_based(A.split(i));
                std::vector<int> cj = one_based(A.split(j));
                entry.insert(entry.end(), cj.begin(), cj.end());
                rep.fail(std::move(entry), r.str());
            }
        }
}

LeggedMatrix insert_leg(const LeggedMatrix& A, int pos, const Leg& leg) {
    std::vector<Leg> lgs = A.legs;
    lgs.insert(lgs.begin() + pos, leg);
    LeggedMatrix C(lgs);
    C.den = A.den;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            const Poly& val = A.at(i, j);
            if (val.is_zero()) continue;
            std::vector<int> ri = A.split(i), cj = A.split(j);
            for (int k = 0; k < leg.dim; ++k) {
                std::vector<int> ri2 = ri, cj2 = cj;
                ri2.insert(ri2.begin() + pos, k);
                cj2.insert(cj2.begin() + pos, k);
                C.at(C.fuse(ri2), C.fuse(cj2)) = val;
            }
        }
    return C;
}

LeggedMatrix collapse_pair(const LeggedMatrix& A, int pos) {
    if (pos + 1 >= static_cast<int>(A.legs.size())) throw std::invalid_argument("collapse_pair: no pair");
    const Leg &l1 = A.legs[pos], &l2 = A.legs[pos + 1];
    Leg merged;
    merged.dim = l1.dim * l2.dim;
    merged.grade.resize(merged.dim);
    for (int x = 0; x < l1.dim; ++x)
        for (int y = 0; y < l2.dim; ++y) merged.grade[x * l2.dim + y] = (l1.grade[x] + l2.grade[y]) & 1;
    std::vector<Leg> lgs = A.legs;
    lgs.erase(lgs.begin() + pos);
    lgs[pos] = merged;
    LeggedMatrix C(lgs);
    C.den = A.den;
    // same flat indexing; only the sign identifying End(V1) (x) End(V2) with
    // End(V1 (x) V2) is inserted: (-1)^{([i2]+[j2]) [j1]}
    for (int i = 0; i < A.n; ++i) {
        std::vector<int> ri = A.split(i);
        for (int j = 0; j < A.n; ++j) {
            const Poly& val = A.at(i, j);
            if (val.is_zero()) continue;
            std::vector<int> cj = A.split(j);
            int e = (l2.grade[ri[pos + 1]] + l2.grade[cj[pos + 1]]) * l1.grade[cj[pos]];
            C.at(i, j) = (e & 1) ? -val : val;
        }
    }
    return C;
}

LeggedMatrix map_entries(const LeggedMatrix& A, const std::function<Poly(const Poly&)>& f) {
    LeggedMatrix C = A;
    for (auto& p : C.a) p = f(p);
    C.den = f(A.den);
    if (C.den.is_zero()) throw std::invalid_argument("substitution killed the denominator");
    return C;
}

LeggedMatrix partial_transpose_t1(const LeggedMatrix& A, const GradingProfile& p) {
    if (A.legs.empty() || A.legs[0].dim != p.K) throw std::invalid_argument("t1: leg 0 is not the K-dim leg");
    LeggedMatrix C(A.legs);
    C.den = A.den;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            const Poly& val = A.at(i, j);
            if (val.is_zero()) continue;
            std::vector<int> ri = A.split(i), cj = A.split(j);
            int a = ri[0] + 1, b = cj[0] + 1;
            int sign = sign_pow(p.g(a) * (p.g(b) + 1)) * p.th(a) * p.th(b);
            ri[0] = p.bar_twisted(b) - 1;
            cj[0] = p.bar_twisted(a) - 1;
            C.at(C.fuse(ri), C.fuse(cj)) += (sign < 0) ? -val : val;
        }
    return C;
}

LeggedMatrix elementary(int i, int j, const GradingProfile& p) {
    LeggedMatrix m({aux_leg(p)});
    m.at(i - 1, j - 1) = Poly::one();
    return m;
}

LeggedMatrix permutation_P(const GradingProfile& p) {
    LeggedMatrix m({aux_leg(p), aux_leg(p)});
    for (int i = 1; i <= p.K; ++i)
        for (int j = 1; j <= p.K; ++j) {
            Poly c = Poly::constant(sign_pow(p.g(j)));
            m.at(m.fuse({i - 1, j - 1}), m.fuse({j - 1, i - 1})) = c;
        }
    return m;
}

LeggedMatrix make_Q(const GradingProfile& p) { return partial_transpose_t1(permutation_P(p), p); }

namespace {

Poly rarg_poly(RArg arg) { return arg == RArg::UMinusV ? Poly::u() - Poly::v() : Poly::u() + Poly::v(); }

}  // namespace

LeggedMatrix make_R(const GradingProfile& p, RArg arg) {
    Poly x = rarg_poly(arg);
    LeggedMatrix m = scale(LeggedMatrix::identity({aux_leg(p), aux_leg(p)}), x) - permutation_P(p);
    m.den = x;
    return m;
}

LeggedMatrix make_Rprime(const GradingProfile& p, RArg arg) {
    Poly x = rarg_poly(arg);
    LeggedMatrix m = scale(LeggedMatrix::identity({aux_leg(p), aux_leg(p)}), x) + make_Q(p);
    m.den = x;
    return m;
}

LeggedMatrix series_coeff(const LeggedMatrix& A, int j) {
    // den must be c * u^m
    if (!A.den.is_univariate_u() || A.den.terms().size() != 1)
        throw std::invalid_argument("series_coeff needs a monomial denominator");
    int m = A.den.deg_u();
    Rational c = A.den.lc_u();
    if (j > m) throw std::invalid_argument("series_coeff: coefficient below the truncation");
    LeggedMatrix C(A.legs);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            Poly co = A.at(i, k).coeff_of_u(m - j);
            if (!co.is_constant()) throw std::invalid_argument("series_coeff: entries involve v");
            Rational val = co.coeff(0, 0) / c;
            if (val != 0) C.at(i, k) = Poly::constant(val);
        }
    return C;
}

std::vector<Poly> apply_basis(const LeggedMatrix& A, int colJ) {
    int L = static_cast<int>(A.legs.size());
    std::vector<int> cj = A.split(colJ);
    std::vector<Poly> out(A.n, Poly::zero());
    for (int i = 0; i < A.n; ++i) {
        const Poly& val = A.at(i, colJ);
        if (val.is_zero()) continue;
        std::vector<int> ri = A.split(i);
        int e = 0;
        for (int q = 0; q < L; ++q) {
            int gq = A.legs[q].grade[ri[q]] + A.legs[q].grade[cj[q]];
            int pre = 0;
            for (int p = 0; p < q; ++p) pre += A.legs[p].grade[cj[p]];
            e += gq * pre;
        }
        out[i] = (e & 1) ? -val : val;
    }
    return out;
}

bool is_even_matrix(const LeggedMatrix& A) {
    std::vector<std::vector<int>> g = A.grade_table();
    int L = static_cast<int>(A.legs.size());
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            if (A.at(i, j).is_zero()) continue;
            int tot = 0;
            for (int p = 0; p < L; ++p) tot += g[p][i] + g[p][j];
            if (tot & 1) return false;
        }
    return true;
}

}  // namespace tsy
