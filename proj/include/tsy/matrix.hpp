#ifndef TSY_MATRIX_HPP
#define TSY_MATRIX_HPP

#include <functional>
#include <string>
#include <vector>

#include "tsy/grading.hpp"
#include "tsy/poly.hpp"
#include "tsy/qmat.hpp"
#include "tsy/report.hpp"

namespace tsy {

// One tensor factor: a graded vector space given by its dimension and the
// grade of each basis vector.
struct Leg {
    int dim = 1;
    std::vector<int> grade;  // size dim, values 0/1
    friend bool operator==(const Leg&, const Leg&) = default;
};

Leg aux_leg(const GradingProfile& p);

// Matrix on a graded tensor product of legs, stored as coefficients in the
// basis E_{i1 j1} (x) E_{i2 j2} (x) ... of the graded tensor algebra, with a
// single scalar polynomial denominator. Products insert Koszul signs; two
// matrices are equal iff cross-multiplied numerators agree entrywise.
// Flat index order: leg 0 slowest, last leg fastest.
class LeggedMatrix {
  public:
    std::vector<Leg> legs;
    Poly den = Poly::one();
    std::vector<Poly> a;  // n*n row-major
    int n = 1;

    LeggedMatrix() = default;
    explicit LeggedMatrix(std::vector<Leg> lgs);
    static LeggedMatrix identity(std::vector<Leg> lgs);

    Poly& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Poly& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    int fuse(const std::vector<int>& comp) const;       // 0-based components
    std::vector<int> split(int flat) const;             // 0-based components
    int comp_grade(int leg, int flat) const;            // grade of a leg component
    std::vector<std::vector<int>> grade_table() const;  // [leg][flat index]
};

LeggedMatrix graded_mul(const LeggedMatrix& A, const LeggedMatrix& B);
LeggedMatrix operator*(const LeggedMatrix& A, const LeggedMatrix& B);
LeggedMatrix operator+(const LeggedMatrix& A, const LeggedMatrix& B);
LeggedMatrix operator-(const LeggedMatrix& A, const LeggedMatrix& B);
LeggedMatrix operator-(const LeggedMatrix& A);

// multiplies numerator entries by num and the denominator by den
LeggedMatrix scale(const LeggedMatrix& A, const Poly& num, const Poly& den = Poly::one());
LeggedMatrix scale(const LeggedMatrix& A, const Rational& c);

bool lm_eq(const LeggedMatrix& A, const LeggedMatrix& B);

// appends failures (multi-index row, col) with the cross-multiplied residual
void lm_residuals(const LeggedMatrix& A, const LeggedMatrix& B, CheckReport& rep);

// new identity leg spliced in at position pos
LeggedMatrix insert_leg(const LeggedMatrix& A, int pos, const Leg& leg);

// merge legs pos and pos+1 into one leg on the product space; entries pick up
// the sign making within-leg composition match the graded two-leg product
LeggedMatrix collapse_pair(const LeggedMatrix& A, int pos);

LeggedMatrix map_entries(const LeggedMatrix& A, const std::function<Poly(const Poly&)>& f);

inline LeggedMatrix subst_neg_u(const LeggedMatrix& A) {
    return map_entries(A, [](const Poly& p) { return p.neg_u(); });
}
inline LeggedMatrix subst_swap_uv(const LeggedMatrix& A) {
    return map_entries(A, [](const Poly& p) { return p.swap_uv(); });
}
inline LeggedMatrix subst_neg_uv(const LeggedMatrix& A) {
    return map_entries(A, [](const Poly& p) { return p.neg_u().neg_v(); });
}

// super transposition on leg 0: entry (a,b) -> (bbar, abar) with the sign
// (-1)^{[a]([b]+1)} theta_a theta_b; identity is fixed
LeggedMatrix partial_transpose_t1(const LeggedMatrix& A, const GradingProfile& p);

// single-leg matrix unit E_{ij}, 1-based indices
LeggedMatrix elementary(int i, int j, const GradingProfile& p);

// graded permutation P = sum (-1)^{[j]} E_{ij} (x) E_{ji}
LeggedMatrix permutation_P(const GradingProfile& p);

// Q = P^{t1}
LeggedMatrix make_Q(const GradingProfile& p);

enum class RArg { UMinusV, UPlusV };

// R(x) = I - P/x and R'(x) = I + Q/x with x = u-v or u+v
LeggedMatrix make_R(const GradingProfile& p, RArg arg);
LeggedMatrix make_Rprime(const GradingProfile& p, RArg arg);

// series coefficient S_(j) of S = den^{-1} num with den = c*u^m
LeggedMatrix series_coeff(const LeggedMatrix& A, int j);

// action on the product basis vector e_J, with the Koszul signs of operators
// moving past vector factors; returns the coefficient column (denominator
// ignored)
std::vector<Poly> apply_basis(const LeggedMatrix& A, int colJ);

// entries vanish unless row and column multi-index grades agree mod 2
bool is_even_matrix(const LeggedMatrix& A);

std::vector<int> one_based(const std::vector<int>& comps);

}  // namespace tsy

#endif
