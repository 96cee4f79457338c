#ifndef TSY_POLY_HPP
#define TSY_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tsy/rational.hpp"

namespace tsy {

// Exponent pair of a monomial u^du * v^dv.
struct ExpKey {
    int du = 0;
    int dv = 0;
    friend bool operator==(const ExpKey&, const ExpKey&) = default;
};

// Graded lex on (du, dv): total degree first, then du, then dv.
struct ExpLess {
    bool operator()(const ExpKey& a, const ExpKey& b) const {
        int ta = a.du + a.dv, tb = b.du + b.dv;
        if (ta != tb) return ta < tb;
        if (a.du != b.du) return a.du < b.du;
        return a.dv < b.dv;
    }
};

// Sparse exact polynomial in u and v over the rationals. No zero terms are
// stored; equality is term-map equality. Univariate polynomials simply have
// dv = 0 in every term.
class Poly {
  public:
    using TermMap = std::map<ExpKey, Rational, ExpLess>;

    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c);
    static Poly one() { return constant(1); }
    static Poly u() { return monomial(1, 0, 1); }
    static Poly v() { return monomial(0, 1, 1); }
    static Poly monomial(int du, int dv, const Rational& c);

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_univariate_u() const;
    int deg_u() const;
    int deg_v() const;
    Rational coeff(int du, int dv) const;

    void add_term(int du, int dv, const Rational& c);

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);
    Poly operator-() const;
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(int k) const;

    // substitutions
    Poly shift_u(const Rational& c) const;  // u -> u + c
    Poly neg_u() const;                     // u -> -u
    Poly neg_v() const;                     // v -> -v
    Poly swap_uv() const;                   // u <-> v
    Poly eval_u(const Rational& r) const;   // u -> r, result in v
    Poly eval_v(const Rational& r) const;   // v -> r, result in u
    Rational eval(const Rational& u, const Rational& v) const;

    // univariate helpers (require is_univariate_u unless noted)
    std::vector<Rational> coeffs_u() const;  // index = power of u
    Rational lc_u() const;                   // leading coefficient in u
    Poly coeff_of_u(int k) const;            // coefficient of u^k, a Poly in v

    std::string str() const;  // canonical, graded-lex descending

  private:
    TermMap t_;
};

// All rational roots with multiplicity, by the rational-root theorem applied
// to the integer-cleared coefficients. p must be a nonzero univariate
// polynomial in u.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

// Quotient of p by the linear factor (u - r); second member is the remainder.
std::pair<Poly, Rational> divide_linear_u(const Poly& p, const Rational& r);

// Rational function of u as a (numerator, denominator) pair. Equality is
// decided by cross-multiplication; no normalization or gcd is performed.
struct RationalScalar {
    Poly num = Poly::zero();
    Poly den = Poly::one();

    RationalScalar() = default;
    RationalScalar(Poly n, Poly d);
    static RationalScalar constant(const Rational& c) { return {Poly::constant(c), Poly::one()}; }
    static RationalScalar one() { return constant(1); }

    RationalScalar neg_u() const { return {num.neg_u(), den.neg_u()}; }
    RationalScalar shift_u(const Rational& c) const { return {num.shift_u(c), den.shift_u(c)}; }

    friend RationalScalar operator*(const RationalScalar& a, const RationalScalar& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend RationalScalar operator/(const RationalScalar& a, const RationalScalar& b);
    friend RationalScalar operator+(const RationalScalar& a, const RationalScalar& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalScalar operator-(const RationalScalar& a, const RationalScalar& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
};

bool scalar_eq(const RationalScalar& a, const RationalScalar& b);
bool scalar_is_zero(const RationalScalar& a);

// f(u) = f(-u) as rational functions.
bool scalar_is_even(const RationalScalar& a);

// num and den of equal degree with equal leading coefficients, i.e. the
// series value at u = infinity is 1.
bool scalar_is_one_at_infinity(const RationalScalar& a);

// Coefficient of u^{-1} in the expansion of a at u = infinity (a must be 1 at
// infinity).
Rational scalar_l_coeff(const RationalScalar& a);

}  // namespace tsy

#endif
