#include "tsy/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tsy {

Poly Poly::constant(const Rational& c) { return monomial(0, 0, c); }

Poly Poly::monomial(int du, int dv, const Rational& c) {
    Poly p;
    p.add_term(du, dv, c);
    return p;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == ExpKey{0, 0});
}

bool Poly::is_univariate_u() const {
    for (const auto& [e, c] : t_)
        if (e.dv != 0) return false;
    return true;
}

int Poly::deg_u() const {
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e.du);
    return d;
}

int Poly::deg_v() const {
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e.dv);
    return d;
}

Rational Poly::coeff(int du, int dv) const {
    auto it = t_.find(ExpKey{du, dv});
    return it == t_.end() ? Rational(0) : it->second;
}

void Poly::add_term(int du, int dv, const Rational& c) {
    if (c == 0) return;
    if (du < 0 || dv < 0) throw std::invalid_argument("negative exponent");
    ExpKey k{du, dv};
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& rhs) {
    for (const auto& [e, c] : rhs.t_) add_term(e.du, e.dv, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    for (const auto& [e, c] : rhs.t_) add_term(e.du, e.dv, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.add_term(ea.du + eb.du, ea.dv + eb.dv, ca * cb);
    return r;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly r;
    if (c == 0) return r;
    for (const auto& [e, k] : p.t_) r.add_term(e.du, e.dv, c * k);
    return r;
}

Poly Poly::operator-() const { return Rational(-1) * *this; }

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly r = Poly::one();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly Poly::shift_u(const Rational& c) const {
    // binomial expansion of (u + c)^du per term
    int d = deg_u();
    std::vector<std::vector<Rational>> binom(d + 1);
    for (int n = 0; n <= d; ++n) {
        binom[n].assign(n + 1, Rational(0));
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : Rational(0));
    }
    Poly r;
    for (const auto& [e, coef] : t_) {
        Rational cp = 1;
        for (int j = e.du; j >= 0; --j) {
            r.add_term(j, e.dv, coef * binom[e.du][j] * cp);
            cp *= c;
        }
    }
    return r;
}

Poly Poly::neg_u() const {
    Poly r;
    for (const auto& [e, c] : t_) r.add_term(e.du, e.dv, (e.du % 2 == 0) ? c : -c);
    return r;
}

Poly Poly::neg_v() const {
    Poly r;
    for (const auto& [e, c] : t_) r.add_term(e.du, e.dv, (e.dv % 2 == 0) ? c : -c);
    return r;
}

Poly Poly::swap_uv() const {
    Poly r;
    for (const auto& [e, c] : t_) r.add_term(e.dv, e.du, c);
    return r;
}

Poly Poly::eval_u(const Rational& x) const {
    Poly r;
    for (const auto& [e, c] : t_) {
        Rational p = 1;
        for (int i = 0; i < e.du; ++i) p *= x;
        r.add_term(0, e.dv, c * p);
    }
    return r;
}

Poly Poly::eval_v(const Rational& x) const {
    Poly r;
    for (const auto& [e, c] : t_) {
        Rational p = 1;
        for (int i = 0; i < e.dv; ++i) p *= x;
        r.add_term(e.du, 0, c * p);
    }
    return r;
}

Rational Poly::eval(const Rational& x, const Rational& y) const {
    Rational r = 0;
    for (const auto& [e, c] : t_) {
        Rational p = c;
        for (int i = 0; i < e.du; ++i) p *= x;
        for (int i = 0; i < e.dv; ++i) p *= y;
        r += p;
    }
    return r;
}

std::vector<Rational> Poly::coeffs_u() const {
    if (!is_univariate_u()) throw std::invalid_argument("not univariate in u");
    std::vector<Rational> c(deg_u() + 1, Rational(0));
    for (const auto& [e, k] : t_) c[e.du] = k;
    return c;
}

Rational Poly::lc_u() const {
    if (is_zero()) return 0;
    int d = deg_u();
    Poly top = coeff_of_u(d);
    if (!top.is_constant()) throw std::invalid_argument("leading coefficient involves v");
    return top.coeff(0, 0);
}

Poly Poly::coeff_of_u(int k) const {
    Poly r;
    for (const auto& [e, c] : t_)
        if (e.du == k) r.add_term(0, e.dv, c);
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1) && (e.du + e.dv > 0);
        if (!unit) os << rat_str(a);
        if (e.du > 0) {
            if (!unit) os << "*";
            os << "u";
            if (e.du > 1) os << "^" << e.du;
        }
        if (e.dv > 0) {
            if (e.du > 0 || !unit) os << "*";
            os << "v";
            if (e.dv > 1) os << "^" << e.dv;
        }
        first = false;
    }
    return os.str();
}

std::pair<Poly, Rational> divide_linear_u(const Poly& p, const Rational& r) {
    // synthetic division by (u - r)
    std::vector<Rational> c = p.coeffs_u();
    int d = static_cast<int>(c.size()) - 1;
    if (d < 0) return {Poly::zero(), Rational(0)};
    std::vector<Rational> q(std::max(d, 0), Rational(0));
    Rational carry = 0;
    for (int i = d; i >= 1; --i) {
        carry = c[i] + carry * r;
        q[i - 1] = carry;
    }
    Rational rem = c[0] + carry * r;
    Poly quot;
    for (size_t i = 0; i < q.size(); ++i) quot.add_term(static_cast<int>(i), 0, q[i]);
    return {quot, rem};
}

namespace {

// trial division + Pollard rho, enough to enumerate divisors exactly
void factor_into(mpz_class n, std::map<std::string, std::pair<mpz_class, int>>& out);

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2, y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<std::string, std::pair<mpz_class, int>>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        auto& slot = out[n.get_str()];
        slot.first = n;
        slot.second += 1;
        return;
    }
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n % p == 0) {
            factor_into(p, out);
            factor_into(n / p, out);
            return;
        }
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::map<std::string, std::pair<mpz_class, int>> f;
    factor_into(n, f);
    std::vector<mpz_class> div{1};
    for (const auto& [_, pe] : f) {
        size_t sz = div.size();
        mpz_class pk = 1;
        for (int k = 1; k <= pe.second; ++k) {
            pk *= pe.first;
            for (size_t i = 0; i < sz; ++i) div.push_back(div[i] * pk);
        }
    }
    return div;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
    std::vector<Rational> c = p.coeffs_u();
    std::vector<std::pair<Rational, int>> roots;

    // strip u^m
    size_t lo = 0;
    while (lo < c.size() && c[lo] == 0) ++lo;
    if (lo > 0) roots.emplace_back(Rational(0), static_cast<int>(lo));
    Poly q;
    for (size_t i = lo; i < c.size(); ++i) q.add_term(static_cast<int>(i - lo), 0, c[i]);
    if (q.deg_u() == 0) return roots;

    // clear denominators
    mpz_class lcm = 1;
    for (const auto& [e, k] : q.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), k.get_den().get_mpz_t());
    mpz_class a0 = abs(Rational(lcm * q.coeff(0, 0)).get_num());
    mpz_class an = abs(Rational(lcm * q.coeff(q.deg_u(), 0)).get_num());

    std::vector<Rational> candidates;
    for (const mpz_class& pn : divisors(a0))
        for (const mpz_class& qd : divisors(an)) {
            Rational r(pn, qd);
            r.canonicalize();
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rational& r : candidates) {
        int mult = 0;
        while (q.deg_u() > 0) {
            auto [quot, rem] = divide_linear_u(q, r);
            if (rem != 0) break;
            q = quot;
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

RationalScalar::RationalScalar(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::invalid_argument("RationalScalar with zero denominator");
}

RationalScalar operator/(const RationalScalar& a, const RationalScalar& b) {
    if (b.num.is_zero()) throw std::invalid_argument("division by zero RationalScalar");
    return {a.num * b.den, a.den * b.num};
}

bool scalar_eq(const RationalScalar& a, const RationalScalar& b) { return a.num * b.den == b.num * a.den; }

bool scalar_is_zero(const RationalScalar& a) { return a.num.is_zero(); }

bool scalar_is_even(const RationalScalar& a) { return a.num * a.den.neg_u() == a.num.neg_u() * a.den; }

bool scalar_is_one_at_infinity(const RationalScalar& a) {
    if (a.num.is_zero()) return false;
    return a.num.deg_u() == a.den.deg_u() && a.num.lc_u() == a.den.lc_u();
}

Rational scalar_l_coeff(const RationalScalar& a) {
    if (!scalar_is_one_at_infinity(a)) throw std::invalid_argument("series does not start at 1");
    Poly diff = a.num - a.den;  // degree <= deg(den) - 1
    int d = a.den.deg_u();
    if (diff.is_zero() || diff.deg_u() < d - 1) return 0;
    return diff.lc_u() / a.den.lc_u();
}

}  // namespace tsy
