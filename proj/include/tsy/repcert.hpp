#ifndef TSY_REPCERT_HPP
#define TSY_REPCERT_HPP

#include <map>
#include <optional>
#include <string>

#include "tsy/grading.hpp"
#include "tsy/poly.hpp"
#include "tsy/report.hpp"

namespace tsy {

enum class WeightKind { YangianLambda, TwistedMu };

// Diagonal eigenvalue series, one exact rational function per index. Every
// entry is 1 at u = infinity.
struct WeightVector {
    WeightKind kind = WeightKind::YangianLambda;
    std::map<int, RationalScalar> entries;

    const RationalScalar& at(int i) const;
    void set(int i, RationalScalar f);
};

enum class TheoremId { Y12, Y22, OddGeneral, EvenGeneral, Two2n, Necessary };

enum class GammaFn { One, TwoUOver2Up1, TwoUm1Over2Up1 };  // 1, 2u/(2u+1), (2u-1)/(2u+1)

// Certificate data: monic polynomials P_i keyed by index, the even-square
// roots R0/Q0 of R and Q, and the gamma marker (a rational constant for the
// M = 2 family, a fixed function for the others).
struct DrinfeldData {
    std::map<int, Poly> polys;  // key i <-> P_i(u); missing keys mean P_i = 1
    Poly R0 = Poly::one();
    Poly Q0 = Poly::one();
    std::optional<Rational> gamma_const;     // M = 2 family
    GammaFn gamma_fn = GammaFn::One;         // odd / even families
    char abcase = 'a';                       // odd family case

    Poly P(int i) const;
    RationalScalar gamma_function() const;   // as a rational function of u
};

RationalScalar ratio_P_shift(const Poly& P);  // P(u+1)/P(u)

// mu_abar(u) = (1/2u) mu_a(u) + ((2u-1)/2u) mu_a(-u)
RationalScalar symmetry_image(const RationalScalar& mu_a);

// verifies the symmetry relation for every index (and evenness of the fixed
// middle entry when M is odd)
CheckReport check_symmetry_mu(const WeightVector& mu, const GradingProfile& p);

enum class ShiftSolveStatus { Found, None, Undecided };
struct ShiftSolveResult {
    ShiftSolveStatus status = ShiftSolveStatus::None;
    Poly P;  // monic witness when status == Found
};

// monic P with P(u+1)/P(u) = f, by chaining rational roots; Undecided when
// irrational factors block the root analysis
ShiftSolveResult solve_shift_equation(const RationalScalar& f);

// Finite-dimensionality conditions for Y(M|N) weights: consecutive shift
// ratios away from the odd node, and a plain polynomial ratio at a = M.
// With certificates the listed identities are verified exactly; without, the
// shift solver decides each condition (found / none / undecided).
CheckReport check_yangian_fd(const WeightVector& lambda, const GradingProfile& p,
                             const std::optional<std::map<int, Poly>>& yangian_certs);

// the Yangian-side certificate polynomials of the constructed weights
std::map<int, Poly> yangian_certs_for(const DrinfeldData& data, const GradingProfile& p,
                                      TheoremId theorem);

// the lambda constructions of the sufficiency proofs
WeightVector build_lambda(const DrinfeldData& data, const GradingProfile& p, TheoremId theorem);

// evaluation-factor weights l_i(u) completing the construction for the
// twisted-gamma cases; identity factors for case (a) / gamma = 1
std::map<int, RationalScalar> evaluation_factors(const DrinfeldData& data, const GradingProfile& p,
                                                 TheoremId theorem);

// mu_i(u) = lambda_i(u) lambda_{ibar}(-u) * l_i(u) on the indices with
// i >= ibar; the remaining entries follow from the symmetry relation
WeightVector induce_twisted_mu(const WeightVector& lambda, const GradingProfile& p,
                               const std::optional<std::map<int, RationalScalar>>& extra = std::nullopt);

// per-theorem certificate conditions; conjectural-necessity conditions are
// tagged and never gate the overall verdict
CheckReport check_twisted_conditions(const WeightVector& mu, const DrinfeldData& data,
                                     const GradingProfile& p, TheoremId theorem);

// integrality constraints on the u^{-1} coefficients l_i of mu_i for even M
CheckReport check_osp_weight_integrality(const std::map<int, Rational>& l, const Rational& gamma,
                                         const GradingProfile& p);

std::string theorem_name(TheoremId t);

}  // namespace tsy

#endif
