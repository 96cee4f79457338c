#ifndef TSY_YANGIAN_HPP
#define TSY_YANGIAN_HPP

#include "tsy/glrep.hpp"
#include "tsy/grading.hpp"
#include "tsy/matrix.hpp"
#include "tsy/report.hpp"

namespace tsy {

// Evaluation image of the generating matrix T(u): legs [aux K, module d],
// denominator u^uk with numerator leading term u^uk * I. Plain evaluation
// representations have uk = 1 and numerator u*I + E; tensor products of two
// of them have uk = 2.
struct EvalT {
    GlRep rep;  // for tensor products only d/vgrade are meaningful
    LeggedMatrix mat;
    int uk = 1;
};

EvalT make_eval(const GlRep& rep, const GradingProfile& p);

// coefficient operator block (i,j) as a one-leg matrix over the same den
LeggedMatrix op_block(const LeggedMatrix& A, int i, int j);

// T with one auxiliary leg inserted: T1 acts on (aux1, V), T2 on (aux2, V)
LeggedMatrix promote_first(const LeggedMatrix& T, const GradingProfile& p);
LeggedMatrix promote_second(const LeggedMatrix& T, const GradingProfile& p);

// R12(u-v) T1(u) T2(v) = T2(v) T1(u) R12(u-v), exactly
CheckReport check_rtt(const EvalT& T, const GradingProfile& p);

// entrywise commutator form of the RTT relation:
// [T^{ab}(u), T^{cd}(v)} = (-1)^{[a][d]+([a]+[d])[c]}/(u-v)
//                          (T^{cb}(u)T^{ad}(v) - T^{cb}(v)T^{ad}(u))
CheckReport check_comymn(const EvalT& T, const GradingProfile& p);

// product-difference antisymmetry consequence of the commutator form
CheckReport check_graded_antisymmetry(const EvalT& T, const GradingProfile& p);

// Ttil^{ab}(u) = (-1)^{[abar]([bbar]+1)} T^{bbar abar}(u) with abar = K+1-a
// satisfies the Y(N|M) relations in the flipped grading; applying the map
// twice gives back T.
CheckReport check_iso_ymn_ynm(const EvalT& T, const GradingProfile& p);
EvalT ynm_image(const EvalT& T, const GradingProfile& p, GradingProfile& flipped_out);

// coproduct on two evaluation modules: one auxiliary leg, module V1 (x) V2
EvalT tensor_evaluation(const EvalT& T1, const EvalT& T2, const GradingProfile& p);

}  // namespace tsy

#endif
