#ifndef TSY_GLREP_HPP
#define TSY_GLREP_HPP

#include <vector>

#include "tsy/grading.hpp"
#include "tsy/matrix.hpp"
#include "tsy/qmat.hpp"
#include "tsy/report.hpp"

namespace tsy {

// Finite-dimensional gl(M|N) representation: the images pi^{ab} of the
// generators (in the normalization whose degree-1 bracket matches the RTT
// commutator), together with the grading of the module basis.
struct GlRep {
    int K = 0;
    int d = 1;
    std::vector<int> vgrade;  // size d
    std::vector<QMat> pi;     // K*K entries, each d x d; index (a-1)*K + (b-1)

    const QMat& p(int a, int b) const { return pi[static_cast<size_t>(a - 1) * K + (b - 1)]; }
    QMat& p(int a, int b) { return pi[static_cast<size_t>(a - 1) * K + (b - 1)]; }
};

GlRep zero_rep(const GradingProfile& p);

// pi^{ab} = -(-1)^{[b]} E_{ba}, i.e. ev T(u) = I - P/u
GlRep defining_rep(const GradingProfile& p);

GlRep direct_sum(const GlRep& x, const GlRep& y);

// Checks module-grade consistency (pi^{ab} homogeneous of degree [a]+[b])
// and the graded bracket
//   [pi^{ab}, pi^{cd}} = (-1)^{[a][d]+([a]+[d])[c]} (d_{cb} pi^{ad} - d_{ad} pi^{cb}),
// the degree-1 truncation of the RTT commutator. The twisted generators
// (-1)^{[b]} pi^{ab} then satisfy the textbook gl(M|N) relations.
CheckReport validate_gl_rep(const GlRep& rep, const GradingProfile& p);

// Infers vgrade from the homogeneity constraints (free flips per connected
// component are irrelevant to every sign in the calculus); throws if the rep
// is not an even module.
std::vector<int> infer_vgrade(int K, int d, const std::vector<QMat>& pi, const GradingProfile& p);

Leg op_leg(const GlRep& rep);

}  // namespace tsy

#endif
