#include "tsy/yangian.hpp"

#include <stdexcept>

namespace tsy {

EvalT make_eval(const GlRep& rep, const GradingProfile& p) {
    EvalT t;
    t.rep = rep;
    t.uk = 1;
    LeggedMatrix m({aux_leg(p), op_leg(rep)});
    m.den = Poly::u();
    for (int a = 1; a <= p.K; ++a)
        for (int b = 1; b <= p.K; ++b)
            for (int al = 0; al < rep.d; ++al)
                for (int be = 0; be < rep.d; ++be) {
                    Poly e;
                    if (a == b && al == be) e += Poly::u();
                    Rational c = rep.p(a, b).at(al, be);
                    if (c != 0) e += Poly::constant(c);
                    if (!e.is_zero()) m.at(m.fuse({a - 1, al}), m.fuse({b - 1, be})) = e;
                }
    t.mat = std::move(m);
    return t;
}

LeggedMatrix op_block(const LeggedMatrix& A, int i, int j) {
    if (A.legs.size() != 2) throw std::invalid_argument("op_block expects [aux, module] legs");
    int d = A.legs[1].dim;
    LeggedMatrix B({A.legs[1]});
    B.den = A.den;
    for (int al = 0; al < d; ++al)
        for (int be = 0; be < d; ++be)
            B.at(al, be) = A.at(A.fuse({i - 1, al}), A.fuse({j - 1, be}));
    return B;
}

LeggedMatrix promote_first(const LeggedMatrix& T, const GradingProfile& p) {
    return insert_leg(T, 1, aux_leg(p));
}

LeggedMatrix promote_second(const LeggedMatrix& T, const GradingProfile& p) {
    return insert_leg(T, 0, aux_leg(p));
}

CheckReport check_rtt(const EvalT& T, const GradingProfile& p) {
    CheckReport rep;
    rep.identity = "RTT";
    Leg V = T.mat.legs[1];
    LeggedMatrix R = insert_leg(make_R(p, RArg::UMinusV), 2, V);
    LeggedMatrix T1u = promote_first(T.mat, p);
    LeggedMatrix T2v = subst_swap_uv(promote_second(T.mat, p));
    LeggedMatrix lhs = R * T1u * T2v;
    LeggedMatrix rhs = T2v * T1u * R;
    lm_residuals(lhs, rhs, rep);
    return rep;
}

namespace {

// graded commutator of one-leg operator functions with explicit label grades
LeggedMatrix graded_comm(const LeggedMatrix& X, const LeggedMatrix& Y, int gx, int gy) {
    LeggedMatrix YX = Y * X;
    if (koszul_sign(gx, gy) < 0) return X * Y + YX;
    return X * Y - YX;
}

}  // namespace

CheckReport check_comymn(const EvalT& T, const GradingProfile& p) {
    CheckReport rep;
    rep.identity = "COM_YMN";
    int K = p.K;
    Poly umv = Poly::u() - Poly::v();
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b)
            for (int c = 1; c <= K; ++c)
                for (int d = 1; d <= K; ++d) {
                    LeggedMatrix Xab = op_block(T.mat, a, b);
                    LeggedMatrix Xcd = subst_swap_uv(op_block(T.mat, c, d));
                    LeggedMatrix lhs = scale(graded_comm(Xab, Xcd, p.g(a) + p.g(b), p.g(c) + p.g(d)), umv);
                    LeggedMatrix cbu = op_block(T.mat, c, b);
                    LeggedMatrix adu = op_block(T.mat, a, d);
                    LeggedMatrix cbv = subst_swap_uv(cbu), adv = subst_swap_uv(adu);
                    int s = sign_pow(p.g(a) * p.g(d) + (p.g(a) + p.g(d)) * p.g(c));
                    LeggedMatrix rhs = scale(cbu * adv - cbv * adu, Rational(s));
                    if (!lm_eq(lhs, rhs)) {
                        CheckReport tmp;
                        lm_residuals(lhs, rhs, tmp);
                        std::string res = tmp.failures.empty() ? "" : tmp.failures.front().residual;
                        rep.fail({a, b, c, d}, res);
                    }
                }
    return rep;
}

CheckReport check_graded_antisymmetry(const EvalT& T, const GradingProfile& p) {
    CheckReport rep;
    rep.identity = "COM_YMN_ANTISYM";
    int K = p.K;
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b)
            for (int c = 1; c <= K; ++c)
                for (int d = 1; d <= K; ++d) {
                    // T^{cb}(u)T^{ad}(v)-T^{cb}(v)T^{ad}(u)
                    //   = -(-1)^{([a]+[d])([b]+[c])} (T^{ad}(u)T^{cb}(v)-T^{ad}(v)T^{cb}(u))
                    LeggedMatrix cbu = op_block(T.mat, c, b);
                    LeggedMatrix adu = op_block(T.mat, a, d);
                    LeggedMatrix cbv = subst_swap_uv(cbu), adv = subst_swap_uv(adu);
                    LeggedMatrix lhs = cbu * adv - cbv * adu;
                    int s = -sign_pow((p.g(a) + p.g(d)) * (p.g(b) + p.g(c)));
                    LeggedMatrix rhs = scale(adu * cbv - adv * cbu, Rational(s));
                    if (!lm_eq(lhs, rhs)) rep.fail({a, b, c, d}, "antisymmetry residual nonzero");
                }
    return rep;
}

EvalT ynm_image(const EvalT& T, const GradingProfile& p, GradingProfile& flipped_out) {
    flipped_out = make_profile(p.N, p.M, ProfileKind::Yangian);
    GlRep rep;
    rep.K = p.K;
    rep.d = T.rep.d;
    rep.vgrade = T.rep.vgrade;
    rep.pi.assign(static_cast<size_t>(p.K) * p.K, QMat(rep.d, rep.d));
    for (int a = 1; a <= p.K; ++a)
        for (int b = 1; b <= p.K; ++b) {
            int ab = p.bar_yangian(a), bb = p.bar_yangian(b);
            rep.p(a, b) = Rational(sign_pow(p.g(ab) * (p.g(bb) + 1))) * T.rep.p(bb, ab);
        }
    return make_eval(rep, flipped_out);
}

CheckReport check_iso_ymn_ynm(const EvalT& T, const GradingProfile& p) {
    CheckReport rep;
    rep.identity = "ISO_NM";
    GradingProfile flipped;
    EvalT til = ynm_image(T, p, flipped);
    CheckReport inner = check_comymn(til, flipped);
    if (!inner.pass) {
        rep.pass = false;
        rep.note = "Y(N|M) relations fail for the image";
        rep.failures = inner.failures;
    }
    GradingProfile back;
    EvalT twice = ynm_image(til, flipped, back);
    if (!lm_eq(twice.mat, T.mat)) {
        rep.pass = false;
        rep.note += " map applied twice is not the identity";
    }
    return rep;
}

EvalT tensor_evaluation(const EvalT& T1, const EvalT& T2, const GradingProfile& p) {
    Leg V1 = T1.mat.legs[1], V2 = T2.mat.legs[1];
    LeggedMatrix A = insert_leg(T1.mat, 2, V2);   // [aux, V1, V2]
    LeggedMatrix B = insert_leg(T2.mat, 1, V1);   // [aux, V1, V2]
    LeggedMatrix prod = collapse_pair(A * B, 1);  // [aux, V1 (x) V2]
    EvalT t;
    t.uk = T1.uk + T2.uk;
    t.rep.K = p.K;
    t.rep.d = V1.dim * V2.dim;
    t.rep.vgrade = prod.legs[1].grade;
    t.mat = std::move(prod);
    return t;
}

}  // namespace tsy
