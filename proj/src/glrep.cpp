#include "tsy/glrep.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>

namespace tsy {

GlRep zero_rep(const GradingProfile& p) {
    GlRep r;
    r.K = p.K;
    r.d = 1;
    r.vgrade = {0};
    r.pi.assign(static_cast<size_t>(p.K) * p.K, QMat(1, 1));
    return r;
}

GlRep defining_rep(const GradingProfile& p) {
    GlRep r;
    r.K = p.K;
    r.d = p.K;
    r.vgrade = p.grade;
    r.pi.assign(static_cast<size_t>(p.K) * p.K, QMat(p.K, p.K));
    for (int a = 1; a <= p.K; ++a)
        for (int b = 1; b <= p.K; ++b) r.p(a, b).at(b - 1, a - 1) = -sign_pow(p.g(b));
    return r;
}

GlRep direct_sum(const GlRep& x, const GlRep& y) {
    if (x.K != y.K) throw std::invalid_argument("direct_sum: mismatched K");
    GlRep r;
    r.K = x.K;
    r.d = x.d + y.d;
    r.vgrade = x.vgrade;
    r.vgrade.insert(r.vgrade.end(), y.vgrade.begin(), y.vgrade.end());
    r.pi.assign(static_cast<size_t>(r.K) * r.K, QMat(r.d, r.d));
    for (int a = 1; a <= r.K; ++a)
        for (int b = 1; b <= r.K; ++b) {
            QMat& m = r.p(a, b);
            for (int i = 0; i < x.d; ++i)
                for (int j = 0; j < x.d; ++j) m.at(i, j) = x.p(a, b).at(i, j);
            for (int i = 0; i < y.d; ++i)
                for (int j = 0; j < y.d; ++j) m.at(x.d + i, x.d + j) = y.p(a, b).at(i, j);
        }
    return r;
}

std::vector<int> infer_vgrade(int K, int d, const std::vector<QMat>& pi, const GradingProfile& p) {
    // 2-color the module basis: pi^{ab}_{alpha beta} != 0 forces
    // g(alpha)+g(beta) = [a]+[b] mod 2
    std::vector<int> g(d, -1);
    std::vector<std::vector<std::pair<int, int>>> adj(d);  // (other, parity)
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b) {
            const QMat& m = pi[static_cast<size_t>(a - 1) * K + (b - 1)];
            int par = (p.g(a) + p.g(b)) & 1;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (m.at(i, j) != 0) {
                        adj[i].push_back({j, par});
                        adj[j].push_back({i, par});
                    }
        }
    for (int s = 0; s < d; ++s) {
        if (g[s] >= 0) continue;
        g[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [y, par] : adj[x]) {
                int want = (g[x] + par) & 1;
                if (g[y] < 0) {
                    g[y] = want;
                    q.push(y);
                } else if (g[y] != want) {
                    throw std::invalid_argument("representation module admits no consistent grading");
                }
            }
        }
    }
    return g;
}

CheckReport validate_gl_rep(const GlRep& rep, const GradingProfile& p) {
    CheckReport r;
    r.identity = "GLREP";
    int K = p.K, d = rep.d;
    if (rep.K != K || static_cast<int>(rep.vgrade.size()) != d ||
        rep.pi.size() != static_cast<size_t>(K) * K) {
        r.pass = false;
        r.note = "shape mismatch";
        return r;
    }
    for (const QMat& m : rep.pi)
        if (m.rows != d || m.cols != d) {
            r.pass = false;
            r.note = "pi block of wrong size";
            return r;
        }
    // evenness
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b) {
            int par = (p.g(a) + p.g(b)) & 1;
            const QMat& m = rep.p(a, b);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (m.at(i, j) != 0 && ((rep.vgrade[i] + rep.vgrade[j]) & 1) != par)
                        r.fail({a, b, i + 1, j + 1}, "entry breaks module grading");
        }
    // bracket
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b)
            for (int c = 1; c <= K; ++c)
                for (int e = 1; e <= K; ++e) {
                    int gab = (p.g(a) + p.g(b)) & 1, gce = (p.g(c) + p.g(e)) & 1;
                    QMat lhs = rep.p(a, b) * rep.p(c, e) -
                               Rational(koszul_sign(gab, gce)) * (rep.p(c, e) * rep.p(a, b));
                    QMat rhs(d, d);
                    int s = sign_pow(p.g(a) * p.g(e) + (p.g(a) + p.g(e)) * p.g(c));
                    if (c == b) rhs = rhs + Rational(s) * rep.p(a, e);
                    if (a == e) rhs = rhs - Rational(s) * rep.p(c, b);
                    if (!(lhs - rhs).is_zero()) r.fail({a, b, c, e}, "bracket residual nonzero");
                }
    return r;
}

Leg op_leg(const GlRep& rep) { return Leg{rep.d, rep.vgrade}; }

}  // namespace tsy
