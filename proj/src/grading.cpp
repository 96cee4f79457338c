#include "tsy/grading.hpp"

#include <stdexcept>

namespace tsy {

GradingProfile make_profile(int M, int N, ProfileKind kind,
                            const std::optional<std::vector<int>>& theta_override) {
    if (M < 0 || N < 0 || M + N == 0) throw std::invalid_argument("make_profile: bad (M,N)");
    GradingProfile p;
    p.M = M;
    p.N = N;
    p.K = M + N;
    p.kind = kind;
    p.grade.assign(p.K, 0);
    for (int a = M + 1; a <= p.K; ++a) p.grade[a - 1] = 1;
    p.theta.assign(p.K, +1);
    p.theta0 = +1;
    if (kind == ProfileKind::Yangian) {
        if (theta_override) throw std::invalid_argument("theta override is a twisted-profile notion");
        return p;
    }

    if (M % 2 == 1 && N % 2 == 1) throw std::invalid_argument("make_profile: MN odd, no twisted superYangian");
    if (N % 2 == 1) throw std::invalid_argument("make_profile: N odd; use the Y(N|M)^+ mirror");

    if (theta_override) {
        if (static_cast<int>(theta_override->size()) != p.K)
            throw std::invalid_argument("theta override has wrong length");
        for (int t : *theta_override)
            if (t != 1 && t != -1) throw std::invalid_argument("theta entries must be +-1");
        p.theta = *theta_override;
        for (int a = 1; a <= p.K; ++a) {
            int lhs = sign_pow(p.g(a)) * p.th(a) * p.th(p.bar_twisted(a));
            if (lhs != p.theta0) throw std::invalid_argument("theta override violates the order-2 constraint");
        }
        return p;
    }

    // theta_a = sg((2M+N+1)/2 - a) on the fermionic block, +1 on the bosonic
    // block; this satisfies the constraint with theta0 = +1.
    int n = N / 2;
    for (int a = M + 1; a <= p.K; ++a) p.theta[a - 1] = (a <= M + n) ? +1 : -1;
    return p;
}

RootSystem make_root_system(int M, int n) {
    RootSystem rs;
    rs.M = M;
    rs.n = n;
    int K = M + 2 * n;
    auto add_plus = [&](int a, int b) { rs.plus.insert({a, b}); };
    for (int a = 1; a <= M; ++a)
        for (int b = a + 1; b <= M; ++b) add_plus(a, b);
    for (int a = M + 1; a <= K; ++a)
        for (int b = a + 1; b <= K; ++b) add_plus(a, b);
    for (int a = 1; a <= M; ++a)
        for (int b = M + n + 1; b <= K; ++b) add_plus(a, b);
    for (int a = M + n + 1; a <= K; ++a)
        for (int b = 1; b <= M; ++b) add_plus(a, b);
    for (const auto& [a, b] : rs.plus) rs.minus.insert({b, a});
    for (int a = 1; a <= K; ++a) rs.zero.insert({a, a});

    for (const auto& pr : rs.plus)
        if (rs.minus.count(pr)) rs.clashes.push_back(pr);
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b) {
            IndexPair pr{a, b};
            if (!rs.plus.count(pr) && !rs.minus.count(pr) && !rs.zero.count(pr)) rs.holes.push_back(pr);
        }
    return rs;
}

int hash_index(int a, const GradingProfile& p) {
    if (p.M % 2 != 0) throw std::invalid_argument("# involution needs even M");
    int m = p.M / 2;
    if (a == m) return m + 1;
    if (a == m + 1) return m;
    return a;
}

std::vector<GradingProfile> enumerate_twisted_thetas(int M, int N) {
    GradingProfile base = make_profile(M, N, ProfileKind::Twisted);
    int K = base.K;
    // free choices: one sign per bar-orbit; bosonic pairs tie equal, the
    // bosonic fixed point is free, fermionic pairs tie opposite
    std::vector<int> reps;
    for (int a = 1; a <= K; ++a)
        if (a <= base.bar_twisted(a)) reps.push_back(a);
    std::vector<GradingProfile> out;
    int R = static_cast<int>(reps.size());
    for (int mask = 0; mask < (1 << R); ++mask) {
        std::vector<int> theta(K, +1);
        for (int i = 0; i < R; ++i) {
            int a = reps[i], abar = base.bar_twisted(a);
            int s = (mask >> i & 1) ? -1 : +1;
            theta[a - 1] = s;
            theta[abar - 1] = base.g(a) ? -s : s;
        }
        out.push_back(make_profile(M, N, ProfileKind::Twisted, theta));
    }
    return out;
}

}  // namespace tsy
