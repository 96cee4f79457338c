#ifndef TSY_GRADING_HPP
#define TSY_GRADING_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tsy {

enum class ProfileKind { Yangian, Twisted };

// Z2-grading data for gl(M|N) / Y(M|N)^+ index bookkeeping. Indices are
// 1-based throughout, matching the algebraic conventions; conversion to
// 0-based happens only at storage boundaries.
struct GradingProfile {
    int M = 0;
    int N = 0;
    int K = 0;
    ProfileKind kind = ProfileKind::Yangian;
    std::vector<int> grade;  // size K, values 0/1
    std::vector<int> theta;  // size K, values +-1 (all +1 for Yangian kind)
    int theta0 = +1;

    int g(int a) const { return grade[a - 1]; }
    int th(int a) const { return theta[a - 1]; }
    int bar_yangian(int a) const { return K + 1 - a; }
    int bar_twisted(int a) const { return a <= M ? M + 1 - a : 2 * M + N + 1 - a; }
};

// Canonical profile; for kind Twisted the thetas follow the sign rule
// theta_a = sg((2M+N+1)/2 - a) on the fermionic block, unless an override is
// supplied (which must satisfy the theta0 constraint with theta0 = +1).
GradingProfile make_profile(int M, int N, ProfileKind kind,
                            const std::optional<std::vector<int>>& theta_override = std::nullopt);

// (-1)^{gsum1 * gsum2} for grade sums.
inline int koszul_sign(int gsum1, int gsum2) { return (gsum1 & gsum2 & 1) ? -1 : +1; }

inline int sign_pow(int e) { return (e & 1) ? -1 : +1; }

using IndexPair = std::pair<int, int>;

// Positive/negative/zero root index sets of Y(M|2n) as printed, together
// with the pairs that end up in both Phi+ and Phi- (clashes) and the pairs
// covered by neither (holes). The definition double-counts the mixed
// (bosonic, second-half-fermionic) pairs and omits the (bosonic,
// first-half-fermionic) ones; those are reported rather than patched.
struct RootSystem {
    int M = 0;
    int n = 0;
    std::set<IndexPair> plus, minus, zero;
    std::vector<IndexPair> clashes;
    std::vector<IndexPair> holes;
};

RootSystem make_root_system(int M, int n);

// Order-2 index swap m <-> m+1 for even M = 2m; rejects odd M.
int hash_index(int a, const GradingProfile& p);

// All theta assignments compatible with the order-2 constraint at theta0=+1.
std::vector<GradingProfile> enumerate_twisted_thetas(int M, int N);

}  // namespace tsy

#endif
