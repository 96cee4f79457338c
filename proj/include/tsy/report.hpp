#ifndef TSY_REPORT_HPP
#define TSY_REPORT_HPP

#include <string>
#include <vector>

namespace tsy {

struct Failure {
    std::vector<int> entry;  // identifying indices (1-based where index-like)
    std::string residual;    // first nonzero residual polynomial, printed
};

// Outcome of one identity / condition check. A report may carry
// sub-reports (per-condition verdicts of a theorem, per-identity verdicts of
// a suite). Conjectural checks are reported but never gate an exit code.
struct CheckReport {
    std::string identity;
    bool pass = true;
    bool conjectural = false;
    bool skipped = false;
    std::string note;
    std::vector<Failure> failures;
    std::vector<CheckReport> sub;

    void fail(std::vector<int> entry, std::string residual, size_t cap = 4) {
        pass = false;
        if (failures.size() < cap) failures.push_back({std::move(entry), std::move(residual)});
    }
    void absorb(const CheckReport& r) {
        if (!r.pass && !r.conjectural && !r.skipped) pass = false;
        sub.push_back(r);
    }
};

// true iff every non-conjectural, non-skipped check passed
bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace tsy

#endif
