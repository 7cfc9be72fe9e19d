#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace l2torsion {

// Outcome of a single mechanical check. "indeterminate" is reserved for
// interval comparisons that straddle the target at the working precision;
// it means "refine and retry", not "wrong".
enum class CheckStatus { pass, fail, indeterminate };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::indeterminate: return "INDETERMINATE";
    }
    return "?";
}

struct CheckResult {
    std::string id;      // stable check name, e.g. "dual-path"
    std::string params;  // instance, e.g. "n=5 j=2"
    CheckStatus status;
    std::string witness; // populated on non-pass: the offending values
};

// Verification outcomes are data, not exceptions: a failed check is a
// reportable result while thrown errors are reserved for misuse.
class VerificationReport {
public:
    void add(std::string id, std::string params, bool ok, std::string witness = "") {
        checks_.push_back({std::move(id), std::move(params),
                           ok ? CheckStatus::pass : CheckStatus::fail,
                           ok ? std::string() : std::move(witness)});
    }
    void add_status(std::string id, std::string params, CheckStatus status,
                    std::string witness = "") {
        checks_.push_back({std::move(id), std::move(params), status,
                           status == CheckStatus::pass ? std::string() : std::move(witness)});
    }
    void merge(VerificationReport other) {
        checks_.insert(checks_.end(),
                       std::make_move_iterator(other.checks_.begin()),
                       std::make_move_iterator(other.checks_.end()));
    }

    const std::vector<CheckResult>& checks() const { return checks_; }

    std::size_t count(CheckStatus s) const {
        std::size_t c = 0;
        for (const auto& r : checks_)
            if (r.status == s) ++c;
        return c;
    }
    bool any(CheckStatus s) const {
        for (const auto& r : checks_)
            if (r.status == s) return true;
        return false;
    }
    bool all_passed() const {
        return !any(CheckStatus::fail) && !any(CheckStatus::indeterminate);
    }

private:
    std::vector<CheckResult> checks_;
};

} // namespace l2torsion
