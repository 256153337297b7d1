#pragma once

#include <string>
#include <vector>

namespace turnover {

// Thresholds for the floating-backend rows of the battery. Exact rows
// ignore them. from_base never loosens a pinned default, it only
// tightens: each field becomes min(default, tol).
struct ToleranceSet {
    double base = 1e-9;         // relator residuals, rank decisions, spectra
    double origin = 1e-12;      // slice value at (0, 0) against the exact translation
    double frame = 1e-6;        // projective eigenline deviations
    double degeneration = 1e-5; // conjugation-limit distance from the identity

    static ToleranceSet from_base(double tol);
};

enum class CheckMode { assert_check, report_check };

const char* check_mode_name(CheckMode mode);

// One battery row. Report rows carry context the suite tracks without
// letting it decide the overall outcome; their pass flag is advisory.
struct VerificationCheck {
    std::string anchor;
    CheckMode mode = CheckMode::assert_check;
    std::string backend; // exact | floating | mixed
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string note;
};

struct VerificationReport {
    ToleranceSet tolerances;
    std::vector<VerificationCheck> checks;
    int asserted = 0;
    int failed = 0;
    int reported = 0;
    bool pass = false; // every assert row passed
};

// Runs the full battery: fixed-space tower, tangent dimensions, Euler
// characteristics, rigidity, slice soundness and dichotomy, tangent
// cocycle independence, surface and singular-locus identities, the
// isolated-class census, faithfulness obstructions, the degeneration
// limit, and the eigenframe rows.
VerificationReport run_verification(const ToleranceSet& tolerances = {});

std::string verification_report_to_json(const VerificationReport& report, int indent = 2);

} // namespace turnover
