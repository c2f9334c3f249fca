// Structured record of one identity check and its serializations.
#pragma once

#include "qtv/numeric.hpp"

#include <string>
#include <vector>

namespace qtv {

struct VerificationReport {
    std::string check;
    i64 p = 0;
    i64 n = 0;
    std::string lhs;
    std::string rhs;
    Real abs_err;
    Real rel_err;
    Real tolerance;  // zero for exact checks
    bool exact = false;
    bool pass = false;
    std::string note;
};

// Exact comparison of two rationals.
VerificationReport make_exact_report(const std::string& check, i64 p, i64 n, const Rational& lhs, const Rational& rhs);
// Numerical comparison; relative error uses scale = max(|lhs|, |rhs|, floor).
VerificationReport make_numeric_report(const std::string& check, i64 p, i64 n, const Real& lhs, const Real& rhs,
                                       const Real& tolerance, bool relative, const Real& scale_floor = Real(0));
VerificationReport make_numeric_report(const std::string& check, i64 p, i64 n, const Complex& lhs, const Complex& rhs,
                                       const Real& tolerance, bool relative, const Real& scale_floor = Real(0));

// One JSON object per line with keys check, p, n, lhs, rhs, abs_err, rel_err, pass.
std::string to_json_line(const VerificationReport& r);
std::string csv_header();
std::string to_csv_line(const VerificationReport& r);

struct ReportSummary {
    long total = 0;
    long passed = 0;
    Real worst_abs;
    Real worst_rel;
    bool all_pass() const { return total == passed; }
};
ReportSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace qtv
