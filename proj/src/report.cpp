#include "qtv/report.hpp"

#include "json.hpp"

namespace qtv {

namespace {

const int kPrintDigits = 25;

Real max3(const Real& a, const Real& b, const Real& c) {
    Real m = a > b ? a : b;
    return m > c ? m : c;
}

}  // namespace

VerificationReport make_exact_report(const std::string& check, i64 p, i64 n, const Rational& lhs, const Rational& rhs) {
    VerificationReport r;
    r.check = check;
    r.p = p;
    r.n = n;
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    Rational diff = lhs - rhs;
    r.abs_err = bmp::abs(to_real(diff));
    Real scale = max3(bmp::abs(to_real(lhs)), bmp::abs(to_real(rhs)), Real(0));
    r.rel_err = scale > 0 ? Real(r.abs_err / scale) : Real(r.abs_err);
    r.tolerance = 0;
    r.exact = true;
    r.pass = diff == 0;
    return r;
}

VerificationReport make_numeric_report(const std::string& check, i64 p, i64 n, const Real& lhs, const Real& rhs,
                                       const Real& tolerance, bool relative, const Real& scale_floor) {
    VerificationReport r;
    r.check = check;
    r.p = p;
    r.n = n;
    r.lhs = to_string(lhs, kPrintDigits);
    r.rhs = to_string(rhs, kPrintDigits);
    r.abs_err = bmp::abs(lhs - rhs);
    Real scale = max3(bmp::abs(lhs), bmp::abs(rhs), scale_floor);
    r.rel_err = scale > 0 ? Real(r.abs_err / scale) : Real(r.abs_err);
    r.tolerance = tolerance;
    r.pass = (relative ? r.rel_err : r.abs_err) <= tolerance;
    return r;
}

VerificationReport make_numeric_report(const std::string& check, i64 p, i64 n, const Complex& lhs, const Complex& rhs,
                                       const Real& tolerance, bool relative, const Real& scale_floor) {
    VerificationReport r;
    r.check = check;
    r.p = p;
    r.n = n;
    r.lhs = to_string(lhs, kPrintDigits);
    r.rhs = to_string(rhs, kPrintDigits);
    r.abs_err = abs(lhs - rhs);
    Real scale = max3(abs(lhs), abs(rhs), scale_floor);
    r.rel_err = scale > 0 ? Real(r.abs_err / scale) : Real(r.abs_err);
    r.tolerance = tolerance;
    r.pass = (relative ? r.rel_err : r.abs_err) <= tolerance;
    return r;
}

std::string to_json_line(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["p"] = r.p;
    j["n"] = r.n;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_err"] = to_string(r.abs_err, 6);
    j["rel_err"] = to_string(r.rel_err, 6);
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

std::string csv_header() { return "check,p,n,lhs,rhs,abs_err,rel_err,pass"; }

std::string to_csv_line(const VerificationReport& r) {
    return r.check + "," + std::to_string(r.p) + "," + std::to_string(r.n) + "," + r.lhs + "," + r.rhs + "," +
           to_string(r.abs_err, 6) + "," + to_string(r.rel_err, 6) + "," + (r.pass ? "true" : "false");
}

ReportSummary summarize(const std::vector<VerificationReport>& reports) {
    ReportSummary s;
    s.worst_abs = 0;
    s.worst_rel = 0;
    for (const auto& r : reports) {
        ++s.total;
        if (r.pass) ++s.passed;
        if (r.abs_err > s.worst_abs) s.worst_abs = r.abs_err;
        if (r.rel_err > s.worst_rel) s.worst_rel = r.rel_err;
    }
    return s;
}

}  // namespace qtv
