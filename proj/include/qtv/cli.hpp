// Command-line front end: class-number tables, identity-verification sweeps
// and coefficient tables, written as JSON lines or CSV.
#pragma once

#include "qtv/numeric.hpp"
#include "qtv/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qtv {

enum class OutputFormat { jsonl, csv };
enum class ConventionChoice { automatic, positive_only, both_signs };

struct RunConfig {
    std::vector<i64> primes{3};
    i64 n_min = 1;
    i64 n_max = 100;
    i64 m_max = 12;
    unsigned precision = 64;
    // Truncation of the plus-space Kloosterman zeta series; 0 selects 2000.
    i64 cutoff = 0;
    OutputFormat format = OutputFormat::jsonl;
    ConventionChoice convention = ConventionChoice::automatic;
    bool seed_cases = false;
};

// Throws std::invalid_argument unless precision >= 30, the ranges are
// nonempty and every p is an odd prime.
void validate(const RunConfig& config);

// One VerificationReport per case of the named sweep, in (p, n) order.
// which is one of imaginary, real, coefficients, constants, kloosterman,
// special, modularity.
std::vector<VerificationReport> verify_reports(const std::string& which, const RunConfig& config);

// Entry point shared by the executable and the tests; args excludes the
// program name. Returns 0 when every check passes, 1 on a failed check and
// 2 on a usage or configuration error. Data goes to out, the summary line
// and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtv
