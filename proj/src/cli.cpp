#include "qtv/cli.hpp"

#include "qtv/arith_core.hpp"
#include "qtv/characters.hpp"
#include "qtv/classnumbers.hpp"
#include "qtv/coefficients.hpp"
#include "qtv/kloosterman.hpp"
#include "qtv/modular_eval.hpp"
#include "qtv/quadforms.hpp"
#include "qtv/specialfunctions.hpp"
#include "qtv/traces.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

namespace qtv {

namespace {

constexpr i64 kDefaultKloostermanCutoff = 2000;
constexpr int kTableDigits = 25;
constexpr int kErrorDigits = 6;

Real ten_to(int e) { return bmp::pow(Real(10), e); }

const std::vector<std::string>& sweep_names() {
    static const std::vector<std::string> names = {"imaginary", "real",    "coefficients", "constants",
                                                   "kloosterman", "special", "modularity"};
    return names;
}

// A table row: ordered (column, value) pairs, serialized as one JSON object
// or one CSV line.
using Row = std::vector<std::pair<std::string, std::string>>;

void write_rows(const std::vector<Row>& rows, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::csv) {
        if (rows.empty()) return;
        std::string header;
        for (const auto& [key, value] : rows.front()) header += (header.empty() ? "" : ",") + key;
        out << header << '\n';
        for (const Row& row : rows) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "," : "") + row[i].second;
            out << line << '\n';
        }
        return;
    }
    for (const Row& row : rows) {
        nlohmann::ordered_json j;
        for (const auto& [key, value] : row) j[key] = value;
        out << j.dump() << '\n';
    }
}

void write_reports(const std::vector<VerificationReport>& reports, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::csv) {
        out << csv_header() << '\n';
        for (const auto& r : reports) out << to_csv_line(r) << '\n';
        return;
    }
    for (const auto& r : reports) out << to_json_line(r) << '\n';
}

DefiniteConvention resolve_convention(const RunConfig& config) {
    switch (config.convention) {
        case ConventionChoice::positive_only: return DefiniteConvention::positive_only;
        case ConventionChoice::both_signs: return DefiniteConvention::both_signs;
        case ConventionChoice::automatic: break;
    }
    return pin_convention(default_seed_cases()).convention;
}

const char* convention_name(DefiniteConvention c) {
    return c == DefiniteConvention::positive_only ? "pos-def" : "both-signs";
}

bool is_discriminant(i64 n) { return n % 4 == 0 || n % 4 == 3; }

std::vector<VerificationReport> sweep_imaginary(const RunConfig& config) {
    std::vector<VerificationReport> out;
    if (config.seed_cases) {
        const ConventionPin pin = pin_convention(default_seed_cases());
        const auto& chosen = pin.convention == DefiniteConvention::positive_only ? pin.positive_only : pin.both_signs;
        for (VerificationReport r : chosen) {
            r.check = "imaginary_seed";
            r.note = std::string("pinned=") + convention_name(pin.convention);
            out.push_back(r);
        }
        return out;
    }
    const DefiniteConvention conv = resolve_convention(config);
    for (i64 p : config.primes)
        for (i64 n = config.n_min; n <= config.n_max; ++n)
            if (is_discriminant(n)) out.push_back(verify_thm_imaginary(p, -n, conv));
    return out;
}

std::vector<VerificationReport> sweep_real(const RunConfig& config) {
    std::vector<VerificationReport> out;
    for (i64 p : config.primes)
        for (i64 n = config.n_min; n <= config.n_max; ++n)
            if (is_nonsquare_discriminant(n)) out.push_back(verify_thm_real(p, n));
    return out;
}

std::vector<VerificationReport> sweep_coefficients(const RunConfig& config) {
    std::vector<VerificationReport> out;
    const Real h = ten_to(-5);
    const Real derivative_tol = ten_to(-8);
    const Real ratio_tol = ten_to(-9);
    for (i64 p : config.primes) {
        for (i64 n = config.n_min; n <= config.n_max; ++n)
            if (is_discriminant(n))
                out.push_back(make_numeric_report("negative_index_two_path", p, -n, plus_value_at_32(p, -n),
                                                  c_negative(p, -n), ratio_tol, true));
        out.push_back(make_numeric_report("c_zero_derivative", p, 0, c_zero(p), c_derivative_oracle(p, 0, h).value,
                                          derivative_tol, false));
        for (i64 m = 1; m <= config.m_max; ++m) {
            out.push_back(make_numeric_report("c_square_derivative", p, m * m, c_square(p, m),
                                              c_derivative_oracle(p, m, h).value, derivative_tol, false));
            out.push_back(make_numeric_report("b_square_derivative", p, m * m, b_square(m),
                                              b_derivative_oracle(m, h).value.re, derivative_tol, false));
        }
    }
    return out;
}

std::vector<VerificationReport> sweep_constants(const RunConfig& config) {
    std::vector<VerificationReport> out;
    for (i64 p : config.primes)
        for (auto& r : constant_term_checks(p)) out.push_back(std::move(r));
    return out;
}

std::vector<VerificationReport> sweep_kloosterman(const RunConfig& config) {
    std::vector<VerificationReport> out;
    const i64 cutoff = config.cutoff > 0 ? config.cutoff : kDefaultKloostermanCutoff;
    const Real s(1.25);
    for (i64 p : config.primes) {
        // Positive terms, so the truncation approaches the closed form from below.
        const TruncatedSeries t = kzeta0_truncated(p, s, 1000000);
        VerificationReport r = make_numeric_report("kzeta0_closed_form", p, 0, t.value, kzeta0_closed(p, s),
                                                   t.tail_bound, false);
        r.note = "s=1.25; cutoff=1000000";
        out.push_back(r);
    }
    for (i64 p : config.primes)
        for (i64 n : {-4, -3, 5, 8}) {
            const KloostermanValue full = plus_zeta_truncated(p, n, 2.5, cutoff);
            const std::complex<double> bad = plus_zeta_bad_part(p, n, 2.5, i64{1} << 24);
            const Real good = plus_zeta_coprime_part(p, n, Real(2.5));
            const Complex product = Complex(Real(bad.real()), Real(bad.imag())) * good;
            VerificationReport r = make_numeric_report("plus_zeta_factorization", p, n, full.value, product,
                                                       full.tail_bound, false);
            r.pass = r.pass && full.decaying;
            r.note = "s=2.5; cutoff=" + std::to_string(cutoff);
            out.push_back(r);
        }
    return out;
}

std::vector<VerificationReport> sweep_special() {
    std::vector<VerificationReport> out;
    const Real pi = const_pi();
    const Real tolerance = ten_to(-8);
    for (int N : {1, 3, 5})
        for (const char* vs : {"0.3", "0.5", "1", "2"})
            for (int m : {1, 2, 3}) {
                const Real v = real_from_string(vs);
                const QuadratureResult f = F_bfi(2 * bmp::sqrt(pi * N * v) * m);
                const QuadratureResult a = alpha(4 * N * m * m * v);
                VerificationReport r = make_numeric_report("special_relation", N, m, Real(-2 * f.value), a.value,
                                                           tolerance, false);
                r.pass = r.pass && f.converged && a.converged;
                r.note = std::string("v=") + vs + "; quad_err=" + to_string(f.error_bound + a.error_bound, kErrorDigits);
                out.push_back(r);
            }
    return out;
}

Complex point(const char* u, const char* v) { return Complex(real_from_string(u), real_from_string(v)); }

// Words of length 1..3 in T, T^-1, [1,0;4,1] and its inverse with c != 0.
std::vector<Mat2> gamma0_4_words(int count, unsigned seed) {
    const Mat2 gens[4] = {mat_T(1), mat_T(-1), Mat2{1, 0, 4, 1}, Mat2{1, 0, -4, 1}};
    std::mt19937 rng(seed);
    std::vector<Mat2> out;
    while (static_cast<int>(out.size()) < count) {
        const int len = 1 + static_cast<int>(rng() % 3);
        Mat2 g;
        for (int i = 0; i < len; ++i) g = g * gens[rng() % 4];
        if (g.c != 0) out.push_back(g);
    }
    return out;
}

VerificationReport residual_report(const std::string& check, i64 p, const ResidualResult& r, const Real& tolerance,
                                   const Mat2& g) {
    VerificationReport rep = make_numeric_report(check, p, 0, r.residual, Real(0), tolerance, false);
    rep.note = "gamma=[" + std::to_string(g.a) + "," + std::to_string(g.b) + ";" + std::to_string(g.c) + "," +
               std::to_string(g.d) + "]; tail=" + to_string(r.tail_bounds, kErrorDigits);
    return rep;
}

std::vector<VerificationReport> sweep_modularity(const RunConfig& config) {
    std::vector<VerificationReport> out;
    const std::vector<Complex> points = {point("0.13", "0.9"), point("-0.27", "0.5"), point("0.41", "0.75"),
                                         point("0", "1.3"), point("-0.08", "0.6")};
    const std::vector<Mat2> words = gamma0_4_words(10, 99);
    for (const Complex& tau : points)
        for (const Mat2& g : words) {
            const Real h = mobius(g, tau).im;
            const i64 nt = static_cast<i64>(std::sqrt(static_cast<double>(cutoff_for_height(h, ten_to(-16), 0)))) + 4;
            out.push_back(residual_report(
                "theta_modularity", 0,
                modularity_residual([nt](const Complex& z) { return eval_theta(z, nt); }, g, 1, tau), ten_to(-10), g));
            const i64 nh = cutoff_for_height(h, ten_to(-9), 0.5);
            out.push_back(residual_report(
                "zagier_modularity", 0,
                modularity_residual([nh](const Complex& z) { return eval_H_zagier(z, nh); }, g, 3, tau), ten_to(-6), g));
        }
    const Complex tau = point("0.13", "0.9");
    for (const Mat2& g : {Mat2{1, 0, 12, 1}, Mat2{7, 2, 24, 7}}) {
        const i64 n = cutoff_for_height(mobius(g, tau).im, ten_to(-9), 0.5);
        out.push_back(residual_report(
            "cohen_eisenstein_modularity", 3,
            modularity_residual([n](const Complex& z) { return eval_cohen_eisenstein(3, 3, z, n); }, g, 3, tau),
            ten_to(-5), g));
    }
    const Complex tau_g = point("0.21", "1.1");
    for (i64 p : config.primes) {
        const Mat2 g{1, 0, 4 * p, 1};
        const i64 n = std::max<i64>(600, cutoff_for_height(mobius(g, tau_g).im, ten_to(-8), 0));
        out.push_back(residual_report(
            "G_modularity", p, modularity_residual([p, n](const Complex& z) { return eval_G(p, z, n); }, g, 1, tau_g),
            ten_to(-4), g));
    }
    return out;
}

int finish(long total, long failed, const std::string& what, std::ostream& err) {
    err << "summary: " << what << " total=" << total << " passed=" << total - failed << " failed=" << failed << '\n';
    return failed == 0 ? 0 : 1;
}

int cmd_hurwitz(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<Row> rows;
    long failed = 0;
    for (i64 p : config.primes)
        for (i64 n = config.n_min; n <= config.n_max; ++n) {
            const Rational h = hurwitz_H_forms(n);
            const bool routes_agree = h == hurwitz_H_lformula(n);
            const VerificationReport rel = verify_linear_relation(p, n);
            std::string hstar, hstar_err;
            if (is_nonsquare_discriminant(n)) {
                const Real value = h_star(n);
                Real finer;
                {
                    PrecisionGuard guard(config.precision + 20);
                    finer = h_star(n);
                }
                hstar = to_string(value, kTableDigits);
                hstar_err = to_string(Real(bmp::abs(finer - value)), kErrorDigits);
            }
            const bool pass = routes_agree && rel.pass;
            if (!pass) ++failed;
            rows.push_back({{"p", std::to_string(p)},
                            {"n", std::to_string(n)},
                            {"H", to_string(h)},
                            {"H_routes_agree", routes_agree ? "true" : "false"},
                            {"H_1p", to_string(gen_hurwitz(1, p, n))},
                            {"H_pp", to_string(gen_hurwitz(p, p, n))},
                            {"hstar", hstar},
                            {"hstar_err", hstar_err},
                            {"relation", rel.pass ? "true" : "false"}});
        }
    write_rows(rows, config.format, out);
    return finish(static_cast<long>(rows.size()), failed, "hurwitz", err);
}

Row coefficient_row(const std::string& kind, i64 p, i64 index, const Complex& value, const Complex& oracle,
                    const Real& err_bound, const Real& tolerance, long& failed) {
    const Real delta = abs(value - oracle);
    const bool pass = delta <= tolerance;
    if (!pass) ++failed;
    return {{"kind", kind},
            {"p", std::to_string(p)},
            {"index", std::to_string(index)},
            {"re", to_string(value.re, kTableDigits)},
            {"im", to_string(value.im, kTableDigits)},
            {"oracle_re", to_string(oracle.re, kTableDigits)},
            {"oracle_im", to_string(oracle.im, kTableDigits)},
            {"delta", to_string(delta, kErrorDigits)},
            {"err", to_string(err_bound, kErrorDigits)},
            {"pass", pass ? "true" : "false"}};
}

int cmd_coeffs(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<Row> rows;
    long failed = 0;
    const Real h = ten_to(-5);
    const Real tolerance = ten_to(-8);
    const Real rounding = ten_to(-static_cast<int>(config.precision) + 5);
    for (i64 m = 1; m <= config.m_max; ++m) {
        const DerivativeOracle o = b_derivative_oracle(m, h);
        rows.push_back(coefficient_row("b_square", 0, m * m, Complex(b_square(m)), o.value, o.step_spread, tolerance,
                                       failed));
    }
    for (i64 p : config.primes) {
        const DerivativeOracle z = c_derivative_oracle(p, 0, h);
        rows.push_back(coefficient_row("c_zero", p, 0, c_zero(p), z.value, z.step_spread, tolerance, failed));
        for (i64 m = 1; m <= config.m_max; ++m) {
            const DerivativeOracle o = c_derivative_oracle(p, m, h);
            rows.push_back(coefficient_row("c_square", p, m * m, c_square(p, m), o.value, o.step_spread, tolerance,
                                           failed));
        }
        for (i64 n = config.n_min; n <= config.n_max; ++n)
            if (is_discriminant(n))
                rows.push_back(coefficient_row("c_negative", p, -n, c_negative(p, -n), plus_value_at_32(p, -n),
                                               rounding, tolerance, failed));
        rows.push_back(coefficient_row("frak_C", p, 0, Complex(frak_C(p)), Complex(frak_C_from_constant_term(p)),
                                       rounding, tolerance, failed));
    }
    write_rows(rows, config.format, out);
    return finish(static_cast<long>(rows.size()), failed, "coeffs", err);
}

int cmd_verify(const std::string& which, const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<VerificationReport> reports = verify_reports(which, config);
    write_reports(reports, config.format, out);
    const ReportSummary s = summarize(reports);
    return finish(s.total, s.total - s.passed, "verify " + which, err);
}

}  // namespace

void validate(const RunConfig& config) {
    if (config.precision < 30) throw std::invalid_argument("precision must be at least 30 digits");
    if (config.primes.empty()) throw std::invalid_argument("at least one prime is required");
    for (i64 p : config.primes)
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (config.n_min < 1 || config.n_min > config.n_max) throw std::invalid_argument("n range must satisfy 1 <= n-min <= n-max");
    if (config.m_max < 1) throw std::invalid_argument("m-max must be positive");
    if (config.cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
}

std::vector<VerificationReport> verify_reports(const std::string& which, const RunConfig& config) {
    validate(config);
    PrecisionGuard guard(config.precision);
    if (which == "imaginary") return sweep_imaginary(config);
    if (which == "real") return sweep_real(config);
    if (which == "coefficients") return sweep_coefficients(config);
    if (which == "constants") return sweep_constants(config);
    if (which == "kloosterman") return sweep_kloosterman(config);
    if (which == "special") return sweep_special();
    if (which == "modularity") return sweep_modularity(config);
    throw std::invalid_argument("unknown sweep: " + which);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    std::string which;
    std::string format = "jsonl";
    std::string convention = "auto";

    CLI::App app{"Class-number tables, trace identities and coefficient checks"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", config.primes, "odd primes (repeatable)")->expected(1, -1)->take_all();
        sub->add_option("--n-min", config.n_min, "smallest |discriminant|");
        sub->add_option("--n-max", config.n_max, "largest |discriminant|");
        sub->add_option("--m-max", config.m_max, "largest square root index");
        sub->add_option("--prec", config.precision, "working precision in decimal digits");
        sub->add_option("--cutoff", config.cutoff, "Kloosterman series truncation");
        sub->add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
        sub->add_option("--convention", convention, "auto, pos-def or both-signs")
            ->check(CLI::IsMember({"auto", "pos-def", "both-signs"}));
        sub->add_flag("--seed-cases", config.seed_cases, "run only the convention-pinning seed cases");
    };
    CLI::App* hurwitz = app.add_subcommand("hurwitz", "class-number table");
    CLI::App* verify = app.add_subcommand("verify", "identity sweep");
    CLI::App* coeffs = app.add_subcommand("coeffs", "coefficient table with oracle deltas");
    for (CLI::App* sub : {hurwitz, verify, coeffs}) add_common(sub);
    verify->add_option("which", which, "sweep name")->required()->check(CLI::IsMember(sweep_names()));

    // CLI11 consumes the argument vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    config.format = format == "csv" ? OutputFormat::csv : OutputFormat::jsonl;
    config.convention = convention == "pos-def"      ? ConventionChoice::positive_only
                        : convention == "both-signs" ? ConventionChoice::both_signs
                                                     : ConventionChoice::automatic;
    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    }
    PrecisionGuard guard(config.precision);
    if (*hurwitz) return cmd_hurwitz(config, out, err);
    if (*coeffs) return cmd_coeffs(config, out, err);
    return cmd_verify(which, config, out, err);
}

}  // namespace qtv
