#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fracschro/errors.hpp"
#include "fracschro/format.hpp"
#include "fracschro/harness.hpp"
#include "fracschro/kernel.hpp"
#include "fracschro/scalar.hpp"
#include "fracschro/spectral.hpp"

namespace fracschro::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& raw) {
    const std::string s = trim(raw);
    double value = 0.0;
    const char* first = s.data();
    // from_chars rejects a leading '+'; accept it for convenience.
    if (!s.empty() && s[0] == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw UsageError("not a finite decimal number: '" + raw + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        parts.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

std::string complex_text(Complex z) { return format_real(z.real()) + "," + format_real(z.imag()); }

int run_kernel(const RunConfig& c, std::ostream& out) {
    out << "beta,t,g_beta\n";
    for (double t : c.kernel_t) {
        out << format_real(c.beta) << ',' << format_real(t) << ','
            << format_real(gamma_kernel(c.beta, t)) << '\n';
    }
    if (!(c.beta > 0.0 && c.beta <= 1.0)) {
        out << "# convolution table needs beta in (0, 1]\n";
        return kExitOk;
    }
    out << "\n# int_0^inf g_beta(y) exp(i a (t - y)) dy, Y=" << format_real(c.quad.truncation)
        << ", panels=" << c.quad.panels << "\n";
    out << "beta,a,t,re,im,oracle_re,oracle_im,abs_error\n";
    bool ok = true;
    for (double a : {1.0, 2.0}) {
        for (double t : c.kernel_t) {
            const auto r = convolve_exponential(c.beta, a, t, c.quad);
            const double e = std::abs(r.value - r.oracle);
            ok = ok && e <= 1e-4;
            out << format_real(c.beta) << ',' << format_real(a) << ',' << format_real(t) << ','
                << complex_text(r.value) << ',' << complex_text(r.oracle) << ',' << format_real(e)
                << '\n';
        }
    }
    return ok ? kExitOk : kExitChecksFailed;
}

int run_scalar(const RunConfig& c, std::ostream& out) {
    const FractionalOrder alpha(c.alpha);
    const ScalarProblem prob{alpha, 1.0, default_test_family()};
    struct Row {
        Complex k;
        double a;
        bool solution;
    };
    const std::vector<Row> rows{{1.0, 1.0, true},
                                {Complex(0.0, 1.0), 1.0, true},
                                {1.0, 0.0, false},
                                {1.0, 0.5, false},
                                {1.0, 2.0, false}};
    out << "# weak residual of k exp(i a t) for D^alpha u = (i a0)^alpha u, alpha="
        << format_real(c.alpha) << ", a0=1, default Gaussian family\n";
    out << "k_re,k_im,a,residual,expected,passed\n";
    bool ok = true;
    for (const auto& row : rows) {
        const double r = scalar_weak_residual(prob, {row.k, row.a}, c.quad);
        const bool pass = row.solution ? r <= 1e-4 : r > 0.05;
        ok = ok && pass;
        out << complex_text(row.k) << ',' << format_real(row.a) << ',' << format_real(r) << ','
            << (row.solution ? "solution" : "non-solution") << ',' << (pass ? "true" : "false")
            << '\n';
    }

    std::vector<double> grid = c.times;
    if (!c.times_given) {
        grid.clear();
        for (int k = 0; k <= 8; ++k) {
            grid.push_back(0.25 * k);
        }
    }
    out << "\n# Weyl mode exp(i lambda^(1/alpha) t) against Caputo mode E_alpha(i^alpha lambda "
           "t^alpha), lambda=1\n";
    out << "t,modulus_weyl,modulus_caputo,caputo_deviation\n";
    for (const auto& row : caputo_compare(c.alpha, 1.0, grid)) {
        out << format_real(row.t) << ',' << format_real(row.modulus_weyl) << ','
            << format_real(row.modulus_caputo) << ',' << format_real(row.modulus_caputo - 1.0)
            << '\n';
    }
    return ok ? kExitOk : kExitChecksFailed;
}

std::string snapshot_name(const std::string& prefix, std::size_t index, std::size_t count) {
    const int width = std::max<int>(3, static_cast<int>(std::to_string(count - 1).size()));
    std::ostringstream name;
    name << prefix << "_t" << std::setw(width) << std::setfill('0') << index << ".csv";
    return name.str();
}

int run_propagate(const RunConfig& c, std::ostream& out) {
    const GridSpec grid{c.n, c.L};
    const auto op = c.potential_path ? build_schrodinger(grid, read_potential_csv(*c.potential_path))
                                     : build_free_laplacian(grid);
    const auto v = c.init.kind == InitSpec::Kind::mode
                       ? WaveFunction::mode(grid, c.init.k)
                       : WaveFunction::gaussian(grid, c.init.center.value_or(0.5 * c.L),
                                                c.init.width.value_or(c.L / 16.0));
    const FractionalOrder alpha(c.alpha);
    const double norm0 = v.norm();
    const double tolerance = 1e-12 * std::max(1.0, norm0);

    std::ostringstream norms;
    norms << "t,norm,norm_drift\n";
    bool ok = true;
    for (std::size_t i = 0; i < c.times.size(); ++i) {
        const auto u = propagate(op, alpha, c.times[i], v);
        const double drift = u.norm() - norm0;
        ok = ok && std::abs(drift) <= tolerance;
        norms << format_real(c.times[i]) << ',' << format_real(u.norm()) << ','
              << format_real(drift) << '\n';
        if (c.output_path) {
            write_wave_csv(snapshot_name(*c.output_path, i, c.times.size()), u);
        }
    }
    if (c.output_path) {
        const std::string path = *c.output_path + "_norms.csv";
        std::ofstream f(path, std::ios::binary);
        if (!(f << norms.str())) {
            throw IoError("cannot write " + path);
        }
    }
    out << norms.str();
    return ok ? kExitOk : kExitChecksFailed;
}

int run_verify(const RunConfig& c, std::ostream& out) {
    SuiteConfig suite;
    suite.alpha = c.alpha;
    suite.n = c.n;
    suite.seed = c.seed;
    suite.quad = c.quad;
    suite.groups = c.suite;
    if (c.potential_path) {
        suite.potential = read_potential_csv(*c.potential_path);
    }
    const auto reports = run_suite(suite);
    const std::string json = reports_to_json(reports);
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.passed;
    }
    if (c.output_path) {
        std::ofstream f(*c.output_path, std::ios::binary);
        if (!(f << json)) {
            throw IoError("cannot write " + *c.output_path);
        }
        for (const auto& r : reports) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " residual=" << format_real(r.residual)
                << " tolerance=" << format_real(r.tolerance) << '\n';
        }
    } else {
        out << json;
    }
    return ok ? kExitOk : kExitChecksFailed;
}

}  // namespace

void RunConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw UsageError("--alpha must lie strictly between 0 and 1");
    }
    if (n < 2 || n % 2 != 0) {
        throw UsageError("--n must be even and at least 2");
    }
    if (!(L > 0.0) || !std::isfinite(L)) {
        throw UsageError("--L must be positive");
    }
    for (double t : times) {
        if (!std::isfinite(t)) {
            throw UsageError("--times must be finite");
        }
    }
    if (times.empty()) {
        throw UsageError("--times needs at least one value");
    }
    if (!std::isfinite(beta)) {
        throw UsageError("--beta must be finite");
    }
    try {
        quad.validate();
    } catch (const SpecError& e) {
        throw UsageError(e.what());
    }
    if (init.kind == InitSpec::Kind::gaussian && init.width && !(*init.width > 0.0)) {
        throw UsageError("--init gaussian width must be positive");
    }
    for (const auto& g : suite) {
        if (std::find(suite_groups().begin(), suite_groups().end(), g) == suite_groups().end()) {
            throw UsageError("--suite: unknown group '" + g + "'");
        }
    }
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> values;
    for (const auto& part : split(text, ',')) {
        values.push_back(parse_real(part));
    }
    if (values.empty()) {
        throw UsageError("empty list of numbers");
    }
    return values;
}

InitSpec parse_init(const std::string& text) {
    InitSpec spec;
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? std::string{} : text.substr(colon + 1);
    if (kind == "mode") {
        const double k = parse_real(args);
        if (k != std::round(k) || std::abs(k) > 1e9) {
            throw UsageError("--init mode:K needs an integer K");
        }
        spec.kind = InitSpec::Kind::mode;
        spec.k = static_cast<int>(k);
        return spec;
    }
    if (kind == "gaussian") {
        spec.kind = InitSpec::Kind::gaussian;
        if (colon != std::string::npos) {
            const auto v = parse_reals(args);
            if (v.size() != 2) {
                throw UsageError("--init gaussian:CENTER,WIDTH needs two numbers");
            }
            spec.center = v[0];
            spec.width = v[1];
        }
        return spec;
    }
    throw UsageError("--init must be mode:K or gaussian[:CENTER,WIDTH], got '" + text + "'");
}

std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& config,
                              std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Time-fractional Schrodinger toolkit: fractional kernels, weak scalar solutions,\n"
        "spectral propagation u(t) = exp(i t A^(1/alpha)) v and the verification suite.",
        "fracschro"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.get_formatter()->column_width(30);

    std::string times_text;
    std::string init_text;
    std::string t_text;
    std::string suite_text;
    std::string potential;
    std::string out_path;

    app.add_option("--alpha", config.alpha, "Fractional order in (0, 1) [scalar, propagate, verify]")
        ->capture_default_str();
    app.add_option("--n", config.n, "Grid points, even >= 2 [propagate, verify]")
        ->capture_default_str();
    app.add_option("--L", config.L, "Periodic domain length [propagate]; verify uses n*pi/4")
        ->capture_default_str();
    app.add_option("--potential", potential,
                   "One-column CSV with n values V >= 0; selects -Delta + V [propagate, verify]");
    app.add_option("--init", init_text,
                   "Initial data mode:K or gaussian[:CENTER,WIDTH] [propagate] (default mode:1)");
    app.add_option("--times", times_text,
                   "Comma-separated times [propagate; scalar Caputo table in [0, 2]] "
                   "(default 0,1; scalar 0,0.25,...,2)");
    app.add_option("--beta", config.beta, "Kernel exponent beta > 0 [kernel]")->capture_default_str();
    app.add_option("--t", t_text, "Comma-separated evaluation points t > 0 [kernel] (default 0.5,1,2)");
    app.add_option("--seed", config.seed, "Seed for random inputs [verify]")->capture_default_str();
    app.add_option("--out", out_path,
                   "verify: JSON report file; propagate: prefix for PREFIX_tNNN.csv snapshots "
                   "and PREFIX_norms.csv");
    app.add_option("--quad-Y", config.quad.truncation, "Quadrature truncation Y > 1")
        ->capture_default_str();
    app.add_option("--quad-panels", config.quad.panels, "Geometric panels on (1, Y]")
        ->capture_default_str();
    app.add_option("--suite", suite_text,
                   "Comma-separated check groups for verify: kernel, scalar, spectral, fourier, "
                   "caputo, duality (default all)");

    auto* kernel = app.add_subcommand("kernel", "Print g_beta(t) and half-line convolutions against e^{iat}");
    auto* scalar = app.add_subcommand("scalar", "Weak residuals of k e^{iat} and the Caputo/Weyl modulus table");
    auto* propagate = app.add_subcommand("propagate", "Evolve initial data and record norms and snapshots");
    auto* verify = app.add_subcommand("verify", "Run the verification suite and emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        config.command = kernel->parsed()      ? Command::kernel
                         : scalar->parsed()    ? Command::scalar
                         : propagate->parsed() ? Command::propagate
                         : verify->parsed()    ? Command::verify
                                               : throw UsageError("missing command");
        if (!times_text.empty()) {
            config.times = parse_reals(times_text);
            config.times_given = true;
        }
        if (!init_text.empty()) {
            config.init = parse_init(init_text);
        }
        if (!t_text.empty()) {
            config.kernel_t = parse_reals(t_text);
        }
        if (!suite_text.empty()) {
            config.suite.clear();
            for (const auto& g : split(suite_text, ',')) {
                config.suite.push_back(trim(g));
            }
        }
        if (!potential.empty()) {
            config.potential_path = potential;
        }
        if (!out_path.empty()) {
            config.output_path = out_path;
        }
        config.validate();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        // Buffered so that a failing command leaves no partial table on stdout.
        std::ostringstream buffer;
        int code = kExitUsage;
        switch (config.command) {
            case Command::kernel:
                code = run_kernel(config, buffer);
                break;
            case Command::scalar:
                code = run_scalar(config, buffer);
                break;
            case Command::propagate:
                code = run_propagate(config, buffer);
                break;
            case Command::verify:
                code = run_verify(config, buffer);
                break;
        }
        out << buffer.str();
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitModule;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    if (const auto code = parse_args(argc, argv, config, out, err)) {
        return *code;
    }
    return run(config, out, err);
}

}  // namespace fracschro::cli
