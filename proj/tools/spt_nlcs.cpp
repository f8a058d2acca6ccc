/*
   Copyright 2026 The spt-nlcs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// spt-nlcs: tables, verification suites and plot data for the Poschl-Teller NLCS library.
//
//   spt-nlcs polys --family hankel --convention factorial-squared --nmax 6 --format csv
//   spt-nlcs verify --suite all
//   spt-nlcs cs --gamma 5/2 --z 0.7+0.3i --grid 201
//   spt-nlcs bargmann --gamma 2 --basis 3 --z 1+1i
//
// Exit codes: 0 ok (WARN included), 1 a hard check failed, 2 invalid configuration,
// 3 moment sequence not positive definite.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spt/bargmann.hpp"
#include "spt/cstates.hpp"
#include "spt/errors.hpp"
#include "spt/hankel.hpp"
#include "spt/moments.hpp"
#include "spt/oracle.hpp"
#include "spt/shiftpoly.hpp"
#include "spt/verify.hpp"

namespace {

using nlohmann::json;
using spt::Complex;
using spt::Rational;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPositivity = 3;
constexpr const char* kSchema = "v1";

struct Config {
    std::string format;
    std::string output;
    // polys
    std::string family = "hankel";
    std::string convention;
    std::string gamma = "0";
    unsigned n_max = 6;
    // verify
    std::string suite = "all";
    std::optional<unsigned> verify_n;
    // cs / bargmann
    std::optional<std::string> nu;
    std::string alpha = "1";
    std::string z = "0+0i";
    unsigned grid = 101;
    std::string method = "series";
    unsigned basis = 0;
    unsigned nodes = 128;
    std::string variant = "cos";
};

/// "a+bi", "a-bi", "a", "bi", with optional spaces; i or j as imaginary unit.
Complex parse_complex(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
    static const std::string num = R"([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex full("^(" + num + ")([+-](?:\\d+\\.?\\d*|\\.\\d+)(?:[eE][+-]?\\d+)?)?[ij]$");
    static const std::regex real_only("^(" + num + ")$");
    static const std::regex imag_only("^(" + num + ")?[ij]$");
    std::smatch m;
    if (std::regex_match(text, m, real_only)) return {std::stod(m[1]), 0.0};
    if (std::regex_match(text, m, full) && m[2].matched) return {std::stod(m[1]), std::stod(m[2])};
    if (std::regex_match(text, m, imag_only)) {
        const std::string s = m[1].matched ? m[1].str() : "1";
        return {0.0, s == "+" ? 1.0 : s == "-" ? -1.0 : std::stod(s)};
    }
    throw spt::DomainError("cannot parse complex number '" + text + "' (expected a+bi)");
}

double to_double(const std::string& literal) { return Rational::parse(literal).to_double(); }

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Writes to --output or stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw spt::DomainError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

json envelope(const std::string& command, json config, json payload) {
    config["precision_bits"] = spt::oracle::precision_bits();
    return {{"schema", kSchema}, {"metadata", {{"command", command}, {"config", std::move(config)}}}, {"payload", std::move(payload)}};
}

// --------------------------------------------------------------------------------------------

int cmd_polys(const Config& cfg) {
    const std::string format = cfg.format.empty() ? "pretty" : cfg.format;
    Sink sink(cfg.output);
    std::ostream& os = sink.os();

    if (cfg.family == "hankel") {
        spt::SequenceSpec spec;
        spec.convention = cfg.convention.empty() ? spt::Convention::GenFactorial : spt::parse_convention(cfg.convention);
        // The fixed-gamma conventions pick their own gamma unless one is given explicitly.
        if (spec.convention == spt::Convention::FactorialSquared && cfg.gamma == "0") spec.gamma = Rational(0);
        else if (spec.convention == spt::Convention::ShiftedFactorialSquared && cfg.gamma == "0") spec.gamma = Rational(1);
        else spec.gamma = Rational::parse(cfg.gamma);
        spec.validate();
        const spt::OrthoSystem sys = spt::monic_ops(spt::moments_for(spec, cfg.n_max), cfg.n_max);

        if (format == "json") {
            os << envelope("polys", {{"family", "hankel"}, {"convention", spt::to_string(spec.convention)},
                                     {"gamma", spec.gamma.str()}, {"n_max", cfg.n_max}},
                           spt::to_json(sys))
                      .dump(2)
               << '\n';
        } else if (format == "csv") {
            os << "n,poly,xi\n";
            for (unsigned n = 0; n <= sys.n_max(); ++n)
                os << n << ",\"" << sys.poly(n).str() << "\"," << sys.xi()[n].str() << '\n';
        } else {
            for (unsigned n = 0; n <= sys.n_max(); ++n)
                os << "P_" << n << "(x) = " << sys.poly(n).str() << "    xi_" << n << " = " << sys.xi()[n].str() << '\n';
        }
        return 0;
    }

    if (cfg.family != "shift") throw spt::DomainError("unknown family '" + cfg.family + "' (hankel|shift)");
    const Rational g = Rational::parse(cfg.gamma);
    spt::RecurrenceFamily fam;
    if (g == Rational(0)) fam = {spt::ShiftFamily::Gamma0, Rational(1, 2)};
    else if (g == Rational(1)) fam = {spt::ShiftFamily::Gamma1, Rational(1, 2)};
    else fam = {spt::ShiftFamily::Sigma, g};
    const auto phi = spt::phi_family(fam, cfg.n_max);

    // Second path: the Meixner-Pollaczek / Pollaczek recurrence in u = x / sqrt2.
    double worst = 0.0;
    for (double x : {-2.0, -0.5, 0.3, 1.7}) {
        const double u = x / std::sqrt(2.0);
        for (unsigned n = 0; n <= cfg.n_max; ++n) {
            double ref = 0.0;
            switch (fam.kind) {
                case spt::ShiftFamily::Gamma0: ref = spt::mp_eval(0.5, u, std::numbers::pi / 2.0, n); break;
                case spt::ShiftFamily::Gamma1:
                    ref = spt::pollaczek_eval({Rational(1, 2), std::numbers::pi / 2.0, Rational(1)}, u, n);
                    break;
                case spt::ShiftFamily::Sigma: ref = spt::mp_eval(g.to_double(), u, std::numbers::pi / 2.0, n); break;
            }
            worst = std::max(worst, std::abs(phi[n].eval(x) - ref) / std::max(1.0, std::abs(ref)));
        }
    }
    const bool agree = worst < 1e-10;

    if (format == "json") {
        json payload = spt::family_to_json(fam, phi);
        payload["cross_check"] = {{"method", fam.kind == spt::ShiftFamily::Gamma1 ? "pollaczek_eval" : "mp_eval"},
                                  {"x", {-2.0, -0.5, 0.3, 1.7}}, {"max_rel_err", worst}, {"agree", agree}};
        os << envelope("polys", {{"family", "shift"}, {"gamma", g.str()}, {"n_max", cfg.n_max}}, payload).dump(2) << '\n';
    } else if (format == "csv") {
        os << "n,poly\n";
        for (unsigned n = 0; n <= cfg.n_max; ++n) os << n << ",\"" << phi[n].str() << "\"\n";
    } else {
        for (unsigned n = 0; n <= cfg.n_max; ++n) os << "phi_" << n << "(x) = " << phi[n].str() << '\n';
        os << "cross-check max rel err " << fmt17(worst) << (agree ? " (agree)" : " (DISAGREE)") << '\n';
    }
    if (!agree) std::cerr << "spt-nlcs: recurrence and closed-form paths disagree (" << worst << ")\n";
    return agree ? 0 : kExitFail;
}

void print_table(std::ostream& os, const json& data) {
    if (!data.is_array() || data.empty() || !data.front().is_object()) return;
    for (const auto& row : data) {
        os << "      ";
        bool first = true;
        for (const auto& [k, v] : row.items()) {
            if (v.is_structured()) continue;
            os << (first ? "" : "  ") << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
            first = false;
        }
        os << '\n';
    }
}

int cmd_verify(const Config& cfg) {
    const std::string format = cfg.format.empty() ? "pretty" : cfg.format;
    if (format == "csv") throw spt::DomainError("verify supports --format json|pretty");
    const auto reports = spt::run_suites(cfg.suite, {cfg.verify_n});
    const spt::Status status = spt::overall(reports);
    Sink sink(cfg.output);
    std::ostream& os = sink.os();
    if (format == "json") {
        json suites = json::array();
        for (const auto& r : reports) suites.push_back(spt::to_json(r));
        json cfgj = {{"suite", cfg.suite}};
        cfgj["n_max"] = cfg.verify_n ? json(*cfg.verify_n) : json(nullptr);
        os << envelope("verify", cfgj, {{"status", spt::to_string(status)}, {"suites", suites}}).dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            os << "== " << r.suite << ": " << spt::to_string(r.status()) << '\n';
            for (const auto& c : r.records) {
                os << "  [" << spt::to_string(c.status) << "] " << c.check << ": " << c.detail << '\n';
                print_table(os, c.data);
            }
        }
        os << "overall: " << spt::to_string(status) << '\n';
    }
    return status == spt::Status::Fail ? kExitFail : 0;
}

spt::CSParams cs_params(const Config& cfg) {
    spt::CSParams p;
    p.gamma = to_double(cfg.gamma);
    p.nu = cfg.nu ? to_double(*cfg.nu) : std::max(p.gamma, 1.0);
    p.alpha = to_double(cfg.alpha);
    p.validate();
    return p;
}

int cmd_cs(const Config& cfg) {
    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    const spt::CSParams p = cs_params(cfg);
    const Complex z = parse_complex(cfg.z);
    if (cfg.grid < 2) throw spt::DomainError("--grid needs at least 2 points");
    if (cfg.method != "series" && cfg.method != "closed") throw spt::DomainError("--method is series|closed");
    const spt::NLCSState state(p, z);
    const bool closed = cfg.method == "closed";
    if (closed) (void)spt::wavefunction_closed(0.0, z, p);  // rejects gamma != nu before any output

    const double h = p.half_width();
    std::vector<double> theta(cfg.grid);
    std::vector<Complex> psi(cfg.grid);
    for (unsigned i = 0; i < cfg.grid; ++i) {
        theta[i] = i + 1 == cfg.grid ? h : -h + 2.0 * h * i / (cfg.grid - 1);
        psi[i] = closed ? spt::wavefunction_closed(theta[i], z, p) : state.wavefunction(theta[i]);
    }

    Sink sink(cfg.output);
    std::ostream& os = sink.os();
    if (format == "json") {
        json re = json::array(), im = json::array(), a2 = json::array();
        for (const auto& v : psi) {
            re.push_back(v.real());
            im.push_back(v.imag());
            a2.push_back(std::norm(v));
        }
        json payload = {{"theta", theta}, {"re", re}, {"im", im}, {"abs2", a2},
                        {"norm", state.norm()}, {"truncation", state.truncation()}};
        os << envelope("cs", {{"gamma", cfg.gamma}, {"nu", p.nu}, {"alpha", p.alpha}, {"z", {z.real(), z.imag()}},
                              {"grid", cfg.grid}, {"method", cfg.method}},
                       payload)
                  .dump(2)
           << '\n';
    } else {
        os << "theta,re,im,abs2\n";
        for (unsigned i = 0; i < cfg.grid; ++i)
            os << fmt17(theta[i]) << ',' << fmt17(psi[i].real()) << ',' << fmt17(psi[i].imag()) << ','
               << fmt17(std::norm(psi[i])) << '\n';
    }
    return 0;
}

int cmd_bargmann(const Config& cfg) {
    const std::string format = cfg.format.empty() ? "pretty" : cfg.format;
    const double g = to_double(cfg.gamma);
    const double alpha = to_double(cfg.alpha);
    const Complex z = parse_complex(cfg.z);
    if (cfg.variant != "cos" && cfg.variant != "sin") throw spt::DomainError("--variant is cos|sin");
    const auto variant = cfg.variant == "sin" ? spt::KernelVariant::Sin : spt::KernelVariant::Cos;
    const spt::TransformResult r = spt::bargmann_basis(cfg.basis, z, g, alpha, cfg.nodes, variant);
    const double xf = spt::cs_factorial(cfg.basis, g);
    const Complex expected = std::pow(z, static_cast<int>(cfg.basis)) / std::sqrt(xf);
    const double rel_err = std::abs(r.value - expected) / std::abs(expected);
    const bool ok = rel_err < 1e-8 && r.converged();

    Sink sink(cfg.output);
    std::ostream& os = sink.os();
    if (format == "json") {
        json payload = {{"n", cfg.basis},
                        {"value", {r.value.real(), r.value.imag()}},
                        {"expected", {expected.real(), expected.imag()}},
                        {"x_n_factorial", xf},
                        {"rel_err", rel_err},
                        {"node_doubling_change", r.change},
                        {"nodes", r.nodes},
                        {"status", ok ? "PASS" : "FAIL"}};
        os << envelope("bargmann", {{"gamma", cfg.gamma}, {"alpha", alpha}, {"basis", cfg.basis}, {"z", {z.real(), z.imag()}},
                                    {"variant", cfg.variant}},
                       payload)
                  .dump(2)
           << '\n';
    } else if (format == "csv") {
        os << "n,re,im,expected_re,expected_im,rel_err,change\n"
           << cfg.basis << ',' << fmt17(r.value.real()) << ',' << fmt17(r.value.imag()) << ',' << fmt17(expected.real())
           << ',' << fmt17(expected.imag()) << ',' << fmt17(rel_err) << ',' << fmt17(r.change) << '\n';
    } else {
        os << "B[phi_" << cfg.basis << "](z) = " << fmt17(r.value.real()) << (r.value.imag() < 0 ? " - " : " + ")
           << fmt17(std::abs(r.value.imag())) << "i\n"
           << "z^n/sqrt(x_n!) = " << fmt17(expected.real()) << (expected.imag() < 0 ? " - " : " + ")
           << fmt17(std::abs(expected.imag())) << "i\n"
           << "rel err " << fmt17(rel_err) << ", node-doubling change " << fmt17(r.change) << ": "
           << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poschl-Teller nonlinear coherent states: exact tables, verification, plot data"};
    app.require_subcommand(1);
    Config cfg;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json|csv|pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
    };

    auto* polys = app.add_subcommand("polys", "orthogonal polynomial tables");
    polys->add_option("--family", cfg.family, "hankel|shift")->check(CLI::IsMember({"hankel", "shift"}));
    polys->add_option("--convention", cfg.convention, "gen-factorial|factorial-squared|shifted-factorial-squared");
    polys->add_option("--gamma", cfg.gamma, "gamma (or sigma for the shift family), e.g. 5/2");
    polys->add_option("--nmax", cfg.n_max, "highest degree")->check(CLI::Range(0u, 256u));
    common(polys);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite, "tables|identities|quadrature|asymptotics|all")
        ->check(CLI::IsMember({"tables", "identities", "quadrature", "asymptotics", "all"}));
    verify->add_option("--nmax", cfg.verify_n, "degree bound override")->check(CLI::Range(0u, 256u));
    common(verify);

    auto* cs = app.add_subcommand("cs", "NLCS wavefunction on a theta grid");
    cs->add_option("--gamma", cfg.gamma, "NLCS parameter gamma > 0");
    cs->add_option("--nu", cfg.nu, "potential strength nu >= 1 (default max(gamma, 1))");
    cs->add_option("--alpha", cfg.alpha, "range parameter alpha > 0");
    cs->add_option("--z", cfg.z, "complex label a+bi");
    cs->add_option("--grid", cfg.grid, "number of grid points");
    cs->add_option("--method", cfg.method, "series|closed (closed requires gamma = nu)");
    common(cs);

    auto* bg = app.add_subcommand("bargmann", "transform of a basis state");
    bg->add_option("--gamma", cfg.gamma, "gamma >= 1");
    bg->add_option("--alpha", cfg.alpha, "range parameter alpha > 0");
    bg->add_option("--basis", cfg.basis, "basis index n")->check(CLI::Range(0u, 256u));
    bg->add_option("--z", cfg.z, "complex point a+bi");
    bg->add_option("--nodes", cfg.nodes, "Gauss-Legendre nodes")->check(CLI::Range(8u, 4096u));
    bg->add_option("--variant", cfg.variant, "cos|sin kernel argument");
    common(bg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    // cs defaults to the square-well case.
    if (cs->parsed() && cs->count("--gamma") == 0) cfg.gamma = "1";
    if (bg->parsed() && bg->count("--gamma") == 0) cfg.gamma = "1";

    try {
        if (polys->parsed()) return cmd_polys(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (cs->parsed()) return cmd_cs(cfg);
        return cmd_bargmann(cfg);
    } catch (const spt::PositivityError& e) {
        std::cerr << "spt-nlcs: " << e.what() << '\n';
        return kExitPositivity;
    } catch (const std::invalid_argument& e) {  // includes UnsupportedError
        std::cerr << "spt-nlcs: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "spt-nlcs: " << e.what() << '\n';
        return kExitConfig;
    } catch (const spt::ExactnessError& e) {
        std::cerr << "spt-nlcs: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "spt-nlcs: " << e.what() << '\n';
        return kExitFail;
    }
}
