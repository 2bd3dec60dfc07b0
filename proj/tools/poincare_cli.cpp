// poincare: evaluate kernels, transforms and group balls, and run the check suites.
//
// Exit codes: 0 success, 1 failed suite or numeric failure, 2 configuration error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "poincare/checks.hpp"
#include "poincare/errors.hpp"
#include "poincare/kernels.hpp"
#include "poincare/records.hpp"
#include "poincare/shc.hpp"

using namespace poincare;
using records::Json;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string z = "0.3+1.7i";
    std::string w = "2.4i";
    std::string s = "3";
    std::string t = "1";
    std::string u = "1";
    std::string Z = "1";
    std::string r = "0:5:11";
    std::string y = "0,1,4";
    std::string rho = "1:5:5";
    double k = 0.0;
    double R = 20.0;
    double tol = 1e-3;
    double tail_coeff = 2.0;
    std::string multiplier = "eta_power";
    std::uint64_t seed = 20240611;
    std::string out;
    double vol = 0.0;
    double diam = 0.0;
    double Y = 2.0;
    int d_dim = 1;
};

// Wraps a parser so the message names the offending flag.
template <class F>
auto field(const char* name, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        throw ConfigError(std::string("--") + name + ": " + e.what());
    }
}

geom::Point point(const char* name, const std::string& text) {
    return field(name, [&] {
        const Complex c = records::parse_complex(text);
        if (!(c.imag() > 0.0)) throw DomainError("point must lie in the upper half-plane");
        return geom::Point(c);
    });
}

std::vector<double> grid(const char* name, const std::string& text) {
    return field(name, [&] { return records::parse_grid(text); });
}

std::vector<Complex> complex_list(const char* name, const std::string& text) {
    return field(name, [&] {
        std::vector<Complex> out;
        if (text.find(':') != std::string::npos) {
            for (double x : records::parse_grid(text)) out.emplace_back(x, 0.0);
            return out;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(records::parse_complex(item));
        return out;
    });
}

fuchsian::MultiplierSystem multiplier(const Options& o) {
    if (o.multiplier == "eta_power") return fuchsian::MultiplierSystem::eta_power(o.k);
    if (o.multiplier == "trivial")
        return field("k", [&] { return fuchsian::MultiplierSystem::trivial(o.k); });
    throw ConfigError("--multiplier: expected eta_power or trivial");
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ConfigError("--out: cannot open " + o.out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json error_entry(const std::string& context, const std::exception& e) {
    Json j;
    j["context"] = context;
    j["error"] = e.what();
    return j;
}

int cmd_kernel(const std::string& kind, const Options& o) {
    const geom::Point z = point("z", o.z), w = point("w", o.w);
    if (!(o.R > 1.0)) throw ConfigError("--R: must exceed 1");
    if (!(o.tail_coeff > 0.0)) throw ConfigError("--tail-coeff: must be positive");
    const auto ms = multiplier(o);
    Json out;
    out["schema"] = 1;
    out["command"] = "kernel " + kind;
    out["multiplier"] = o.multiplier;
    Json recs = Json::array();
    Json errors = Json::array();
    auto attempt = [&](const std::string& ctx, auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            errors.push_back(error_entry(ctx, e));
        }
    };
    if (kind == "geom" || kind == "resolvent") {
        for (Complex s : complex_list("s", o.s))
            attempt("s=" + records::format_complex(s), [&] {
                const kernels::KernelParams p{s, o.k, o.R, o.tail_coeff};
                const auto v = kind == "geom" ? kernels::geometric_kernel(z, w, p, ms)
                                              : kernels::resolvent_kernel(z, w, p, ms);
                recs.push_back(records::kernel_record(z, w, s, o.k, o.R, v));
            });
    } else if (kind == "heat") {
        for (double t : grid("t", o.t))
            attempt("t=" + std::to_string(t), [&] {
                const auto v = kernels::heat_kernel_M(t, z, w, o.R, ms, o.tail_coeff);
                Json rec = records::kernel_record(z, w, Complex(0.0), o.k, o.R, v);
                rec["t"] = t;
                recs.push_back(std::move(rec));
            });
    } else {
        const Complex Zv = field("Z", [&] { return records::parse_complex(o.Z); });
        if (!(o.tol > 0.0)) throw ConfigError("--tol: must be positive");
        for (double u : grid("u", o.u))
            attempt("u=" + std::to_string(u), [&] {
                const auto v = kernels::poisson_kernel_M(u, Zv, z, w, o.R, ms, o.tol, o.tail_coeff);
                Json rec = records::kernel_record(z, w, Complex(0.0), o.k, o.R, v);
                rec["u"] = u;
                rec["Z"] = records::format_complex(Zv);
                recs.push_back(std::move(rec));
            });
    }
    out["records"] = std::move(recs);
    if (!errors.empty()) out["errors"] = std::move(errors);
    const bool failed = out.contains("errors");
    emit(o, dump(out));
    return failed ? 1 : 0;
}

int cmd_transform(const std::string& kind, const Options& o) {
    const std::vector<Complex> ss = complex_list("s", o.s);
    if (ss.size() != 1) throw ConfigError("--s: transform takes a single s");
    const Complex s = ss.front();
    std::vector<shc::TracePoint> trace;
    bool failed = false;
    if (kind == "h") {
        const shc::WaveTestParams p{s, o.k};
        field("s", [&] { p.validate(); return 0; });
        const auto g = shc::wave_test_function(s);
        for (double r : grid("r", o.r)) {
            const Complex closed = shc::h_gs_closed(p, r);
            const auto q = shc::fourier_h(g, r);
            trace.push_back({r, closed, std::abs(q.value - closed)});
        }
    } else if (kind == "forward") {
        shc::ProfileFunction P{[&](double x) { return kernels::phi_s_closed(x / 4.0, s, o.k); }, s.real()};
        field("s", [&] { return P.phi(0.0); });
        for (double y : grid("y", o.y)) {
            const auto e = shc::q_forward(P, y, o.k);
            trace.push_back({y, e.value, e.error});
        }
    } else if (kind == "inverse") {
        const auto g = shc::wave_test_function(s);
        field("s", [&] { shc::WaveTestParams{s, o.k}.validate(); return 0; });
        for (double x : grid("y", o.y)) {
            const auto e = shc::phi_inverse(g.q_prime, x, o.k);
            trace.push_back({x, e.value, e.error});
        }
    } else {
        // Phi_s -> Q -> g -> H against the closed form; the last column is the
        // relative residual.
        const shc::WaveTestParams p{s, o.k};
        field("s", [&] { p.validate(); return 0; });
        shc::ProfileFunction P{[&](double x) { return kernels::phi_s_closed(x / 4.0, s, o.k); }, s.real()};
        auto q = [&](double y) { return shc::q_forward(P, y, o.k).value; };
        shc::EvenTestFunction g{[&](double u) { return shc::g_from_q(q, u); }, s.real() - 0.5, 4, {}};
        for (double r : grid("r", o.r)) {
            const Complex h = shc::fourier_h(g, r).value;
            const Complex closed = shc::h_gs_closed(p, r);
            const double res = std::abs(h - closed) / std::abs(closed);
            failed = failed || !(res <= 1e-5);
            trace.push_back({r, h, res});
        }
    }
    std::ostringstream csv;
    shc::write_trace_csv(csv, trace);
    emit(o, csv.str());
    return failed ? 1 : 0;
}

int cmd_group(const std::string& kind, const Options& o) {
    const geom::Point z = point("z", o.z), w = point("w", o.w);
    Json out;
    out["schema"] = 1;
    out["command"] = "group " + kind;
    out["z"] = records::format_complex(z.complex());
    out["w"] = records::format_complex(w.complex());
    if (kind == "ball") {
        if (!(o.R >= 1.0)) throw ConfigError("--R: must be at least 1");
        const auto ball = fuchsian::enumerate_ball(z, w, o.R);
        out["R"] = o.R;
        out["columns"] = Json::array({"a", "b", "c", "d"});
        out["certified"] = ball.certified;
        out["count"] = ball.elements.size();
        out["elements"] = records::ball_rows(ball);
    } else {
        Json counts = Json::array();
        for (double rho : grid("rho", o.rho)) {
            Json c;
            c["rho"] = rho;
            c["N"] = fuchsian::counting_N(rho, z, w);
            counts.push_back(std::move(c));
        }
        out["counts"] = std::move(counts);
    }
    emit(o, dump(out));
    return 0;
}

int cmd_constants(const Options& o) {
    kernels::SupNormInputs in = kernels::modular_domain_inputs(o.k, o.Y, o.d_dim);
    if (o.vol > 0.0) in.vol = o.vol;
    if (o.diam > 0.0) in.diam = o.diam;
    const auto c = field("vol", [&] { return kernels::sup_norm_constants(in); });
    const geom::WeightContext ctx(o.k);
    Json out;
    out["schema"] = 1;
    out["command"] = "constants";
    out["k"] = o.k;
    out["d"] = in.d_dim;
    out["vol"] = in.vol;
    out["diam"] = in.diam;
    out["lambda0"] = ctx.lambda0();
    out["A"] = c.A;
    out["C"] = c.C;
    out["script_C"] = c.script_C;
    emit(o, dump(out));
    return 0;
}

int cmd_check(const std::string& name, const Options& o) {
    const checks::CheckConfig cfg{o.k, o.seed};
    std::vector<checks::SuiteReport> reps;
    try {
        reps = checks::run_suites(name, cfg);
    } catch (const UnknownSuite& e) {
        throw ConfigError(e.what());
    }
    const Json j = checks::report_json(reps, cfg);
    emit(o, dump(j));
    return j["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automorphic kernels, transforms and invariant checks on SL(2,Z)"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--k", o.k, "weight k");
        c->add_option("--out", o.out, "write output to this file");
    };
    auto add_points = [&](CLI::App* c) {
        c->add_option("--z", o.z, "point z as a+bi");
        c->add_option("--w", o.w, "point w as a+bi");
    };

    std::string kernel_kind, transform_kind, group_kind, suite;

    CLI::App* kernel = app.add_subcommand("kernel", "evaluate a group-summed kernel");
    kernel->add_option("kind", kernel_kind, "geom, resolvent, heat or poisson")
        ->required()
        ->check(CLI::IsMember({"geom", "resolvent", "heat", "poisson"}));
    add_common(kernel);
    add_points(kernel);
    kernel->add_option("--s", o.s, "spectral parameter(s): list of a+bi or start:stop:count");
    kernel->add_option("--t", o.t, "heat times");
    kernel->add_option("--u", o.u, "Poisson parameters u");
    kernel->add_option("--Z", o.Z, "Poisson shift Z as a+bi");
    kernel->add_option("--R", o.R, "sigma radius of the summation ball");
    kernel->add_option("--tol", o.tol, "largest acceptable tail bound (poisson)");
    kernel->add_option("--tail-coeff", o.tail_coeff, "inflation of the counting constant");
    kernel->add_option("--multiplier", o.multiplier, "eta_power or trivial");

    CLI::App* transform = app.add_subcommand("transform", "transform traces as CSV");
    transform->add_option("kind", transform_kind, "forward, inverse, roundtrip or h")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse", "roundtrip", "h"}));
    add_common(transform);
    transform->add_option("--s", o.s, "spectral parameter a+bi");
    transform->add_option("--r", o.r, "grid of r");
    transform->add_option("--y", o.y, "grid of y (forward) or x (inverse)");

    CLI::App* group = app.add_subcommand("group", "displacement balls and counting");
    group->add_option("kind", group_kind, "ball or count")->required()->check(CLI::IsMember({"ball", "count"}));
    add_common(group);
    add_points(group);
    group->add_option("--R", o.R, "sigma radius");
    group->add_option("--rho", o.rho, "grid of distances");

    CLI::App* constants = app.add_subcommand("constants", "sup-norm constants");
    add_common(constants);
    constants->add_option("--d", o.d_dim, "multiplier dimension");
    constants->add_option("--vol", o.vol, "volume (default: modular domain)");
    constants->add_option("--diam", o.diam, "diameter (default: truncated modular domain)");
    constants->add_option("--Y", o.Y, "truncation height of the modular domain");

    CLI::App* check = app.add_subcommand("check", "run invariant suites");
    check->add_option("suite", suite, "all or a suite id")->required();
    add_common(check);
    check->add_option("--seed", o.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*kernel) return cmd_kernel(kernel_kind, o);
        if (*transform) return cmd_transform(transform_kind, o);
        if (*group) return cmd_group(group_kind, o);
        if (*constants) return cmd_constants(o);
        return cmd_check(suite, o);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["schema"] = 1;
        err["error"] = e.what();
        std::cout << dump(err);
        return 1;
    }
}
