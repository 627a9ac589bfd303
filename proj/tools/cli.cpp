#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qspectral/error.hpp"
#include "qspectral/functional_calculus.hpp"
#include "qspectral/io.hpp"
#include "qspectral/perturbation.hpp"
#include "qspectral/schatten.hpp"
#include "qspectral/spectrum.hpp"
#include "qspectral/verify.hpp"

namespace qspectral::cli {

namespace {

struct Options {
    std::string matrix_path;
    std::string out_path;
    std::string s_text;
    std::string side = "left";
    std::string series_path;
    std::string slice = "e1";
    double radius = 0.0;
    int nodes = kDefaultNodes;
    std::string p_text = "2";
    int k = 2;
    std::string arc = "halfcircle";
    int n = 8;
    double bnorm = 0.05;
    std::uint64_t seed = 7;
    double t0 = 0.0;
    std::string config_path;
    int threads = 1;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
    } else {
        io::write_text_file(o.out_path, text);
    }
}

double parse_exponent(const std::string& text) {
    if (text == "inf" || text == "infinity") return kInfinity;
    try {
        std::size_t used = 0;
        const double p = std::stod(text, &used);
        if (used != text.size() || !(p >= 1.0)) throw std::invalid_argument(text);
        return p;
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadArgument, "exponent must be a number >= 1 or inf, got '" + text + "'");
    }
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("QSPECTRAL_SEED"); env && *env) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadArgument, "QSPECTRAL_SEED must be a non-negative integer");
        }
    }
    return flag_seed;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    const QMatrix t = io::matrix_from_json(io::read_json_file(o.matrix_path));
    emit(o, io::dump(io::to_json(s_spectrum(t))) + "\n", out);
    return 0;
}

int cmd_resolvent(const Options& o, std::ostream& out) {
    const QMatrix t = io::matrix_from_json(io::read_json_file(o.matrix_path));
    const Quaternion s = io::parse_quaternion(o.s_text);
    QMatrix r;
    if (o.side == "left") {
        r = s_resolvent_left(t, s);
    } else if (o.side == "right") {
        r = s_resolvent_right(t, s);
    } else {
        r = pseudo_resolvent(t, s).value;
    }
    emit(o, io::dump(io::to_json(r)) + "\n", out);
    return 0;
}

int cmd_funcalc(const Options& o, std::ostream& out) {
    const QMatrix t = io::matrix_from_json(io::read_json_file(o.matrix_path));
    const SliceSeries f = io::series_from_json(io::read_json_file(o.series_path));
    const double radius = o.radius > 0.0 ? o.radius : 2.0 * operator_norm(t) + 1.0;
    const SliceContour contour = SliceContour::circle(io::parse_unit(o.slice), radius, o.nodes);
    emit(o, io::dump(io::to_json(functional_calculus(t, f, contour, o.threads))) + "\n", out);
    return 0;
}

int cmd_schatten(const Options& o, std::ostream& out) {
    const QMatrix t = io::matrix_from_json(io::read_json_file(o.matrix_path));
    emit(o, io::dump(io::Json(schatten_norm(t, parse_exponent(o.p_text)))) + "\n", out);
    return 0;
}

int cmd_delta(const Options& o, std::ostream& out) {
    const QMatrix t = io::matrix_from_json(io::read_json_file(o.matrix_path));
    const DeltaValue d = delta_k(t, o.k, io::parse_unit(o.slice));
    emit(o, io::dump(io::Json{{"re", d.value.real()}, {"im", d.value.imag()}}) + "\n", out);
    return 0;
}

int cmd_growth(const Options& o, std::ostream& out, std::ostream& err) {
    const std::uint64_t seed = effective_seed(o.seed);
    ArcSpectrumEnsemble ensemble{Arc{parse_arc(o.arc)}, static_cast<std::size_t>(o.n), seed};
    const QMatrix a = ensemble.generate();
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const QMatrix b = o.bnorm > 0.0 ? random_schatten_perturbation(a.size(), o.k, o.bnorm, rng) : QMatrix(a.size());
    const SegmentProbe probe = SegmentProbe::normal_to(ensemble.arc, o.t0);
    const GrowthReport report = growth_experiment(a, b, o.k, probe);
    std::ostringstream csv;
    report.write_csv(csv);
    emit(o, csv.str(), out);
    err.precision(17);
    err << "rows=" << report.rows.size() << " fitted_K=" << report.fitted_k << " power_slope=" << report.power_slope
        << " log_growth_exponent=" << report.log_growth_exponent
        << " bound=" << (report.bound_holds ? "holds" : "violated") << '\n';
    return report.bound_holds ? 0 : 1;
}

void apply_config(Options& o, const CLI::App& growth) {
    if (o.config_path.empty()) return;
    const io::Json cfg = io::read_json_file(o.config_path);
    auto take = [&](const char* key, const char* flag, auto& field) {
        if (cfg.contains(key) && growth.get_option(flag)->count() == 0)
            field = cfg.at(key).get<std::remove_reference_t<decltype(field)>>();
    };
    try {
        take("arc", "--arc", o.arc);
        take("n", "--n", o.n);
        take("k", "--k", o.k);
        take("bnorm", "--bnorm", o.bnorm);
        take("seed", "--seed", o.seed);
        take("t0", "--t0", o.t0);
        take("out", "--out", o.out_path);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadArgument, std::string("bad config: ") + e.what());
    }
}

void validate(const Options& o) {
    if (o.nodes < 8) throw Error(ErrorKind::BadArgument, "--nodes must be at least 8");
    if (o.k < 1) throw Error(ErrorKind::BadArgument, "--k must be at least 1");
    if (o.n < 1 || o.n > 64) throw Error(ErrorKind::BadArgument, "--n must be in [1, 64]");
    if (o.bnorm < 0.0) throw Error(ErrorKind::BadArgument, "--bnorm must be non-negative");
    if (o.radius < 0.0) throw Error(ErrorKind::BadArgument, "--radius must be positive");
    if (o.threads < 1 || o.threads > 256) throw Error(ErrorKind::BadArgument, "--threads must be in [1, 256]");
    if (o.t0 < 0.0 || o.t0 > 1.0) throw Error(ErrorKind::BadArgument, "--t0 must be in [0, 1]");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Quaternionic spectral theory toolkit"};
    app.name("qspectral");
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "worker threads for quadrature (default 1)");

    auto* spectrum = app.add_subcommand("spectrum", "S-spectrum spheres with multiplicities");
    spectrum->add_option("matrix", o.matrix_path, "matrix JSON")->required();
    spectrum->add_option("--out", o.out_path);

    auto* resolvent = app.add_subcommand("resolvent", "S-resolvent or pseudo-resolvent at s");
    resolvent->add_option("matrix", o.matrix_path)->required();
    resolvent->add_option("--s", o.s_text, "x0,x1,x2,x3")->required();
    resolvent->add_option("--side", o.side)->check(CLI::IsMember({"left", "right", "pseudo"}));
    resolvent->add_option("--out", o.out_path);

    auto* funcalc = app.add_subcommand("funcalc", "S-functional calculus of a power series");
    funcalc->add_option("matrix", o.matrix_path)->required();
    funcalc->add_option("--series", o.series_path, "series JSON")->required();
    funcalc->add_option("--slice", o.slice, "e1|e2|e3|x,y,z");
    funcalc->add_option("--radius", o.radius, "contour radius (default 2||T||+1)");
    funcalc->add_option("--nodes", o.nodes, "quadrature nodes");
    funcalc->add_option("--out", o.out_path);

    auto* schatten = app.add_subcommand("schatten", "Schatten p-norm");
    schatten->add_option("matrix", o.matrix_path)->required();
    schatten->add_option("--p", o.p_text, "exponent >= 1 or inf");
    schatten->add_option("--out", o.out_path);

    auto* delta = app.add_subcommand("delta", "regularized determinant delta_k in a slice");
    delta->add_option("matrix", o.matrix_path)->required();
    delta->add_option("--k", o.k);
    delta->add_option("--slice", o.slice);
    delta->add_option("--out", o.out_path);

    auto* perturb = app.add_subcommand("perturb", "perturbation experiments");
    perturb->require_subcommand(1);
    auto* growth = perturb->add_subcommand("growth", "pseudo-resolvent growth along a probe segment");
    growth->add_option("--arc", o.arc)->check(CLI::IsMember({"halfcircle", "segment"}));
    growth->add_option("--n", o.n);
    growth->add_option("--k", o.k);
    growth->add_option("--bnorm", o.bnorm, "Schatten-k norm of the perturbation");
    growth->add_option("--seed", o.seed);
    growth->add_option("--t0", o.t0, "arc parameter of the probe start");
    growth->add_option("--out", o.out_path, "CSV path (default stdout)");
    growth->add_option("--config", o.config_path, "JSON file with the same keys as the flags");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--seed", o.seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        apply_config(o, *growth);
        validate(o);
        if (*spectrum) return cmd_spectrum(o, out);
        if (*resolvent) return cmd_resolvent(o, out);
        if (*funcalc) return cmd_funcalc(o, out);
        if (*schatten) return cmd_schatten(o, out);
        if (*delta) return cmd_delta(o, out);
        if (*growth) return cmd_growth(o, out, err);
        if (*verify) return run_invariant_suite(effective_seed(o.seed), out) ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.kind() == ErrorKind::BadArgument) {
            err << app.help();
            return 2;
        }
        return 1;
    }
    return 2;
}

}  // namespace qspectral::cli
