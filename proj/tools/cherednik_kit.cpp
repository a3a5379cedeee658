// Command-line front end: evaluate functions, tabulate kernels, run the verification suites.
// Exit codes: 0 pass, 1 check failure, 2 usage, 3 numeric failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cherednik/basis.hpp"
#include "cherednik/jacobi.hpp"
#include "cherednik/opdam.hpp"
#include "cherednik/suite.hpp"
#include "cherednik/transform.hpp"

using namespace cherednik;

namespace {

constexpr int exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_numeric = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double alpha = 1.5;
    double beta = 0.5;
    std::string lambda = "1";
    std::optional<double> x, y, z;
    double delta = 2.0;
    int n = 0;
    int nodes = 401;
    std::string out;
    std::string config;
    std::map<std::string, double> tolerances;
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw UsageError("bad number for " + key + ": '" + v + "'");
    }
}

// "re" or "re,im"
cplx parse_lambda(const std::string& v) {
    const auto comma = v.find(',');
    if (comma == std::string::npos) return parse_double("lambda", trim(v));
    return {parse_double("lambda", trim(v.substr(0, comma))), parse_double("lambda", trim(v.substr(comma + 1)))};
}

// Flat key=value lines, '#' comments; values given on the command line win.
void apply_config(const std::string& path, Options& o, const CLI::App& sub) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    auto given = [&](const std::string& flag) { return sub.get_option_no_throw(flag) && sub.count(flag) > 0; };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key.rfind("tolerance.", 0) == 0) {
            const std::string name = key.substr(10);
            if (!default_tolerances().count(name)) throw UsageError("unknown config key: " + key);
            if (!given("--tol-" + name)) o.tolerances[name] = parse_double(key, val);
        } else if (key == "alpha") {
            if (!given("--alpha")) o.alpha = parse_double(key, val);
        } else if (key == "beta") {
            if (!given("--beta")) o.beta = parse_double(key, val);
        } else if (key == "lambda") {
            if (!given("--lambda")) o.lambda = val;
        } else if (key == "x") {
            if (!given("--x")) o.x = parse_double(key, val);
        } else if (key == "y") {
            if (!given("--y")) o.y = parse_double(key, val);
        } else if (key == "z") {
            if (!given("--z")) o.z = parse_double(key, val);
        } else if (key == "delta") {
            if (!given("--delta")) o.delta = parse_double(key, val);
        } else if (key == "n") {
            if (!given("--n")) o.n = static_cast<int>(parse_double(key, val));
        } else if (key == "out") {
            if (!given("--out")) o.out = val;
        } else {
            throw UsageError("unknown config key: " + key);
        }
    }
}

CheckRow base_row(const Params& p, const std::string& suite, const std::string& id) {
    CheckRow r;
    r.suite = suite;
    r.check_id = id;
    r.alpha = p.alpha();
    r.beta = p.beta();
    return r;
}

double require(const std::optional<double>& v, const std::string& flag) {
    if (!v) throw UsageError(flag + " is required");
    return *v;
}

std::vector<CheckRow> cmd_eval(const Params& p, const Options& o) {
    const double x = require(o.x, "--x");
    const cplx l = parse_lambda(o.lambda);
    std::vector<CheckRow> rows;
    auto add = [&](const std::string& id, double v) {
        CheckRow r = base_row(p, "eval", id);
        r.lambda = l;
        r.x = x;
        r.measured = v;
        rows.push_back(r);
    };
    const cplx g = G(p, l, x), f = phi(p, l, x);
    add("G_re", g.real());
    add("G_im", g.imag());
    add("phi_re", f.real());
    add("phi_im", f.imag());
    return rows;
}

std::vector<CheckRow> cmd_kernel(const Params& p, const Options& o) {
    const double x = require(o.x, "--x"), y = require(o.y, "--y");
    std::vector<double> zs;
    if (o.z) {
        zs.push_back(*o.z);
    } else {
        if (o.nodes < 2) throw UsageError("--n must be at least 2 for a kernel table");
        // the double interval I_{x,y} plus 10% margins
        const double hi = std::abs(x) + std::abs(y), span = 1.1 * hi;
        for (int k = 0; k < o.nodes; ++k) zs.push_back(-span + 2.0 * span * k / (o.nodes - 1));
    }
    std::vector<CheckRow> rows;
    for (double z : zs) {
        CheckRow r = base_row(p, "kernel", "K");
        r.x = x;
        r.y = y;
        r.z = z;
        r.measured = kernel_K(p, x, y, z);
        rows.push_back(r);
    }
    return rows;
}

std::vector<CheckRow> cmd_transform(const Params& p, const Options& o) {
    const cplx l = parse_lambda(o.lambda);
    const BasisIndex b(o.n, o.delta);
    SampledFunction h([&](double x) { return cplx(h_eval(p, b, x)); }, 20.0, 128);
    const cplx closed = transform_closed_form(p, b, l), quad = opdam_transform(p, h, l);
    const double tol = o.tolerances.count("basis") ? o.tolerances.at("basis") : default_tolerances().at("basis");
    std::vector<CheckRow> rows;
    auto add = [&](const std::string& id, double v) {
        CheckRow r = base_row(p, "transform", id);
        r.lambda = l;
        r.z = o.delta;
        r.measured = v;
        rows.push_back(r);
        return &rows.back();
    };
    add("H" + std::to_string(o.n) + "_closed_re", closed.real());
    add("H" + std::to_string(o.n) + "_closed_im", closed.imag());
    add("H" + std::to_string(o.n) + "_quadrature_re", quad.real());
    add("H" + std::to_string(o.n) + "_quadrature_im", quad.imag());
    const double rel = std::abs(closed - quad) / std::max(std::abs(closed), 1e-300);
    CheckRow* r = add("H" + std::to_string(o.n) + "_rel_diff", rel);
    r->bound = tol;
    r->pass = rel <= tol;
    return rows;
}

std::vector<CheckRow> cmd_basis(const Params& p, const Options& o) {
    const BasisIndex b(o.n, o.delta);
    std::vector<double> xs;
    if (o.x) {
        xs.push_back(*o.x);
    } else {
        for (int k = 0; k <= 80; ++k) xs.push_back(-4.0 + 0.1 * k);
    }
    std::vector<CheckRow> rows;
    for (double x : xs) {
        CheckRow r = base_row(p, "basis", "H" + std::to_string(o.n));
        r.x = x;
        r.z = o.delta;
        r.measured = h_eval(p, b, x);
        rows.push_back(r);
    }
    CheckRow g = base_row(p, "basis", "gram_diagonal");
    g.z = o.delta;
    g.measured = gram(p, o.delta, o.n, o.n);
    rows.push_back(g);
    CheckRow f = base_row(p, "basis", "gram_norm_formula");
    f.z = o.delta;
    f.measured = gram_norm(p, o.delta, o.n);
    rows.push_back(f);
    return rows;
}

void write_rows(const std::vector<CheckRow>& rows, const std::string& out) {
    std::ostringstream s;
    s << csv_header << '\n';
    for (const CheckRow& r : rows) s << csv_line(r) << '\n';
    if (out.empty() || out == "-") {
        std::cout << s.str();
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluate, tabulate and verify the trigonometric Dunkl-Cherednik harmonic analysis toolkit"};
    app.require_subcommand(1);
    Options o;
    std::map<std::string, double> tol_flags;

    auto add_common = [&](CLI::App* s) {
        s->add_option("--alpha", o.alpha, "alpha (default 1.5)");
        s->add_option("--beta", o.beta, "beta (default 0.5)");
        s->add_option("--lambda", o.lambda, "spectral parameter: re or re,im");
        s->add_option("--x", o.x, "x");
        s->add_option("--y", o.y, "y");
        s->add_option("--z", o.z, "z");
        s->add_option("--delta", o.delta, "basis parameter delta > 0 (default 2)");
        s->add_option("--n", o.n, "basis index, or node count for kernel tables");
        s->add_option("--out", o.out, "CSV output path (default stdout)");
        s->add_option("--config", o.config, "key=value config file");
        for (const auto& [key, v] : default_tolerances())
            s->add_option("--tol-" + key, tol_flags[key], "tolerance for the " + key + " suite");
    };
    CLI::App* eval = app.add_subcommand("eval", "G_lambda(x) and phi_lambda(x)");
    CLI::App* kernel = app.add_subcommand("kernel", "tabulate K(x, y, z)");
    CLI::App* transform = app.add_subcommand("transform", "transform of H_n: closed form against quadrature");
    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    CLI::App* basis = app.add_subcommand("basis", "H_n on a grid and its Gram entries");
    for (CLI::App* s : {eval, kernel, transform, verify, basis}) add_common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    CLI::App* sub = app.get_subcommands().front();

    try {
        for (const auto& [key, v] : default_tolerances())
            if (sub->count("--tol-" + key)) o.tolerances[key] = tol_flags[key];
        if (sub == kernel && sub->count("--n")) o.nodes = o.n;
        if (!o.config.empty()) apply_config(o.config, o, *sub);
        for (const auto& [key, v] : o.tolerances)
            if (!(v > 0.0)) throw UsageError("tolerance." + key + " must be positive");
        std::optional<Params> p;
        try {
            p.emplace(o.alpha, o.beta);
        } catch (const ParameterError& e) {
            throw UsageError(e.what());
        }

        if (sub == verify) {
            SuiteOutcome res = run_suite(*p, o.tolerances);
            write_rows(res.rows, o.out);
            for (const std::string& s : res.skipped) std::cerr << "skipped: " << s << '\n';
            for (const std::string& e : res.errors) std::cerr << "numeric failure: " << e << '\n';
            if (!res.errors.empty()) return exit_numeric;
            return res.all_pass() ? exit_pass : exit_fail;
        }
        std::vector<CheckRow> rows;
        if (sub == eval) rows = cmd_eval(*p, o);
        if (sub == kernel) rows = cmd_kernel(*p, o);
        if (sub == transform) rows = cmd_transform(*p, o);
        if (sub == basis) rows = cmd_basis(*p, o);
        write_rows(rows, o.out);
        for (const CheckRow& r : rows)
            if (r.pass && !*r.pass) return exit_fail;
        return exit_pass;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParameterError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return exit_numeric;
    }
}
