#include "fibexp/exponents.hpp"
#include "fibexp/families.hpp"
#include "fibexp/report.hpp"
#include "fibexp/sequence.hpp"
#include "fibexp/symmetrizer.hpp"
#include "fibexp/xi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fibexp;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitPrecision = 3;

struct CommonOpts {
    std::string family;            // "a,b,c"
    std::vector<std::string> seed; // 8 decimal integers, w0 then w1, row-major
    std::string seed_file;
    double t = -1, eps = -1;
    std::size_t imax = 15;
    unsigned digits = 16;
    long xmax_omega = 5000;
    long xmax_lambda = 10000000;
    double tol = 0.1;
    std::string format = "csv";
    std::string out;
    unsigned threads = 0;
    bool rational = false;
    std::string grid = "default";
};

FamilyParams parse_family(const std::string& s) {
    long long a, b, c;
    char sep1, sep2;
    std::istringstream is(s);
    if (!(is >> a >> sep1 >> b >> sep2 >> c) || sep1 != ',' || sep2 != ',')
        throw std::invalid_argument("--family expects a,b,c");
    return make_family(a, b, c);
}

SeedPair seed_from_ints(const std::vector<Int>& v) {
    if (v.size() != 8)
        throw std::invalid_argument("a seed is 8 integers: w0 then w1, row-major");
    const Mat2 w0{v[0], v[1], v[2], v[3]};
    const Mat2 w1{v[4], v[5], v[6], v[7]};
    return is_admissible(w0, w1);
}

SeedPair seed_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open seed file " + path);
    std::vector<Int> v;
    std::string tok;
    while (in >> tok) v.emplace_back(tok);
    return seed_from_ints(v);
}

struct ResolvedInput {
    SeedPair seed;
    std::optional<FamilyParams> family;
    std::optional<TargetParams> target;
};

ResolvedInput resolve_input(const CommonOpts& o, bool allow_target) {
    ResolvedInput r;
    if (!o.family.empty()) {
        r.family = parse_family(o.family);
        r.seed = family_seed(*r.family);
    } else if (allow_target && o.t >= 0) {
        if (o.eps <= 0) throw std::invalid_argument("--t requires --eps > 0");
        r.target = target_params(o.t, o.eps);
        r.family = r.target->family;
        r.seed = family_seed(*r.family);
    } else if (!o.seed.empty()) {
        std::vector<Int> v;
        for (const auto& s : o.seed) v.emplace_back(s);
        r.seed = seed_from_ints(v);
    } else if (!o.seed_file.empty()) {
        r.seed = seed_from_file(o.seed_file);
    } else {
        throw std::invalid_argument("give a seed: --family, --seed, --seed-file or --t/--eps");
    }
    return r;
}

json config_echo(const std::string& command, const CommonOpts& o,
                 const ResolvedInput* in) {
    json cfg{{"command", command}, {"imax", o.imax}, {"format", o.format}};
    if (in && in->family)
        cfg["family"] = {json_int(in->family->a), json_int(in->family->b),
                         json_int(in->family->c)};
    if (in && in->target) {
        cfg["t"] = in->target->t;
        cfg["eps"] = in->target->eps;
        cfg["k"] = in->target->k;
        cfg["l"] = in->target->l;
    }
    if (!o.seed.empty()) cfg["seed"] = o.seed;
    if (!o.seed_file.empty()) cfg["seed_file"] = o.seed_file;
    if (command == "xi") cfg["digits"] = o.digits;
    if (command == "exponents") {
        cfg["xmax_omega"] = o.xmax_omega;
        cfg["xmax_lambda"] = o.xmax_lambda;
        cfg["tol"] = o.tol;
    }
    return cfg;
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
}

std::string csv_with_config(const json& cfg, const std::string& body) {
    std::string head;
    for (auto it = cfg.begin(); it != cfg.end(); ++it)
        head += "# " + it.key() + "=" + it.value().dump() + "\n";
    return head + body;
}

int cmd_verify(const CommonOpts& o) {
    ResolvedInput in = resolve_input(o, false);
    if (!in.seed.admissible()) {
        std::cout << "seed not admissible: " << to_string(in.seed.status) << "\n";
        return kExitCheckFailure;
    }
    FibSequence seq(in.seed);

    Report rep = verify_recurrences(seq, o.imax);
    {
        Report arith = verify_arithmetic(seq, o.imax);
        rep.entries.insert(rep.entries.end(), arith.entries.begin(), arith.entries.end());
        std::optional<GrowthExponents> env;
        if (in.family && !family_degenerate(*in.family))
            env = GrowthExponents{family_alpha(*in.family), family_beta(*in.family)};
        Report growth = verify_growth(seq, o.imax, env);
        rep.entries.insert(rep.entries.end(), growth.entries.begin(), growth.entries.end());
    }

    const json cfg = config_echo("verify", o, &in);
    if (o.format == "json") {
        json doc{{"config", cfg}, {"entries", rep.to_json()}, {"failures", rep.failures()}};
        write_text(o.out, doc.dump(2) + "\n");
    } else {
        std::ostringstream body;
        rep.write_csv(body);
        write_text(o.out, csv_with_config(cfg, body.str()));
    }

    if (!rep.all_pass()) {
        const CheckRecord* f = rep.first_failure();
        std::cout << "verify: FAIL " << f->check << " at index " << f->index
                  << (f->witness.empty() ? "" : " (" + f->witness + ")") << "\n";
        return kExitCheckFailure;
    }
    std::cout << "verify: all " << rep.entries.size() << " checks passed\n";
    return kExitOk;
}

int cmd_xi(const CommonOpts& o) {
    ResolvedInput in = resolve_input(o, true);
    if (!in.seed.admissible())
        throw std::invalid_argument(std::string("seed not admissible: ") +
                                    to_string(in.seed.status));
    FibSequence seq(in.seed);
    const BigReal xi = xi_approx(seq, o.digits);

    std::cout << "xi = " << xi.decimal(o.digits) << " +/- " << xi.err_string()
              << " (depth " << xi.depth << ")\n";
    if (o.rational)
        std::cout << "xi ~ " << numerator(xi.value) << "/" << denominator(xi.value) << "\n";

    if (!o.out.empty()) {
        const json cfg = config_echo("xi", o, &in);
        json doc{{"config", cfg},
                 {"decimal", xi.decimal(o.digits)},
                 {"err", xi.err_string()},
                 {"depth", xi.depth}};
        if (o.rational)
            doc["rational"] = numerator(xi.value).str() + "/" + denominator(xi.value).str();
        write_text(o.out, doc.dump(2) + "\n");
    }
    return kExitOk;
}

json estimate_json(const ExponentEstimate& e) {
    json samples = json::array();
    for (const auto& s : e.samples) samples.push_back({{"at", s.at}, {"slope", s.slope}});
    return {{"estimate", e.estimate}, {"samples", samples}};
}

int cmd_exponents(const CommonOpts& o) {
    ResolvedInput in = resolve_input(o, true);
    if (!in.seed.admissible())
        throw std::invalid_argument(std::string("seed not admissible: ") +
                                    to_string(in.seed.status));
    FibSequence seq(in.seed);
    const auto y = y_for_residuals(seq, o.imax);
    CandidateSlopes cs = candidate_slopes(seq, y, 3, o.imax);

    SweepRow row;
    row.depth = o.imax;
    row.omega_candidate = cs.omega.estimate;
    row.beta_star = cs.beta_star;
    if (in.target) {
        row.k = in.target->k;
        row.l = in.target->l;
    }
    if (in.family) {
        row.family = *in.family;
        row.alpha = family_alpha(*in.family);
        row.beta = family_beta(*in.family);
        if (in.target) row.alpha_rational = in.target->alpha_rational;
        const auto [lo, hi] = target_interval(row.alpha, row.beta);
        row.target_lo = lo;
        row.target_hi = hi;
        cs.omega.target_lo = lo;
        cs.omega.target_hi = hi;
    } else {
        row.target_lo = row.target_hi = std::nan("");
    }

    std::optional<ExponentEstimate> brute_omega, brute_lambda;
    if (o.xmax_omega > 0) {
        const auto rec = omega_records(y, o.xmax_omega, {o.threads});
        if (rec.size() >= 3) {
            brute_omega = uniform_slope(rec, ExponentKind::OmegaHat, EstimateMethod::BruteForce);
            row.omega_brute = brute_omega->estimate;
        }
    }
    if (o.xmax_lambda > 0) {
        const auto rec = lambda_records(y, o.xmax_lambda, {o.threads});
        if (rec.size() >= 3) {
            brute_lambda = uniform_slope(rec, ExponentKind::LambdaHat, EstimateMethod::BruteForce);
            row.lambda_brute = brute_lambda->estimate;
        }
    }
    if (row.lambda_brute)
        row.jarnik_residual = std::abs(*row.lambda_brute - (1.0 - 1.0 / row.omega_candidate));

    const json cfg = config_echo("exponents", o, &in);
    if (o.format == "json") {
        json doc{{"config", cfg},
                 {"row", sweep_json({row})[0]},
                 {"omega_candidate", estimate_json(cs.omega)}};
        json diag = json::array();
        for (const auto& s : cs.lambda_diagnostic)
            diag.push_back({{"at", s.at}, {"slope", s.slope}});
        doc["lambda_diagnostic"] = diag;
        if (brute_omega) doc["omega_brute"] = estimate_json(*brute_omega);
        if (brute_lambda) doc["lambda_brute"] = estimate_json(*brute_lambda);
        write_text(o.out, doc.dump(2) + "\n");
    } else {
        std::ostringstream body;
        write_sweep_csv(body, {row});
        write_text(o.out, csv_with_config(cfg, body.str()));
    }
    if (row.jarnik_residual)
        std::cout << "jarnik residual " << *row.jarnik_residual << " (tol " << o.tol << ", "
                  << (jarnik_check(*row.lambda_brute, row.omega_candidate, o.tol) ? "ok"
                                                                                  : "exceeded")
                  << ")\n";
    return kExitOk;
}

std::vector<TargetParams> parse_grid(const std::string& text) {
    std::vector<TargetParams> grid;
    if (text == "default") {
        for (const auto& [k, l] : std::vector<std::pair<long long, long long>>{
                 {3, 1}, {4, 1}, {5, 1}, {5, 2}, {7, 2}, {8, 3}})
            grid.push_back(params_from_kl(k, l));
        return grid;
    }
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ';')) {
        if (item.empty()) continue;
        long long k, l;
        char sep;
        std::istringstream ii(item);
        if (!(ii >> k >> sep >> l) || sep != ',')
            throw std::invalid_argument("--grid expects k,l;k,l;...");
        grid.push_back(params_from_kl(k, l));
    }
    return grid;
}

int cmd_sweep(const CommonOpts& o) {
    const std::vector<TargetParams> grid = parse_grid(o.grid);
    SweepOptions sopts;
    sopts.i_max = o.imax;
    sopts.x_omega = o.xmax_omega;
    sopts.x_lambda = o.xmax_lambda;
    sopts.threads = o.threads;
    const auto rows = density_sweep(grid, sopts);

    json cfg{{"command", "sweep"}, {"grid", o.grid},        {"imax", o.imax},
             {"xmax_omega", o.xmax_omega}, {"xmax_lambda", o.xmax_lambda},
             {"format", o.format}};
    if (o.format == "json") {
        json doc{{"config", cfg}, {"rows", sweep_json(rows)}};
        write_text(o.out, doc.dump(2) + "\n");
    } else {
        std::ostringstream body;
        write_sweep_csv(body, rows);
        write_text(o.out, csv_with_config(cfg, body.str()));
    }
    return kExitOk;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_target, bool with_budgets) {
    auto* family = cmd->add_option("--family", o.family, "family parameters a,b,c");
    auto* seed =
        cmd->add_option("--seed", o.seed, "seed matrices: 8 integers, w0 then w1 row-major")
            ->expected(8);
    auto* seed_file = cmd->add_option("--seed-file", o.seed_file,
                                      "file with 8 whitespace-separated integers");
    family->excludes(seed)->excludes(seed_file);
    seed->excludes(seed_file);
    if (with_target) {
        auto* t = cmd->add_option("--t", o.t, "target parameter t in (0, 1/gamma^2)");
        cmd->add_option("--eps", o.eps, "target tolerance eps > 0");
        t->excludes(family)->excludes(seed)->excludes(seed_file);
    }
    cmd->add_option("--imax", o.imax, "deepest sequence index to use");
    if (with_budgets) {
        cmd->add_option("--xmax-omega", o.xmax_omega,
                        "height cap for the quadratic linear-form scan (0 = skip)");
        cmd->add_option("--xmax-lambda", o.xmax_lambda,
                        "height cap for the linear simultaneous scan (0 = skip)");
        cmd->add_option("--tol", o.tol, "tolerance for the jarnik residual line");
    }
    cmd->add_option("--format", o.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fibonacci matrix sequences, their limit numbers and "
                 "uniform approximation exponents"};
    app.require_subcommand(1);

    CommonOpts vo, xo, eo, so;

    CLI::App* verify = app.add_subcommand("verify", "run the exact identity checks");
    add_common(verify, vo, false, false);

    CLI::App* xi = app.add_subcommand("xi", "compute the limit number");
    add_common(xi, xo, true, false);
    xi->add_option("--digits", xo.digits, "certified decimal digits")
        ->check(CLI::Range(1u, 100000u));
    xi->add_flag("--rational", xo.rational, "also print the exact rational approximant");

    CLI::App* expo = app.add_subcommand("exponents", "estimate the uniform exponents");
    add_common(expo, eo, true, true);
    eo.imax = 14;

    CLI::App* sweep = app.add_subcommand("sweep", "exponent targets over a (k,l) grid");
    add_common(sweep, so, false, true);
    sweep->add_option("--grid", so.grid, "k,l;k,l;... or 'default'");
    so.imax = 14;
    so.xmax_omega = 1000;
    so.xmax_lambda = 100000;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (verify->parsed()) return cmd_verify(vo);
        if (xi->parsed()) return cmd_xi(xo);
        if (expo->parsed()) return cmd_exponents(eo);
        if (sweep->parsed()) return cmd_sweep(so);
    } catch (const PrecisionError& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitConfigError;
}
