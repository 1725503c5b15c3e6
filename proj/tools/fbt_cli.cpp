#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "fbt/config.hpp"
#include "fbt/duality.hpp"
#include "fbt/growth.hpp"
#include "fbt/randgen.hpp"
#include "fbt/reducedness.hpp"
#include "fbt/variety.hpp"

using json = nlohmann::json;
using namespace fbt;

namespace {

constexpr int EXIT_MATH_FAIL = 1;
constexpr int EXIT_USAGE = 2;

json config_json(const RunConfig& cfg) {
    return {{"seed", cfg.seed},
            {"tolerances",
             {{"residual_rel", cfg.tol_residual_rel},
              {"rank_rel", cfg.tol_rank_rel},
              {"eval_rel", cfg.tol_eval_rel}}},
            {"grid", {{"radii", cfg.grid_radii}, {"angles", cfg.grid_angles}, {"R_max", cfg.grid_r_max}}},
            {"degree_caps", {{"D_max", cfg.d_max}, {"deg_max", cfg.deg_max}, {"nvars_max", cfg.nvars_max}}},
            {"output", {{"path", cfg.output_path}, {"format", cfg.format}}}};
}

std::string iso_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

void emit(const json& report, const RunConfig& cfg) {
    json out = report;
    out["config"] = config_json(cfg);
    out["version"] = tool_version();
    if (cfg.timestamp) out["timestamp"] = iso_now();
    std::string text = cfg.format == "jsonl" ? out.dump() + "\n" : out.dump(2) + "\n";
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    // atomic: write a sibling temp file, then rename over the target
    std::string tmp = cfg.output_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write " + tmp);
        f << text;
    }
    if (std::rename(tmp.c_str(), cfg.output_path.c_str()) != 0)
        throw std::invalid_argument("cannot move report into place: " + cfg.output_path);
}

Polynomial parse_poly_arg(const std::string& text, int nvars, const RunConfig& cfg) {
    Polynomial p = Polynomial::parse(text, nvars);
    if (p.nvars() > cfg.nvars_max)
        throw std::invalid_argument("nvars exceeds cap " + std::to_string(cfg.nvars_max));
    if (p.degree() > cfg.deg_max)
        throw std::invalid_argument("degree exceeds cap " + std::to_string(cfg.deg_max));
    return p;
}

ExactPoint parse_exact_point(const std::string& text, int nvars) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (static_cast<int>(parts.size()) != nvars)
        throw std::invalid_argument("point arity mismatch: expected " + std::to_string(nvars) +
                                    " coordinates");
    ExactPoint v;
    for (const std::string& s : parts) {
        Polynomial c = Polynomial::parse(s, 1);
        if (!c.is_constant()) throw std::invalid_argument("point coordinate is not a constant");
        v.push_back(c.is_zero() ? GaussianRational{} : c.terms().begin()->second);
    }
    return v;
}

json sample_json(const VarietySample& s) {
    json pt = json::array();
    for (const auto& c : s.point) pt.push_back({c.real(), c.imag()});
    return {{"point", pt},
            {"residual", s.residual},
            {"scale", s.scale},
            {"seed", s.seed},
            {"multiple", s.multiple}};
}

json growth_json(const GrowthCertificate& c) {
    return {{"statement", statement_name(c.statement)},
            {"A", c.A},
            {"r", c.r.get_str()},
            {"d", c.d},
            {"constant_exact", c.constant_exact.get_str()},
            {"constant", c.constant},
            {"M", c.M},
            {"samples_checked", c.samples_checked},
            {"bound", c.bound},
            {"attained", c.attained},
            {"max_slack", c.max_slack},
            {"violated", c.violated}};
}

int run_reduce_check(const std::string& ptext, int nvars, const RunConfig& cfg) {
    Polynomial p = parse_poly_arg(ptext, nvars, cfg);
    ReducednessReport rep = analyze_reducedness(p);
    emit({{"subcommand", "reduce-check"},
          {"p", p.str()},
          {"is_reduced", rep.is_reduced},
          {"squarefree_part", rep.squarefree_part.str()},
          {"repeated_part", rep.repeated_part.str()},
          {"witness_gcd", rep.witness_gcd.str()}},
         cfg);
    return 0;
}

int run_diagram_check(const std::string& ptext, int nvars, int count, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    int failures = 0;
    json cases = json::array();
    for (int k = 0; k < count; ++k) {
        int n = nvars > 0 ? nvars : std::uniform_int_distribution<int>(1, 3)(rng);
        Polynomial p = ptext.empty() ? random_polynomial(rng, n, 5)
                                     : parse_poly_arg(ptext, nvars, cfg);
        ExpFunctional t = random_functional(rng, p.nvars(), 3, 4);
        ExpPoly residual = diagram_check(p, t);
        bool zero = residual.is_zero();
        if (!zero) {
            ++failures;
            cases.push_back({{"p", p.str()}, {"T", t.str()}, {"residual", residual.str()},
                             {"exact_zero", false}});
        }
    }
    emit({{"subcommand", "diagram-check"},
          {"count", count},
          {"failures", failures},
          {"exact_zero", failures == 0},
          {"failed_cases", cases}},
         cfg);
    return failures == 0 ? 0 : EXIT_MATH_FAIL;
}

int run_kernel_dim(const std::string& ptext, int nvars, int D, bool with_basis,
                   const RunConfig& cfg) {
    if (D > cfg.d_max) throw std::invalid_argument("D exceeds cap");
    Polynomial p = parse_poly_arg(ptext, nvars, cfg);
    std::vector<Polynomial> basis = kernel_basis(p, D);
    long expected = dim_poly_space(p.nvars(), D) - dim_poly_space(p.nvars(), D - p.degree());
    json rep{{"subcommand", "kernel-dim"},
             {"p", p.str()},
             {"D", D},
             {"dim", basis.size()},
             {"expected_dim", expected}};
    if (with_basis) {
        json b = json::array();
        for (const Polynomial& f : basis) b.push_back(f.str());
        rep["basis"] = b;
    }
    emit(rep, cfg);
    return static_cast<long>(basis.size()) == expected ? 0 : EXIT_MATH_FAIL;
}

int run_exp_rank(const std::string& ptext, int nvars, int D, int count, const RunConfig& cfg) {
    if (D > cfg.d_max) throw std::invalid_argument("D exceeds cap");
    Polynomial p = parse_poly_arg(ptext, nvars, cfg);
    SamplerOptions opt;
    opt.tol_rel = cfg.tol_residual_rel;
    long kdim = static_cast<long>(kernel_basis(p, D).size());
    if (count <= 0) count = static_cast<int>(3 * kdim);
    std::vector<VarietySample> samples = sample_many(p, count, cfg.seed, opt);
    RankReport rep = exp_span_rank(p, D, samples, cfg.tol_rank_rel);
    emit({{"subcommand", "exp-rank"},
          {"p", p.str()},
          {"D", D},
          {"kernel_dim", rep.kernel_dim},
          {"sample_count", rep.sample_count},
          {"numerical_rank", rep.numerical_rank},
          {"singular_values", rep.singular_values},
          {"tolerance", rep.tolerance},
          {"verdict", rep.verdict == RankVerdict::saturates ? "saturates" : "deficient"}},
         cfg);
    return 0;
}

int run_counterexample(const std::string& ptext, int nvars, int D, const std::string& vtext,
                       const RunConfig& cfg) {
    if (D > cfg.d_max) throw std::invalid_argument("D exceeds cap");
    Polynomial p = parse_poly_arg(ptext, nvars, cfg);
    ExactPoint v;
    if (!vtext.empty()) {
        v = parse_exact_point(vtext, p.nvars());
    } else {
        ReducednessReport rep = analyze_reducedness(p);
        if (rep.is_reduced)
            throw std::invalid_argument("p is reduced; no gap functional exists");
        auto found = find_exact_zero(rep.repeated_part);
        if (!found)
            throw std::invalid_argument(
                "no exact rational zero of the repeated part found automatically; pass --point");
        v = *found;
    }
    CounterexampleRecord rec = counterexample(p, D, v);
    json vals = json::array();
    for (const auto& [m, c] : rec.S.values)
        if (!c.is_zero())
            vals.push_back({{"monomial", Polynomial::term(p.nvars(), m, GaussianRational{1}).str()},
                            {"value", c.str()}});
    json vj = json::array();
    for (const auto& c : rec.v) vj.push_back(c.str());
    emit({{"subcommand", "counterexample"},
          {"p", p.str()},
          {"D", D},
          {"q", rec.q.str()},
          {"repeated_part", rec.rp.str()},
          {"v", vj},
          {"S_nonzero_values", vals},
          {"kills_p_ideal", rec.kills_p_ideal},
          {"unit_on_q", rec.unit_on_q}},
         cfg);
    return rec.kills_p_ideal && rec.unit_on_q ? 0 : EXIT_MATH_FAIL;
}

int run_nst_shadow(const std::string& ptext, const std::string& ftext, int nvars, int count,
                   const RunConfig& cfg) {
    Polynomial p = parse_poly_arg(ptext, nvars, cfg);
    Polynomial f = parse_poly_arg(ftext, p.nvars(), cfg);
    SamplerOptions opt;
    opt.tol_rel = cfg.tol_residual_rel;
    std::vector<VarietySample> samples = sample_many(p, count > 0 ? count : 8, cfg.seed, opt);
    ShadowReport rep = nullstellensatz_shadow(p, f, samples);
    const char* verdict = rep.verdict == ShadowVerdict::does_not_vanish
                              ? "does_not_vanish"
                              : rep.verdict == ShadowVerdict::vanishes_and_divides
                                    ? "vanishes_and_divides"
                                    : "vanishes_division_fails";
    json out{{"subcommand", "nst-shadow"},
             {"p", p.str()},
             {"f", f.str()},
             {"verdict", verdict},
             {"max_scaled_residual", rep.max_scaled_residual}};
    if (rep.quotient) out["quotient"] = rep.quotient->str();
    emit(out, cfg);
    return 0;
}

int run_sample_variety(const std::string& ptext, int nvars, int count, const RunConfig& cfg) {
    Polynomial p = parse_poly_arg(ptext, nvars, cfg);
    SamplerOptions opt;
    opt.tol_rel = cfg.tol_residual_rel;
    std::vector<VarietySample> samples = sample_many(p, count > 0 ? count : 8, cfg.seed, opt);
    json arr = json::array();
    for (const auto& s : samples) arr.push_back(sample_json(s));
    emit({{"subcommand", "sample-variety"}, {"p", p.str()}, {"samples", arr}}, cfg);
    return 0;
}

int run_growth_check(const std::string& statement, const std::string& ptext, int nvars, int count,
                     const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> Adist(0.1, 2.0);
    std::uniform_int_distribution<int> rnum(8, 64);  // r = k/16 in [1/2, 4]
    json certs = json::array();
    int violations = 0;
    for (int k = 0; k < count; ++k) {
        double A = Adist(rng);
        Rational r(rnum(rng), 16);
        r.canonicalize();
        GrowthCertificate cert;
        if (statement == "l31") {
            Polynomial p = ptext.empty() ? random_polynomial(rng, 1, 4)
                                         : parse_poly_arg(ptext, 1, cfg);
            if (p.is_constant()) p = p + Polynomial::variable(1, 1);
            ExpPoly f = random_exppoly(rng, 1, 2, 2);
            std::complex<double> xi(Adist(rng) - 1.0, Adist(rng) - 1.0);
            cert = lemma31_check(p, xi, r, A, f);
            PolyaSzegoResult ps = polya_szego_radius(p, xi, r.get_d());
            bool revalid = polya_szego_validate(p, xi, ps.rho, ps.threshold, 10 * ps.n_angles);
            if (!ps.ok || !revalid) ++violations;
        } else if (statement == "l32") {
            int n = nvars > 0 ? nvars : 2;
            Polynomial p = ptext.empty() ? random_polynomial(rng, n, 3)
                                         : parse_poly_arg(ptext, nvars, cfg);
            if (p.is_constant()) p = p + Polynomial::variable(p.nvars(), 1);
            ExpPoly f = random_exppoly(rng, p.nvars(), 2, 2);
            CPoint xi(p.nvars());
            for (auto& c : xi) c = {Adist(rng) - 1.0, Adist(rng) - 1.0};
            cert = lemma32_check(p, xi, r, A, f, std::nullopt, cfg.seed + k);
        } else if (statement == "p33") {
            int n = nvars > 0 ? nvars : 2;
            Polynomial p = ptext.empty() ? random_polynomial(rng, n, 3)
                                         : parse_poly_arg(ptext, nvars, cfg);
            if (p.is_constant()) p = p + Polynomial::variable(p.nvars(), 1);
            ExpPoly F = random_exppoly(rng, p.nvars(), 2, 2);
            cert = prop33_check(p, A, F, cfg.grid_r_max / std::max(1.0, A), cfg.grid_radii,
                                cfg.grid_angles, cfg.seed + k);
        } else {
            throw std::invalid_argument("statement must be one of l31, l32, p33");
        }
        if (cert.violated) ++violations;
        certs.push_back(growth_json(cert));
    }
    emit({{"subcommand", "growth-check"},
          {"statement", statement},
          {"count", count},
          {"violations", violations},
          {"certificates", certs}},
         cfg);
    return violations == 0 ? 0 : EXIT_MATH_FAIL;
}

int run_selftest(const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    json checks = json::array();
    int failures = 0;
    auto record = [&](const std::string& name, bool ok) {
        checks.push_back({{"check", name}, {"ok", ok}});
        if (!ok) ++failures;
    };

    // polycore ring identities
    {
        bool ok = true;
        for (int k = 0; k < 20 && ok; ++k) {
            int n = std::uniform_int_distribution<int>(1, 3)(rng);
            Polynomial a = random_polynomial(rng, n, 4), b = random_polynomial(rng, n, 4),
                       c = random_polynomial(rng, n, 4);
            ok = ok && (a * (b + c) == a * b + a * c) && (a * b == b * a);
            auto q = divide_exact(a * b, b);
            ok = ok && q && *q == a;
        }
        record("polycore_ring_and_division", ok);
    }
    // reducedness on constructed fixtures
    {
        bool ok = true;
        for (int k = 0; k < 10 && ok; ++k) {
            int n = std::uniform_int_distribution<int>(1, 3)(rng);
            Polynomial f1 = random_polynomial(rng, n, 1, 2);
            if (f1.is_constant()) f1 = f1 + Polynomial::variable(n, 1);
            ok = ok && !analyze_reducedness(f1 * f1).is_reduced;
        }
        record("reducedness_repeated_factor", ok);
    }
    // diagram
    {
        bool ok = true;
        for (int k = 0; k < 50 && ok; ++k) {
            int n = std::uniform_int_distribution<int>(1, 3)(rng);
            ok = diagram_check(random_polynomial(rng, n, 4), random_functional(rng, n, 2, 3))
                     .is_zero();
        }
        record("diagram_commutes", ok);
    }
    // kernel dimension formula
    {
        Polynomial p = Polynomial::parse("z1^2+z2^2", 2);
        record("kernel_dim_harmonic", kernel_basis(p, 4).size() ==
                                          static_cast<size_t>(dim_poly_space(2, 4) - dim_poly_space(2, 2)));
    }
    // variety residuals
    {
        Polynomial p = Polynomial::parse("z1*z2", 2);
        auto samples = sample_many(p, 5, cfg.seed);
        bool ok = samples.size() == 5;
        for (const auto& s : samples) ok = ok && s.residual <= 1e-10 * s.scale;
        record("variety_residual_certificates", ok);
    }
    // growth, one quick config per statement
    {
        Polynomial p = Polynomial::parse("z1^2+(-1/1)", 1);
        ExpPoly f = ExpPoly::exponential(Polynomial::constant(1, GaussianRational{1}),
                                         {GaussianRational{Rational(1, 2)}});
        auto c31 = lemma31_check(p, {0.3, 0.1}, Rational(2), 0.7, f);
        Polynomial p2 = Polynomial::parse("z1*z2", 2);
        ExpPoly f2 = ExpPoly::exponential(Polynomial::constant(2, GaussianRational{1}),
                                          {GaussianRational{0}, GaussianRational{1}});
        auto c32 = lemma32_check(p2, {{0.1, 0.0}, {0.2, 0.0}}, Rational(1), 0.5, f2);
        auto c33 = prop33_check(p2, 1.0, f2, 10.0, 32, 64, cfg.seed);
        record("growth_no_violation", !c31.violated && !c32.violated && !c33.violated);
    }
    // counterexample
    {
        Polynomial p = Polynomial::parse("z1^2*z2", 2);
        auto rec = counterexample(p, 6, *find_exact_zero(analyze_reducedness(p).repeated_part));
        record("counterexample_exact", rec.kills_p_ideal && rec.unit_on_q);
    }

    emit({{"subcommand", "selftest"}, {"failures", failures}, {"checks", checks}}, cfg);
    return failures == 0 ? 0 : EXIT_MATH_FAIL;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-Borel desk-scale toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string poly, fpoly, statement, point, config_path;
    int nvars = 0, D = 4, count = 0;
    bool with_basis = false, no_timestamp = false;

    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--seed", cfg.seed, "RNG seed");
    app.add_option("--output", cfg.output_path, "report path (atomic write)");
    app.add_option("--format", cfg.format, "json | jsonl | csv");
    app.add_option("--tol-residual", cfg.tol_residual_rel, "relative residual tolerance");
    app.add_option("--tol-rank", cfg.tol_rank_rel, "relative rank tolerance");
    app.add_option("--tol-eval", cfg.tol_eval_rel, "relative evaluation tolerance");
    app.add_flag("--no-timestamp", no_timestamp, "suppress the timestamp field");

    auto add_poly = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("-p,--poly", poly, "polynomial in the text format");
        if (required) o->required();
        sub->add_option("-n,--nvars", nvars, "number of variables (default: inferred)");
    };

    auto* reduce = app.add_subcommand("reduce-check", "squarefree analysis of p");
    add_poly(reduce);

    auto* kdim = app.add_subcommand("kernel-dim", "exact kernel of p(d) on P_{<=D}");
    add_poly(kdim);
    kdim->add_option("-D,--degree", D, "degree bound")->required();
    kdim->add_flag("--basis", with_basis, "include the basis polynomials");

    auto* erank = app.add_subcommand("exp-rank", "numerical rank of variety exponentials");
    add_poly(erank);
    erank->add_option("-D,--degree", D, "degree bound")->required();
    erank->add_option("--samples", count, "sample count (default 3 x kernel dim)");

    auto* diag = app.add_subcommand("diagram-check", "exact commuting-square residuals");
    add_poly(diag, false);
    diag->add_option("--random", count, "number of random (p, T) pairs")->default_val(100);

    auto* growth = app.add_subcommand("growth-check", "growth-estimate verification");
    growth->add_option("--statement", statement, "l31 | l32 | p33")->required();
    add_poly(growth, false);
    growth->add_option("--count", count, "number of random configurations")->default_val(50);
    growth->add_option("--radii", cfg.grid_radii, "norm-grid radii");
    growth->add_option("--angles", cfg.grid_angles, "norm-grid directions");
    growth->add_option("--R-max", cfg.grid_r_max, "norm-grid outer radius scale");

    auto* cex = app.add_subcommand("counterexample", "annihilator-gap functional for non-reduced p");
    add_poly(cex);
    cex->add_option("-D,--degree", D, "degree bound")->default_val(6);
    cex->add_option("--point", point, "exact zero of the repeated part, e.g. \"0,5\"");

    auto* nst = app.add_subcommand("nst-shadow", "sampled vanishing + exact division");
    add_poly(nst);
    nst->add_option("-f,--func", fpoly, "polynomial f to test")->required();
    nst->add_option("--samples", count, "variety sample count");

    auto* sv = app.add_subcommand("sample-variety", "validated numerical points on V_p");
    add_poly(sv);
    sv->add_option("--samples", count, "number of points");

    app.add_subcommand("selftest", "condensed property suite over every module");

    // global flags may appear after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_USAGE;  // every command-line problem is a usage error
    }

    try {
        if (!config_path.empty()) {
            // file values fill in whatever the command line did not set
            RunConfig base = RunConfig::load(config_path);
            if (!app.count("--seed")) cfg.seed = base.seed;
            if (!app.count("--output")) cfg.output_path = base.output_path;
            if (!app.count("--format")) cfg.format = base.format;
            if (!app.count("--tol-residual")) cfg.tol_residual_rel = base.tol_residual_rel;
            if (!app.count("--tol-rank")) cfg.tol_rank_rel = base.tol_rank_rel;
            if (!app.count("--tol-eval")) cfg.tol_eval_rel = base.tol_eval_rel;
            if (!growth->count("--radii")) cfg.grid_radii = base.grid_radii;
            if (!growth->count("--angles")) cfg.grid_angles = base.grid_angles;
            if (!growth->count("--R-max")) cfg.grid_r_max = base.grid_r_max;
            cfg.d_max = base.d_max;
            cfg.deg_max = base.deg_max;
            cfg.nvars_max = base.nvars_max;
            cfg.timestamp = base.timestamp;
        }
        if (no_timestamp) cfg.timestamp = false;
        cfg.validate();

        if (reduce->parsed()) return run_reduce_check(poly, nvars, cfg);
        if (kdim->parsed()) return run_kernel_dim(poly, nvars, D, with_basis, cfg);
        if (erank->parsed()) return run_exp_rank(poly, nvars, D, count, cfg);
        if (diag->parsed()) return run_diagram_check(poly, nvars, count, cfg);
        if (growth->parsed()) return run_growth_check(statement, poly, nvars, count, cfg);
        if (cex->parsed()) return run_counterexample(poly, nvars, D, point, cfg);
        if (nst->parsed()) return run_nst_shadow(poly, fpoly, nvars, count, cfg);
        if (sv->parsed()) return run_sample_variety(poly, nvars, count, cfg);
        return run_selftest(cfg);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_MATH_FAIL;
    }
}
