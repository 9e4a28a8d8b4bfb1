#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cfp/generator.hpp"
#include "cfp/io.hpp"
#include "cfp/render.hpp"
#include "cfp/simulator.hpp"
#include "cfp/utp.hpp"

namespace {

using namespace cfp;

// "p/q" or a terminating decimal, parsed exactly
Rational parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            long long num = std::stoll(s.substr(0, slash));
            long long den = std::stoll(s.substr(slash + 1));
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(s), 1);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        long long den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return Rational(std::stoll(digits), den);
    } catch (const std::exception&) {
        throw ParseError("cannot parse fraction: " + s);
    }
}

uint64_t resolve_seed(std::optional<uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CFP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("CFP_SEED is not a number: ") + env);
        }
    }
    return 0;
}

SchedulerPolicy parse_scheduler(const std::string& s, uint64_t seed) {
    auto colon = s.find(':');
    std::string name = s.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (name == "sync" || name == "synchronous") return Synchronous{};
    if (name == "round-robin") {
        RoundRobin rr;
        if (!arg.empty()) rr.block_size = std::stoi(arg);
        return rr;
    }
    if (name == "random") {
        SeededRandomFair r;
        r.seed = seed;
        if (!arg.empty()) r.max_idle_window = std::stoi(arg);
        return r;
    }
    throw ParseError("unknown scheduler: " + s + " (use sync, round-robin[:b], random[:K])");
}

void reject_unsupported(int n) {
    if (n == 4 || n == 6 || n == 8) {
        throw UnsupportedN("n in {4, 6, 8} is excluded by the protocol; choose another n");
    }
}

// alpha flag is a fraction of the regular gap 2pi/n
Angle alpha_from_flag(const std::string& flag, int n) {
    Rational frac = parse_fraction(flag);
    return Angle::turns(frac * Rational(1, n));
}

Configuration generate_config(const std::string& cls, int n, const std::string& alpha_flag,
                              uint64_t seed, double eps) {
    Configuration c;
    if (cls == "regular") {
        c = gen::regular_ngon(n);
    } else if (cls == "strict-biangular") {
        c = gen::strict_biangular(n, alpha_from_flag(alpha_flag, n));
    } else if (cls == "quasi-aligned") {
        c = gen::quasi_ngon(n, true, seed);
    } else if (cls == "quasi-arbitrary") {
        c = gen::quasi_ngon(n, false, seed);
    } else {
        throw ParseError("unknown class: " + cls +
                         " (use regular, strict-biangular, quasi-aligned, quasi-arbitrary)");
    }
    c.epsilon = eps;

    // self-check before anything is written
    ConfigKind got = classify(c).kind;
    ConfigKind want = cls == "regular"           ? ConfigKind::RegularNGon
                      : cls == "strict-biangular" ? ConfigKind::StrictBiangular
                      : cls == "quasi-aligned"    ? ConfigKind::QuasiAligned
                                                  : ConfigKind::QuasiArbitrary;
    if (got != want) {
        throw Error("generated configuration classifies as " + to_string(got) + ", expected " +
                    to_string(want));
    }
    return c;
}

void print_classification(const Configuration& config) {
    ConfigClass cls = classify(config);
    std::cout << to_string(cls.kind) << " n=" << config.n() << "\n";
    switch (cls.kind) {
        case ConfigKind::RegularNGon:
            std::cout << "  circle: center=(" << cls.circle->center.x << ", "
                      << cls.circle->center.y << ") radius=" << cls.circle->radius << "\n"
                      << "  delta=" << cls.delta->str() << "\n";
            break;
        case ConfigKind::StrictBiangular:
            std::cout << "  circle: center=(" << cls.biangular->circle.center.x << ", "
                      << cls.biangular->circle.center.y
                      << ") radius=" << cls.biangular->circle.radius << "\n"
                      << "  alpha=" << cls.biangular->alpha.str()
                      << " beta=" << cls.biangular->beta.str() << "\n";
            break;
        case ConfigKind::QuasiAligned:
        case ConfigKind::QuasiArbitrary: {
            const auto& q = *cls.quasi;
            std::cout << "  C1: center=(" << q.pair.outer.center.x << ", " << q.pair.outer.center.y
                      << ") radius=" << q.pair.outer.radius << "\n"
                      << "  C2: radius=" << q.pair.inner.radius << "\n"
                      << "  k=" << q.k << " aligned=" << (q.aligned ? "yes" : "no") << "\n"
                      << "  sectors (clockwise):\n";
            for (size_t i = 0; i < q.sectors.sectors.size(); ++i) {
                const auto& s = q.sectors.sectors[i];
                std::cout << "    sector " << i << ": span=" << s.span().str()
                          << " missing=" << s.missing_count << " inner=["
                          << [&] {
                                 std::string out;
                                 for (size_t j = 0; j < s.inner_robots.size(); ++j) {
                                     if (j) out += ", ";
                                     out += std::to_string(s.inner_robots[j]);
                                 }
                                 return out;
                             }()
                          << "]\n";
            }
            break;
        }
        case ConfigKind::Arbitrary:
            if (auto circle = common_circle(config)) {
                std::cout << "  on a common circle: center=(" << circle->center.x << ", "
                          << circle->center.y << ") radius=" << circle->radius << "\n";
            }
            break;
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"circle formation of weak mobile robots: generator, classifier, "
                 "simulator, renderer, and UTP demonstrator"};
    app.require_subcommand(1);

    int n = 10;
    std::string cls = "regular";
    std::string alpha = "1/2";
    std::string scheduler = "sync";
    std::optional<uint64_t> seed_flag;
    int budget = 2000;
    double epsilon = 1e-9;
    std::string out_path;
    std::string in_path;
    std::string rule_name = "stay-put";

    auto* cmd_generate = app.add_subcommand("generate", "write a configuration file");
    cmd_generate->add_option("--n", n, "number of robots")->required();
    cmd_generate->add_option("--class", cls,
                             "regular | strict-biangular | quasi-aligned | quasi-arbitrary");
    cmd_generate->add_option("--alpha", alpha, "biangular alpha as a fraction of 2pi/n");
    cmd_generate->add_option("--seed", seed_flag, "seed (falls back to CFP_SEED, then 0)");
    cmd_generate->add_option("--epsilon", epsilon, "comparison tolerance");
    cmd_generate->add_option("--out", out_path, "output file")->required();

    auto* cmd_classify = app.add_subcommand("classify", "classify a configuration file");
    cmd_classify->add_option("--in", in_path, "configuration file")->required();

    auto* cmd_run = app.add_subcommand("run", "simulate the circle formation protocol");
    cmd_run->add_option("--in", in_path, "initial configuration file (else generated)");
    cmd_run->add_option("--n", n, "number of robots (when generating)");
    cmd_run->add_option("--class", cls, "initial class (when generating)");
    cmd_run->add_option("--alpha", alpha, "biangular alpha as a fraction of 2pi/n");
    cmd_run->add_option("--scheduler", scheduler, "sync | round-robin[:b] | random[:K]");
    cmd_run->add_option("--seed", seed_flag, "seed (falls back to CFP_SEED, then 0)");
    cmd_run->add_option("--budget", budget, "maximum number of steps");
    cmd_run->add_option("--epsilon", epsilon, "comparison tolerance");
    cmd_run->add_option("--out", out_path, "trace output file");

    auto* cmd_render = app.add_subcommand("render", "render a trace to SVG frames");
    cmd_render->add_option("--in", in_path, "trace file")->required();
    cmd_render->add_option("--out", out_path, "output prefix, frames get NNNN.svg appended")
        ->required();

    auto* cmd_demo = app.add_subcommand("demo-utp", "run the UTP adversarial demonstrator");
    cmd_demo->add_option("--rule", rule_name, "stay-put | midpoint | bq-analogue");
    cmd_demo->add_option("--n", n, "number of robots (even)")->required();
    cmd_demo->add_option("--alpha", alpha, "biangular alpha as a fraction of 2pi/n");
    cmd_demo->add_option("--budget", budget, "adversary steps");
    cmd_demo->add_option("--out", out_path, "certificate output file");

    CLI11_PARSE(app, argc, argv);
    uint64_t seed = resolve_seed(seed_flag);

    if (cmd_generate->parsed()) {
        Configuration c = generate_config(cls, n, alpha, seed, epsilon);
        save_config(c, out_path);
        std::cout << "wrote " << out_path << " (" << to_string(classify(c).kind) << ", n=" << n
                  << ")\n";
        return 0;
    }

    if (cmd_classify->parsed()) {
        print_classification(load_config(in_path));
        return 0;
    }

    if (cmd_run->parsed()) {
        Configuration c;
        if (!in_path.empty()) {
            c = load_config(in_path);
        } else {
            c = generate_config(cls, n, alpha, seed, epsilon);
        }
        reject_unsupported(c.n());
        SchedulerPolicy policy = parse_scheduler(scheduler, seed);
        Trace trace = run(c, policy, ngon_step, budget, random_frames(seed));
        if (!out_path.empty()) save_trace(trace, out_path);

        std::cout << "outcome: " << to_string(trace.outcome);
        if (trace.outcome == Outcome::Formed) std::cout << " at step " << trace.formed_step;
        std::cout << "\nclass sequence:";
        ConfigKind last = trace.class_sequence.front();
        std::cout << " " << to_string(last);
        for (auto k : trace.class_sequence) {
            if (k != last) {
                std::cout << " -> " << to_string(k);
                last = k;
            }
        }
        std::cout << "\nsteps: " << trace.steps.size() << "\n";
        if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
        return 0;
    }

    if (cmd_render->parsed()) {
        Trace trace = load_trace(in_path);
        auto paths = save_trace_svgs(trace, out_path);
        std::cout << "wrote " << paths.size() << " frame(s): " << paths.front() << " .. "
                  << paths.back() << "\n";
        return 0;
    }

    if (cmd_demo->parsed()) {
        Rule rule = utp_rule(rule_name);
        Angle a = alpha_from_flag(alpha, n);
        Certificate cert = demonstrate(rule, n, a, budget);
        if (!out_path.empty()) {
            save_certificate(cert, out_path);
            std::cout << "wrote " << out_path << "\n";
        }
        std::cout << "verdict: " << to_string(cert.verdict) << " after " << cert.steps_run
                  << " step(s)";
        if (!cert.message.empty()) std::cout << " (" << cert.message << ")";
        std::cout << "\n";
        switch (cert.verdict) {
            case Verdict::Certified: return 0;
            case Verdict::GroupsMerged: return 2;
            case Verdict::Violated: return 3;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const cfp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
