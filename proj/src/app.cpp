#include "boxph/app.hpp"

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "boxph/delaunay.hpp"
#include "boxph/filtration.hpp"
#include "boxph/generators.hpp"
#include "boxph/io.hpp"
#include "boxph/persistence.hpp"
#include "boxph/reference_facts.hpp"

namespace boxph {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double peak_rss_mb() {
    rusage usage{};
    if (getrusage(RUSAGE_SELF, &usage) != 0) return 0.0;
    return static_cast<double>(usage.ru_maxrss) / 1024.0;  // kilobytes on Linux
}

std::size_t first_n(const RunConfig& config, std::size_t fallback) {
    return config.n.empty() ? fallback : config.n.front();
}

PointCloud load_cloud(const RunConfig& config) {
    if (!config.generate.empty()) {
        const auto g = parse_generator(config.generate);
        if (!g) throw UsageError("unknown generator '" + config.generate + "'");
        if ((*g == Generator::Uniform || *g == Generator::S1S2) && config.n.empty()) {
            throw UsageError("--generate " + config.generate + " needs --n");
        }
        return generate(*g, first_n(config, 0), config.dim == 0 ? 2 : config.dim, config.seed);
    }
    if (config.input.empty()) throw UsageError("either --input or --generate is required");
    try {
        return read_points(config.input, config.dim);
    } catch (const InputError& e) {
        throw UsageError(config.input + ": " + e.what());
    }
}

PointCloud prepared(const PointCloud& cloud, const RunConfig& config) {
    if (config.epsilon && !(*config.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
    const double eps = config.epsilon.value_or(default_perturbation(cloud));
    return preprocess(cloud, eps, config.seed);
}

MiniboxStrategy checked_strategy(const RunConfig& config, std::size_t dim) {
    try {
        return resolve_strategy(config.strategy, dim);
    } catch (const StrategyMismatch& e) {
        throw UsageError(e.what());
    }
}

EdgeSet complex_edges(const PointCloud& cloud, ComplexKind kind, MiniboxStrategy strategy) {
    switch (kind) {
        case ComplexKind::Minibox: return minibox_edges(cloud, strategy);
        case ComplexKind::AlphaFlag: return alpha_flag_edges(cloud);
        case ComplexKind::Cech: return EdgeSet::complete(cloud);
    }
    return {};
}

void check_degree(int degree) {
    if (degree < 0 || degree > Diagram::kMaxDegree) throw UsageError("--degree must be 0, 1 or 2");
}

std::string_view complex_name(ComplexKind kind) {
    switch (kind) {
        case ComplexKind::Minibox: return "minibox";
        case ComplexKind::AlphaFlag: return "alphaflag";
        case ComplexKind::Cech: return "cech";
    }
    return "?";
}

}  // namespace

int cmd_edges(const RunConfig& config, std::ostream& out, std::ostream& log) {
    const PointCloud raw = load_cloud(config);
    const MiniboxStrategy strategy = checked_strategy(config, raw.dim());
    const auto start = Clock::now();
    const PointCloud cloud = prepared(raw, config);
    const EdgeSet edges = minibox_edges(cloud, strategy);
    const double elapsed = seconds_since(start);
    write_edges(out, edges, config.diameter ? 2.0 : 1.0);
    log << "n=" << cloud.size() << " d=" << cloud.dim() << " strategy=" << strategy_name(strategy)
        << " k=" << edges.size() << " time=" << elapsed << "s\n";
    return kExitOk;
}

int cmd_persistence(const RunConfig& config, std::ostream& out, std::ostream& log) {
    check_degree(config.degree);
    const PointCloud raw = load_cloud(config);
    const MiniboxStrategy strategy = checked_strategy(config, raw.dim());
    const auto start = Clock::now();
    const PointCloud cloud = prepared(raw, config);
    const EdgeSet edges = complex_edges(cloud, config.complex, strategy);
    const Filtration filtration = build_filtration(cloud, edges, config.degree + 1);
    const Diagram dgm = persistence_reduce(filtration, config.degree);
    out << diagram_json(dgm, config.diameter ? 2.0 : 1.0);
    log << "n=" << cloud.size() << " complex=" << complex_name(config.complex)
        << " edges=" << edges.size() << " simplices=" << filtration.size()
        << " time=" << seconds_since(start) << "s\n";
    return kExitOk;
}

int cmd_filtration(const RunConfig& config, std::ostream& out, std::ostream& log) {
    if (config.degree < 0 || config.degree > 2) throw UsageError("--degree must be 0, 1 or 2");
    const PointCloud raw = load_cloud(config);
    const MiniboxStrategy strategy = checked_strategy(config, raw.dim());
    const PointCloud cloud = prepared(raw, config);
    const EdgeSet edges = complex_edges(cloud, config.complex, strategy);
    const Filtration filtration = build_filtration(cloud, edges, config.degree + 1);
    write_filtration(out, filtration, config.diameter ? 2.0 : 1.0);
    log << "simplices=" << filtration.size() << "\n";
    return kExitOk;
}

int cmd_expected_edges(const RunConfig& config, std::ostream& out, std::ostream& log) {
    if (config.trials < 1) throw UsageError("--trials must be at least 1");
    if (config.n.empty()) throw UsageError("expected-edges needs --n");
    const std::size_t dim = config.dim == 0 ? 2 : config.dim;
    const MiniboxStrategy strategy = checked_strategy(config, dim);

    std::ostringstream table;
    table << "n,d,trials,mean_edges,bound\n";
    for (std::size_t n : config.n) {
        double total = 0.0;
        for (std::size_t t = 0; t < config.trials; ++t) {
            const PointCloud cloud = generate_uniform(n, dim, config.seed + t);
            total += static_cast<double>(minibox_edges(prepared(cloud, config), strategy).size());
        }
        const double nn = static_cast<double>(n);
        const double bound = n < 2 ? 0.0
                                   : std::ldexp(1.0, static_cast<int>(dim) - 1) * nn *
                                         std::pow(std::log(nn), static_cast<double>(dim) - 1.0);
        table << n << ',' << dim << ',' << config.trials << ','
              << format_double(total / static_cast<double>(config.trials)) << ','
              << format_double(bound) << '\n';
        log << "n=" << n << " done\n";
    }
    out << table.str();
    return kExitOk;
}

int cmd_verify_facts(const RunConfig&, std::ostream& out, std::ostream&) {
    bool all = true;
    for (const FactResult& fact : check_reference_facts()) {
        out << (fact.passed ? "PASS " : "FAIL ") << fact.name << " (" << fact.detail << ")\n";
        all = all && fact.passed;
    }
    return all ? kExitOk : kExitVerificationFailed;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& log) {
    check_degree(config.degree);
    if (config.trials < 1) throw UsageError("--trials must be at least 1");
    const std::size_t dim = config.dim == 0 ? 2 : config.dim;
    const MiniboxStrategy strategy = checked_strategy(config, dim);
    const std::vector<std::size_t> sizes = config.n.empty() ? std::vector<std::size_t>{500} : config.n;

    std::ostringstream table;
    table << "n,d,complex,seed,edges,simplices,edges_s,filtration_s,diagrams_s,total_s,peak_rss_mb\n";
    for (std::size_t n : sizes) {
        for (std::size_t t = 0; t < config.trials; ++t) {
            const std::uint64_t seed = config.seed + t;
            const PointCloud raw = generate_uniform(n, dim, seed);
            const auto begin = Clock::now();
            const PointCloud cloud = prepared(raw, config);
            const EdgeSet edges = complex_edges(cloud, config.complex, strategy);
            const double t_edges = seconds_since(begin);
            const auto mid = Clock::now();
            const Filtration filtration = build_filtration(cloud, edges, config.degree + 1);
            const double t_filtration = seconds_since(mid);
            const auto late = Clock::now();
            const Diagram dgm = persistence_reduce(filtration, config.degree);
            const double t_diagrams = seconds_since(late);
            const double total = seconds_since(begin);
            table << n << ',' << dim << ',' << complex_name(config.complex) << ',' << seed << ','
                  << edges.size() << ',' << filtration.size() << ',' << t_edges << ','
                  << t_filtration << ',' << t_diagrams << ',' << total << ',' << peak_rss_mb()
                  << '\n';
            log << "n=" << n << " seed=" << seed << " total=" << total << "s\n";
        }
    }
    out << table.str();
    return kExitOk;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Minibox and l_inf filtrations for Chebyshev persistent homology"};
    app.require_subcommand(1);
    RunConfig config;
    std::string strategy = "auto";
    std::string complex = "minibox";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", config.input, "Point file");
        sub->add_option("--generate", config.generate, "uniform | s1s2 | paper3 | paper8");
        sub->add_option("--n", config.n, "Point count(s)");
        sub->add_option("--dim", config.dim, "Dimension");
        sub->add_option("--strategy", strategy,
                        "auto | brute | sweep2d | staircase3d | pst3d | rangetree | kdtree");
        sub->add_option("--complex", complex, "minibox | alphaflag | cech");
        sub->add_option("--degree", config.degree, "Maximum homology degree (0-2)");
        sub->add_option("--seed", config.seed, "Random seed");
        sub->add_option("--epsilon", config.epsilon, "Perturbation size");
        sub->add_option("--trials", config.trials, "Trials per size");
        sub->add_option("--output", config.output, "Output file (default stdout)");
        sub->add_flag("--diameter", config.diameter, "Report diameters instead of radii");
    };
    const std::vector<std::pair<std::string, std::string>> commands{
        {"edges", "Minibox edge list"},
        {"persistence", "Persistence diagrams as JSON"},
        {"filtration", "Filtration dump"},
        {"expected-edges", "Mean Minibox edge counts of uniform clouds"},
        {"verify-paper", "Check the embedded witness facts"},
        {"bench", "Per-phase timings as CSV"},
    };
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    config.command = app.get_subcommands().front()->get_name();

    std::ostringstream out;
    int code = kExitOk;
    try {
        const auto s = parse_strategy(strategy);
        if (!s) throw UsageError("unknown strategy '" + strategy + "'");
        config.strategy = *s;
        if (complex == "minibox") config.complex = ComplexKind::Minibox;
        else if (complex == "alphaflag") config.complex = ComplexKind::AlphaFlag;
        else if (complex == "cech") config.complex = ComplexKind::Cech;
        else throw UsageError("unknown complex '" + complex + "'");

        if (config.command == "edges") code = cmd_edges(config, out, std::cerr);
        else if (config.command == "persistence") code = cmd_persistence(config, out, std::cerr);
        else if (config.command == "filtration") code = cmd_filtration(config, out, std::cerr);
        else if (config.command == "expected-edges") code = cmd_expected_edges(config, out, std::cerr);
        else if (config.command == "verify-paper") code = cmd_verify_facts(config, out, std::cerr);
        else code = cmd_bench(config, out, std::cerr);

        if (config.output.empty()) {
            std::cout << out.str();
        } else if (code == kExitOk || config.command == "verify-paper") {
            write_file_atomic(config.output, out.str());
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return code;
}

}  // namespace boxph
