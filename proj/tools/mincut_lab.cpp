// Batch front end: graph generation, one-shot solves, Monte Carlo success
// estimation, recurrence tables, and runtime benchmarks.
//
// Exit codes: 0 ok, 1 usage or runtime failure, 2 graph parse error,
// 3 structurally invalid graph (e.g. disconnected).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mincut/algorithms.hpp"
#include "mincut/analysis.hpp"
#include "mincut/generate.hpp"
#include "mincut/io.hpp"
#include "mincut/montecarlo.hpp"
#include "mincut/oracle.hpp"

namespace {

using namespace mincut;

std::uint64_t resolve_seed(CLI::Option* opt, std::uint64_t seed) {
    if (opt->count() > 0) return seed;
    std::random_device rd;
    const std::uint64_t drawn = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed: " << drawn << "\n";
    return drawn;
}

Algorithm parse_algorithm(const std::string& name) {
    const auto algo = algorithm_from_string(name);
    if (!algo) throw InvalidArgument("unknown algorithm tag: " + name);
    return *algo;
}

std::vector<int> parse_int_list(const std::vector<std::string>& words) {
    std::vector<int> out;
    for (const auto& w : words) {
        std::size_t used = 0;
        const int v = std::stoi(w, &used);
        if (used != w.size()) throw InvalidArgument("not an integer: " + w);
        out.push_back(v);
    }
    return out;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct GenParams {
    std::uint64_t intra = 10;
    std::uint64_t inter = 1;
    int crossing = 2;
    double edge_prob = 0.5;
    std::uint64_t cap_min = 1;
    std::uint64_t cap_max = 100;
};

int cmd_gen(const std::string& kind, const std::vector<std::string>& args,
            const GenParams& params, std::uint64_t seed) {
    if (args.size() < 2) throw InvalidArgument("gen: expected <size(s)> <outfile>");
    const std::string out_path = args.back();
    const auto sizes = parse_int_list({args.begin(), args.end() - 1});
    RandomSource rng(seed);

    if (kind == "cycle" || kind == "complete" || kind == "random") {
        if (sizes.size() != 1) throw InvalidArgument("gen " + kind + ": expected one size");
        ContractibleGraph g =
            kind == "cycle"      ? make_cycle(sizes[0])
            : kind == "complete" ? make_complete(sizes[0])
                                 : make_random_connected(sizes[0], params.edge_prob,
                                                         params.cap_min, params.cap_max, rng);
        save_graph_file(g, out_path);
        std::cout << "wrote " << out_path << " (n=" << g.size() << ", U=" << g.total_capacity()
                  << ")\n";
        return 0;
    }
    if (kind == "planted") {
        if (sizes.size() != 2) throw InvalidArgument("gen planted: expected two cluster sizes");
        PlantedSpec spec;
        spec.size_a = sizes[0];
        spec.size_b = sizes[1];
        spec.intra = params.intra;
        spec.inter = params.inter;
        spec.crossing = params.crossing;
        const PlantedGraph planted = make_planted(spec, rng);
        save_graph_file(planted.graph, out_path);
        std::cout << "wrote " << out_path << "\n";
        std::cout << "planted cut value: " << planted.planted_cut.value << "\n";
        return 0;
    }
    throw InvalidArgument("unknown generator kind: " + kind);
}

int cmd_mincut(const std::string& in_path, const std::string& algo_name, std::uint64_t seed,
               int reps, int same_size_cap) {
    const ContractibleGraph g = load_graph_file(in_path);
    const Algorithm algo = parse_algorithm(algo_name);
    RandomSource rng(seed);
    RunStats stats;
    RunConfig cfg;
    cfg.stats = &stats;
    cfg.same_size_cap = same_size_cap;

    const auto t0 = std::chrono::steady_clock::now();
    const Cut cut = run_algorithm(algo, g, rng, cfg, reps);
    const auto t1 = std::chrono::steady_clock::now();

    std::cout << "value: " << cut.value << "\n";
    std::cout << "side:";
    for (VertexId v : cut.side) std::cout << ' ' << v;
    std::cout << "\n";
    std::cout << "contractions: " << stats.contractions << "\n";
    std::cout << "seconds: " << fmt(std::chrono::duration<double>(t1 - t0).count()) << "\n";
    return 0;
}

ContractibleGraph make_for_estimate(const std::string& in_path, const std::string& kind, int n,
                                    const GenParams& params, std::uint64_t seed,
                                    std::string& label) {
    if (!in_path.empty()) {
        label = in_path;
        return load_graph_file(in_path);
    }
    if (kind.empty()) throw InvalidArgument("estimate: give an input file or --kind/--n");
    label = kind + ":" + std::to_string(n);
    RandomSource rng(RandomSource(seed).stream(0x9e3779));
    if (kind == "cycle") return make_cycle(n);
    if (kind == "complete") return make_complete(n);
    if (kind == "random")
        return make_random_connected(n, params.edge_prob, params.cap_min, params.cap_max, rng);
    throw InvalidArgument("estimate: unknown generator kind: " + kind);
}

int cmd_estimate(const std::string& in_path, const std::string& kind, int n,
                 const GenParams& params, const std::string& algo_name,
                 const std::string& event_name, std::uint64_t trials, std::uint64_t seed,
                 int threads, int reps, const std::vector<VertexId>& target_vertices) {
    const Algorithm algo = parse_algorithm(algo_name);
    const auto event = event_from_string(event_name);
    if (!event) throw InvalidArgument("unknown event tag: " + event_name);

    std::string label;
    const ContractibleGraph g = make_for_estimate(in_path, kind, n, params, seed, label);

    Cut target;
    if (!target_vertices.empty()) {
        target.side = canonical_side(target_vertices, g.original_size());
        target.value = cut_value(g, target.side);
    } else {
        target = deterministic_min_cut(g);
    }

    const SuccessEstimate est =
        estimate_success(algo, g, target, *event, trials, seed, threads, reps);

    double reference = std::numeric_limits<double>::quiet_NaN();
    if (*event == SuccessEvent::survival) {
        if (algo == Algorithm::fpz1 || algo == Algorithm::fpz2)
            reference = q_fpz_closed(g.size());
        else if (algo == Algorithm::optimal)
            reference = q_optimal_recurrence(g.size()).Q(g.size());
    }

    std::cout << estimate_csv_header() << "\n";
    std::cout << estimate_csv_row(label, algo, g.size(), est, reference) << "\n";
    return 0;
}

int cmd_analyze(int max_n, const std::string& out_path) {
    if (max_n < 2) throw InvalidArgument("analyze: needs --max-n >= 2");
    const RecurrenceTable fpz = q_fpz_recurrence(max_n);
    const RecurrenceTable opt = q_optimal_recurrence(max_n);

    std::string csv = "n,Q_fpz,Q_opt,closed_form,H_n\n";
    long double h = 0.0L;
    for (int n = 1; n <= max_n; ++n) {
        h += 1.0L / static_cast<long double>(n);
        if (n < 2) continue;
        csv += std::to_string(n);
        csv += ',';
        csv += fmt(fpz.Q(n));
        csv += ',';
        csv += fmt(opt.Q(n));
        csv += ',';
        csv += fmt(n == 2 ? 1.0 : static_cast<double>(1.0L / (2.0L * h - 2.0L)));
        csv += ',';
        csv += fmt(static_cast<double>(h));
        csv += '\n';
    }
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InvalidArgument("cannot write " + out_path);
        out << csv;
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_bench(const std::string& algos_csv, const std::string& sizes_csv, int reps,
              std::uint64_t seed, const std::string& family_name) {
    std::vector<Algorithm> algos;
    std::vector<int> sizes;
    {
        std::string token;
        std::istringstream as(algos_csv);
        while (std::getline(as, token, ','))
            if (!token.empty()) algos.push_back(parse_algorithm(token));
        std::istringstream ss(sizes_csv);
        while (std::getline(ss, token, ','))
            if (!token.empty()) sizes.push_back(std::stoi(token));
    }
    if (sizes.empty()) throw InvalidArgument("bench: needs --sizes");
    BenchFamily family;
    if (family_name == "dense") family = BenchFamily::dense;
    else if (family_name == "cycle") family = BenchFamily::cycle;
    else throw InvalidArgument("bench: unknown family: " + family_name);

    const auto records = bench_runtime(algos, sizes, reps, seed, family);
    std::cout << bench_csv_header() << "\n";
    for (const auto& r : records) std::cout << bench_csv_row(r) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomized minimum cut laboratory"};
    app.require_subcommand(1);

    GenParams params;
    std::uint64_t seed = 0;
    std::string algo_name = "fpz1";
    int reps = 1;
    int threads = 0;
    int same_size_cap = 10000;

    auto add_gen_params = [&](CLI::App* cmd) {
        cmd->add_option("--intra", params.intra, "planted: in-cluster capacity");
        cmd->add_option("--inter", params.inter, "planted: crossing capacity");
        cmd->add_option("--crossing", params.crossing, "planted: crossing edge count");
        cmd->add_option("--edge-prob", params.edge_prob, "random: edge probability");
        cmd->add_option("--cap-min", params.cap_min, "random: minimum capacity");
        cmd->add_option("--cap-max", params.cap_max, "random: maximum capacity");
    };

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_kind;
    std::vector<std::string> gen_args;
    gen->add_option("kind", gen_kind, "cycle|complete|planted|random")->required();
    gen->add_option("args", gen_args, "size(s) followed by the output path")->required();
    auto* gen_seed = gen->add_option("--seed", seed, "random seed");
    add_gen_params(gen);

    // mincut
    auto* solve = app.add_subcommand("mincut", "solve one graph file");
    std::string in_path;
    solve->add_option("input", in_path, "graph file")->required();
    solve->add_option("--algorithm", algo_name, "karger|karger-stein|fpz1|fpz2|optimal|oracle");
    auto* solve_seed = solve->add_option("--seed", seed, "random seed");
    solve->add_option("--reps", reps, "repetitions (best cut wins)");
    solve->add_option("--same-size-cap", same_size_cap, "fpz2 same-size repeat cap");

    // estimate
    auto* est = app.add_subcommand("estimate", "Monte Carlo success estimate (CSV row)");
    std::string est_input, est_kind, event_name = "survival", target_spec;
    int est_n = 0;
    std::uint64_t trials = 0;
    est->add_option("input", est_input, "graph file (or use --kind/--n)");
    est->add_option("--kind", est_kind, "cycle|complete|random generator");
    est->add_option("--n", est_n, "generator size");
    est->add_option("--algorithm", algo_name, "algorithm tag");
    est->add_option("--event", event_name, "survival|exact_value|exact_partition");
    est->add_option("--trials", trials, "number of trials")->required();
    auto* est_seed = est->add_option("--seed", seed, "random seed");
    est->add_option("--threads", threads, "worker threads (0 = all)");
    est->add_option("--reps", reps, "karger repetitions per trial");
    est->add_option("--target", target_spec, "target side as comma-separated vertex ids");
    add_gen_params(est);

    // analyze
    auto* ana = app.add_subcommand("analyze", "recurrence tables as CSV");
    int max_n = 0;
    std::string out_path;
    ana->add_option("--max-n", max_n, "largest n")->required();
    ana->add_option("--out", out_path, "write CSV here instead of stdout");

    // bench
    auto* bench = app.add_subcommand("bench", "runtime scaling benchmark (CSV)");
    std::string algos_csv = "fpz2,optimal", sizes_csv, family_name = "dense";
    int bench_reps = 5;
    bench->add_option("--algorithms", algos_csv, "comma-separated algorithm tags");
    bench->add_option("--sizes", sizes_csv, "comma-separated sizes")->required();
    bench->add_option("--reps", bench_reps, "repetitions per size");
    auto* bench_seed = bench->add_option("--seed", seed, "random seed");
    bench->add_option("--family", family_name, "dense|cycle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_kind, gen_args, params, resolve_seed(gen_seed, seed));
        if (solve->parsed())
            return cmd_mincut(in_path, algo_name, resolve_seed(solve_seed, seed), reps,
                              same_size_cap);
        if (est->parsed()) {
            std::vector<VertexId> target_vertices;
            if (!target_spec.empty()) {
                std::istringstream ts(target_spec);
                std::string token;
                while (std::getline(ts, token, ','))
                    if (!token.empty()) target_vertices.push_back(static_cast<VertexId>(std::stoul(token)));
            }
            return cmd_estimate(est_input, est_kind, est_n, params, algo_name, event_name, trials,
                                resolve_seed(est_seed, seed), threads, reps, target_vertices);
        }
        if (ana->parsed()) return cmd_analyze(max_n, out_path);
        if (bench->parsed())
            return cmd_bench(algos_csv, sizes_csv, bench_reps, resolve_seed(bench_seed, seed),
                             family_name);
    } catch (const mincut::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const mincut::GraphError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
