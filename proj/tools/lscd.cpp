// Command-line front end: local community detection from seed vertices,
// multi-membership queries, neighborhood sampling, ground-truth statistics,
// experiment runs and benchmark generation.

#include "lscd/eval.hpp"
#include "lscd/multimember.hpp"
#include "lscd/pipeline.hpp"
#include "lscd/sampler.hpp"
#include "lscd/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace lscd;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitDetection = 3;

struct ParamFlags {
    int d = 3;
    int k = 3;
    std::string variant = "rw";
    std::string metric = "cond";
    double gamma = 1.7;
    int delta = 5;
    int l = 4;
    int radius = 2;
    unsigned outdegree_cap = 1000;
    unsigned frontier_cap = 1000;
    int max_rounds = 10;
    double epsilon = -1.0;
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
    cmd->add_option("--d", p.d, "subspace dimension");
    cmd->add_option("--k", p.k, "subspace iteration steps");
    cmd->add_option("--variant", p.variant, "walk operator: rw|sym");
    cmd->add_option("--metric", p.metric, "scoring metric: mod|nmod|cond|tpr|tpn");
    cmd->add_option("--gamma", p.gamma, "boundary drop ratio");
    cmd->add_option("--delta", p.delta, "reseeding expansion step");
    cmd->add_option("--l", p.l, "seed strengthening path length");
    cmd->add_option("--radius", p.radius, "BFS sampling depth");
    cmd->add_option("--outdegree-cap", p.outdegree_cap, "frontier degree cutoff");
    cmd->add_option("--frontier-cap", p.frontier_cap, "frontier vertices kept per seed");
    cmd->add_option("--max-rounds", p.max_rounds, "reseeding rounds (0 = off)");
    cmd->add_option("--epsilon", p.epsilon, "conductance filter on the result (<0 = off)");
}

DetectionParams to_params(const ParamFlags& p) {
    DetectionParams out;
    out.d = p.d;
    out.k = p.k;
    out.variant = walk_variant_from_name(p.variant);
    out.metric = metric_from_name(p.metric);
    out.gamma = p.gamma;
    out.delta = p.delta;
    out.strengthen_l = p.l;
    out.sample.radius = p.radius;
    out.sample.outdegree_cap = p.outdegree_cap;
    out.sample.frontier_cap = p.frontier_cap;
    out.max_reseed_rounds = p.max_rounds;
    if (p.epsilon >= 0.0)
        out.epsilon = p.epsilon;
    return out;
}

std::vector<Vertex> parse_seed_list(const Graph& g, const std::string& csv) {
    std::vector<Vertex> seeds;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        ExternalId id;
        try {
            id = std::stoll(token);
        } catch (...) {
            throw DataError("seed list: '" + token + "' is not an integer id");
        }
        auto v = g.find_external(id);
        if (!v)
            throw DataError("seed id " + std::to_string(id) + " not in graph");
        seeds.push_back(*v);
    }
    if (seeds.empty())
        throw DataError("seed list is empty");
    return seeds;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out)
        throw DataError("cannot write " + path);
    out << j.dump(2) << '\n';
}

int cmd_detect(const std::string& graph_path, const std::string& seed_csv, long size,
               const ParamFlags& flags, const std::string& out_path) {
    Graph g = Graph::load_edge_list(graph_path);
    std::vector<Vertex> seeds = parse_seed_list(g, seed_csv);
    DetectionParams params = to_params(flags);

    DetectionResult result = size > 0
                                 ? detect_fixed_size(g, seeds, static_cast<std::size_t>(size), params)
                                 : detect(g, seeds, params);

    for (const std::string& w : result.warnings)
        std::cerr << "warning: " << w << '\n';
    for (Vertex v : result.community.members)
        std::cout << g.external_id(v) << '\n';
    if (!out_path.empty())
        write_json_file(out_path, to_json(g, result));
    return kExitOk;
}

int cmd_multi(const std::string& graph_path, ExternalId seed, const ParamFlags& flags,
              const std::string& out_path) {
    Graph g = Graph::load_edge_list(graph_path);
    auto v = g.find_external(seed);
    if (!v)
        throw DataError("seed id " + std::to_string(seed) + " not in graph");

    MembershipResult result = find_all_memberships(g, *v, to_params(flags));
    for (std::size_t i = 0; i < result.communities.size(); ++i) {
        const DetectionResult& det = result.communities[i];
        std::cout << "# community " << (i + 1) << ": " << metric_name(det.community.metric) << '='
                  << det.community.score << " size=" << det.community.members.size() << '\n';
        for (std::size_t j = 0; j < det.community.members.size(); ++j)
            std::cout << (j ? " " : "") << g.external_id(det.community.members[j]);
        std::cout << '\n';
    }
    std::cerr << result.communities.size() << " communities, " << result.skipped.size()
              << " candidates skipped\n";
    if (!out_path.empty())
        write_json_file(out_path, to_json(g, result));
    return kExitOk;
}

int cmd_sample(const std::string& graph_path, const std::string& seed_csv, const ParamFlags& flags,
               const std::string& out_path) {
    Graph g = Graph::load_edge_list(graph_path);
    std::vector<Vertex> seeds = parse_seed_list(g, seed_csv);
    SampleParams params = to_params(flags).sample;

    SampleResult result = sample(g, seeds, params);
    std::cerr << "sampled " << result.graph.vertex_count() << " vertices, "
              << result.graph.edge_count() << " edges (touched " << result.vertices_touched
              << ")\n";
    if (out_path.empty()) {
        write_edge_list(std::cout, result.graph);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw DataError("cannot write " + out_path);
        write_edge_list(out, result.graph);
    }
    return kExitOk;
}

int cmd_stats(const std::string& graph_path, const std::string& truth_path, bool dedup,
              const std::string& out_path) {
    Graph g = Graph::load_edge_list(graph_path);
    GroundTruth gt = load_ground_truth(truth_path, dedup);
    GroundTruthStats stats = ground_truth_stats(g, gt);

    std::cout << "vertices,edges,communities,mean_size,std_size,mean_conductance\n";
    std::cout << g.vertex_count() << ',' << g.edge_count() << ',' << stats.community_count << ','
              << stats.mean_size << ',' << stats.std_size << ',' << stats.mean_conductance << '\n';
    if (!out_path.empty())
        write_json_file(out_path, to_json(stats));
    return kExitOk;
}

int cmd_experiment(const std::string& config_path, int workers_override,
                   const std::string& csv_path, const std::string& json_path) {
    ExperimentConfig cfg = load_experiment_config(config_path);
    if (workers_override > 0)
        cfg.workers = workers_override;

    Report report = run_experiment(cfg);
    std::cout << "trials=" << report.rows.size() << " failures=" << report.failures
              << " mean_f1=" << report.mean_f1 << " std_f1=" << report.std_f1
              << " mean_ms=" << report.mean_millis << '\n';
    for (const auto& [om, s] : report.per_om)
        std::cout << "om=" << om << " queries=" << s.queries << " mean_f1=" << s.mean_f1 << '\n';

    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out)
            throw DataError("cannot write " + csv_path);
        write_report_csv(out, report);
    }
    if (!json_path.empty())
        write_json_file(json_path, to_json(report));
    return kExitOk;
}

int cmd_planted(const PlantedParams& params, std::uint64_t rng_seed,
                const std::string& graph_path, const std::string& truth_path) {
    Rng rng(rng_seed);
    PlantedGraph planted = generate_planted_partition(params, rng);

    std::ofstream gout(graph_path);
    if (!gout)
        throw DataError("cannot write " + graph_path);
    write_edge_list(gout, planted.graph);

    std::ofstream tout(truth_path);
    if (!tout)
        throw DataError("cannot write " + truth_path);
    for (const auto& community : planted.truth.communities) {
        for (std::size_t i = 0; i < community.size(); ++i)
            tout << (i ? "\t" : "") << community[i];
        tout << '\n';
    }
    std::cerr << "wrote " << planted.graph.vertex_count() << " vertices, "
              << planted.graph.edge_count() << " edges, " << planted.truth.communities.size()
              << " communities\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local spectral community detection toolkit"};
    app.require_subcommand(1);

    // detect
    std::string graph_path, seed_csv, out_path;
    long fixed_size = 0;
    ParamFlags detect_flags;
    CLI::App* detect_cmd = app.add_subcommand("detect", "expand seed vertices into a community");
    detect_cmd->add_option("--graph", graph_path, "edge list file")->required();
    detect_cmd->add_option("--seeds", seed_csv, "comma-separated external seed ids")->required();
    detect_cmd->add_option("--size", fixed_size, "known community size (fixed truncation)");
    detect_cmd->add_option("--out", out_path, "write the full result as JSON");
    add_param_flags(detect_cmd, detect_flags);

    // multi
    std::string multi_graph, multi_out;
    ExternalId multi_seed = 0;
    ParamFlags multi_flags;
    CLI::App* multi_cmd = app.add_subcommand("multi", "all communities containing one vertex");
    multi_cmd->add_option("--graph", multi_graph, "edge list file")->required();
    multi_cmd->add_option("--seed", multi_seed, "query vertex (external id)")->required();
    multi_cmd->add_option("--out", multi_out, "write the full result as JSON");
    add_param_flags(multi_cmd, multi_flags);

    // sample
    std::string sample_graph, sample_seeds, sample_out;
    ParamFlags sample_flags;
    CLI::App* sample_cmd = app.add_subcommand("sample", "BFS neighborhood sample around seeds");
    sample_cmd->add_option("--graph", sample_graph, "edge list file")->required();
    sample_cmd->add_option("--seeds", sample_seeds, "comma-separated external seed ids")->required();
    sample_cmd->add_option("--out", sample_out, "write the sample as an edge list");
    add_param_flags(sample_cmd, sample_flags);

    // stats
    std::string stats_graph, stats_truth, stats_out;
    bool stats_no_dedup = false;
    CLI::App* stats_cmd = app.add_subcommand("stats", "ground-truth statistics");
    stats_cmd->add_option("--graph", stats_graph, "edge list file")->required();
    stats_cmd->add_option("--truth", stats_truth, "ground-truth communities file")->required();
    stats_cmd->add_flag("--no-dedup", stats_no_dedup, "keep identical communities");
    stats_cmd->add_option("--out", stats_out, "write the statistics as JSON");

    // experiment
    std::string exp_config, exp_csv, exp_json;
    int exp_workers = 0;
    CLI::App* exp_cmd = app.add_subcommand("experiment", "run a configured experiment");
    exp_cmd->add_option("--config", exp_config, "experiment config (JSON)")->required();
    exp_cmd->add_option("--workers", exp_workers, "override worker count");
    exp_cmd->add_option("--csv", exp_csv, "write per-trial rows as CSV");
    exp_cmd->add_option("--json", exp_json, "write the report as JSON");

    // planted
    PlantedParams planted_params;
    std::uint64_t planted_seed = 1;
    std::string planted_graph = "planted_graph.txt", planted_truth = "planted_truth.txt";
    CLI::App* planted_cmd = app.add_subcommand("planted", "generate a planted-partition benchmark");
    planted_cmd->add_option("--blocks", planted_params.blocks, "number of blocks");
    planted_cmd->add_option("--size", planted_params.block_size, "vertices per block");
    planted_cmd->add_option("--p-in", planted_params.p_in, "intra-block edge probability");
    planted_cmd->add_option("--p-out", planted_params.p_out, "inter-block edge probability");
    planted_cmd->add_option("--rng-seed", planted_seed, "generator seed");
    planted_cmd->add_option("--out-graph", planted_graph, "edge list output path");
    planted_cmd->add_option("--out-truth", planted_truth, "communities output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (detect_cmd->parsed())
            return cmd_detect(graph_path, seed_csv, fixed_size, detect_flags, out_path);
        if (multi_cmd->parsed())
            return cmd_multi(multi_graph, multi_seed, multi_flags, multi_out);
        if (sample_cmd->parsed())
            return cmd_sample(sample_graph, sample_seeds, sample_flags, sample_out);
        if (stats_cmd->parsed())
            return cmd_stats(stats_graph, stats_truth, !stats_no_dedup, stats_out);
        if (exp_cmd->parsed())
            return cmd_experiment(exp_config, exp_workers, exp_csv, exp_json);
        if (planted_cmd->parsed())
            return cmd_planted(planted_params, planted_seed, planted_graph, planted_truth);
    } catch (const lscd::DetectionFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDetection;
    } catch (const lscd::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
