#include "lscd/serialize.hpp"

#include <fstream>
#include <sstream>

namespace lscd {

using nlohmann::json;

namespace {

json stats_json(const CommunityStats& s) {
    return json{{"n_k", s.n_k},
                {"e_kk", s.e_kk},
                {"d_k", s.d_k},
                {"m", s.m},
                {"triangle_sum", s.triangle_sum}};
}

json community_json(const Graph& g, const Community& c) {
    std::vector<ExternalId> members;
    members.reserve(c.members.size());
    for (Vertex v : c.members)
        members.push_back(g.external_id(v));
    return json{{"members", members},
                {"scores", c.scores},
                {"metric", metric_name(c.metric)},
                {"score", c.score},
                {"stats", stats_json(c.stats)}};
}

} // namespace

json to_json(const Graph& g, const DetectionResult& result) {
    json rounds = json::array();
    for (const RoundInfo& r : result.trace)
        rounds.push_back(json{{"round", r.round},
                              {"seed_count", r.seed_count},
                              {"community_size", r.community_size},
                              {"score", r.score},
                              {"accepted", r.accepted},
                              {"note", r.note}});
    std::vector<ExternalId> ranked;
    ranked.reserve(result.ranked.size());
    for (Vertex v : result.ranked)
        ranked.push_back(g.external_id(v));
    return json{{"community", community_json(g, result.community)},
                {"ranked", ranked},
                {"ranked_scores", result.ranked_scores},
                {"trace", rounds},
                {"sample_size", result.sample_size},
                {"vertices_touched", result.vertices_touched},
                {"warnings", result.warnings},
                {"epsilon_rejected", result.epsilon_rejected}};
}

json to_json(const Graph& g, const MembershipResult& result) {
    json communities = json::array();
    for (const DetectionResult& det : result.communities)
        communities.push_back(to_json(g, det));
    json skipped = json::array();
    for (const auto& cand : result.skipped) {
        std::vector<ExternalId> ext;
        for (Vertex v : cand)
            ext.push_back(g.external_id(v));
        skipped.push_back(ext);
    }
    return json{{"communities", communities},
                {"skipped_candidates", skipped},
                {"om_estimate", result.om_estimate}};
}

json to_json(const Report& report) {
    json rows = json::array();
    for (const TrialRow& r : report.rows)
        rows.push_back(json{{"trial_id", r.trial_id},
                            {"community_id", r.community_id},
                            {"strategy", r.strategy},
                            {"seeds", r.seeds},
                            {"detected_size", r.detected_size},
                            {"truth_size", r.truth_size},
                            {"precision", r.precision},
                            {"recall", r.recall},
                            {"f1", r.f1},
                            {"rounds", r.rounds},
                            {"millis", r.millis},
                            {"failed", r.failed},
                            {"error", r.error}});
    json per_om = json::object();
    for (const auto& [om, s] : report.per_om)
        per_om[std::to_string(om)] =
            json{{"queries", s.queries}, {"truth_pairs", s.truth_pairs}, {"mean_f1", s.mean_f1}};
    return json{{"rows", rows},
                {"mean_f1", report.mean_f1},
                {"std_f1", report.std_f1},
                {"mean_precision", report.mean_precision},
                {"mean_recall", report.mean_recall},
                {"mean_millis", report.mean_millis},
                {"failures", report.failures},
                {"per_om", per_om}};
}

json to_json(const GroundTruthStats& stats) {
    return json{{"communities", stats.community_count},
                {"mean_size", stats.mean_size},
                {"std_size", stats.std_size},
                {"mean_conductance", stats.mean_conductance}};
}

void write_report_csv(std::ostream& out, const Report& report) {
    out << "trial_id,community_id,strategy,seeds,detected_size,truth_size,precision,recall,f1,"
           "rounds,ms\n";
    for (const TrialRow& r : report.rows) {
        std::ostringstream seeds;
        for (std::size_t i = 0; i < r.seeds.size(); ++i)
            seeds << (i ? ";" : "") << r.seeds[i];
        out << r.trial_id << ',' << r.community_id << ',' << r.strategy << ',' << seeds.str()
            << ',' << r.detected_size << ',' << r.truth_size << ',' << r.precision << ','
            << r.recall << ',' << r.f1 << ',' << r.rounds << ',' << r.millis << '\n';
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w : g.neighbors(v))
            if (v < w)
                out << g.external_id(v) << '\t' << g.external_id(w) << '\n';
}

namespace {

DetectionParams params_from_json(const json& j) {
    DetectionParams p;
    p.d = j.value("d", p.d);
    p.k = j.value("k", p.k);
    if (j.contains("variant"))
        p.variant = walk_variant_from_name(j["variant"].get<std::string>());
    p.sample.radius = j.value("radius", p.sample.radius);
    p.sample.outdegree_cap = j.value("outdegree_cap", p.sample.outdegree_cap);
    p.sample.frontier_cap = j.value("frontier_cap", p.sample.frontier_cap);
    p.strengthen_l = j.value("l", p.strengthen_l);
    p.gamma = j.value("gamma", p.gamma);
    p.delta = j.value("delta", p.delta);
    if (j.contains("metric"))
        p.metric = metric_from_name(j["metric"].get<std::string>());
    p.max_reseed_rounds = j.value("max_rounds", p.max_reseed_rounds);
    if (j.contains("epsilon") && !j["epsilon"].is_null())
        p.epsilon = j["epsilon"].get<double>();
    return p;
}

} // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open config: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw DataError("config parse error in " + path + ": " + e.what());
    }

    ExperimentConfig cfg;
    if (j.value("mode", "detect") == std::string("multi"))
        cfg.mode = ExperimentMode::multi;
    cfg.graph_path = j.value("graph", "");
    cfg.truth_path = j.value("truth", "");
    if (j.contains("planted")) {
        const json& p = j["planted"];
        PlantedParams pp;
        pp.blocks = p.value("blocks", pp.blocks);
        pp.block_size = p.value("size", pp.block_size);
        pp.p_in = p.value("p_in", pp.p_in);
        pp.p_out = p.value("p_out", pp.p_out);
        cfg.planted = pp;
    }
    cfg.trials = j.value("trials", cfg.trials);
    cfg.seeds_per_community = j.value("seeds_per_community", cfg.seeds_per_community);
    if (j.contains("strategy"))
        cfg.strategy = seed_strategy_from_name(j["strategy"].get<std::string>());
    if (j.contains("truncation")) {
        const std::string t = j["truncation"].get<std::string>();
        if (t == "fixed-size")
            cfg.truncate_to_truth_size = true;
        else if (t == "metric")
            cfg.truncate_to_truth_size = false;
        else
            throw DataError("config: truncation must be \"metric\" or \"fixed-size\"");
    }
    if (j.contains("params"))
        cfg.params = params_from_json(j["params"]);
    if (j.contains("reseeding") && !j["reseeding"].get<bool>())
        cfg.params.max_reseed_rounds = 0;
    cfg.rng_seed = j.value("rng_seed", cfg.rng_seed);
    cfg.workers = j.value("workers", cfg.workers);
    cfg.per_om_vertices = j.value("per_om_vertices", cfg.per_om_vertices);
    cfg.max_om = j.value("max_om", cfg.max_om);
    return cfg;
}

} // namespace lscd
