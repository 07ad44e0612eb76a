#include "lscd/eval.hpp"

#include "lscd/multimember.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace lscd {

F1Score f1_score(std::span<const ExternalId> detected, std::span<const ExternalId> truth) {
    if (detected.empty() || truth.empty())
        throw DataError("f1_score: empty community");
    std::unordered_set<ExternalId> t(truth.begin(), truth.end());
    std::unordered_set<ExternalId> c(detected.begin(), detected.end());
    std::size_t hit = 0;
    for (ExternalId v : c)
        if (t.count(v))
            ++hit;
    F1Score s;
    s.precision = static_cast<double>(hit) / static_cast<double>(c.size());
    s.recall = static_cast<double>(hit) / static_cast<double>(t.size());
    s.f1 = 2.0 * static_cast<double>(hit) / static_cast<double>(c.size() + t.size());
    return s;
}

GroundTruth ground_truth_from_sets(std::vector<std::vector<ExternalId>> sets, bool dedup) {
    for (auto& c : sets) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.empty())
            throw DataError("ground truth community with no vertices");
    }
    if (dedup) {
        std::set<std::vector<ExternalId>> seen;
        std::vector<std::vector<ExternalId>> unique;
        for (auto& c : sets)
            if (seen.insert(c).second)
                unique.push_back(std::move(c));
        sets = std::move(unique);
    }
    GroundTruth gt;
    gt.communities = std::move(sets);
    for (std::size_t i = 0; i < gt.communities.size(); ++i)
        for (ExternalId v : gt.communities[i])
            gt.memberships[v].push_back(i);
    return gt;
}

GroundTruth load_ground_truth(const std::string& path, bool dedup) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open ground truth: " + path);
    std::vector<std::vector<ExternalId>> sets;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ss(line);
        std::vector<ExternalId> community;
        ExternalId v;
        while (ss >> v)
            community.push_back(v);
        if (!ss.eof())
            throw DataError(path + ":" + std::to_string(line_no) + ": malformed community line");
        if (community.empty())
            throw DataError(path + ":" + std::to_string(line_no) + ": community with no vertices");
        sets.push_back(std::move(community));
    }
    if (sets.empty())
        throw DataError(path + ": empty ground truth file");
    return ground_truth_from_sets(std::move(sets), dedup);
}

GroundTruthStats ground_truth_stats(const Graph& g, const GroundTruth& gt) {
    GroundTruthStats out;
    out.community_count = gt.communities.size();
    if (gt.communities.empty())
        return out;

    double size_sum = 0.0, size_sq = 0.0, cond_sum = 0.0;
    std::size_t cond_count = 0;
    for (const auto& community : gt.communities) {
        size_sum += static_cast<double>(community.size());
        size_sq += static_cast<double>(community.size()) * static_cast<double>(community.size());

        std::vector<Vertex> internal;
        internal.reserve(community.size());
        for (ExternalId e : community) {
            auto v = g.find_external(e);
            if (!v)
                throw DataError("ground truth vertex " + std::to_string(e) + " not in graph");
            internal.push_back(*v);
        }
        CommunityStats cs = community_stats(g, internal);
        if (cs.d_k > 0) {
            cond_sum += conductance(cs);
            ++cond_count;
        }
    }
    const double n = static_cast<double>(gt.communities.size());
    out.mean_size = size_sum / n;
    out.std_size = std::sqrt(std::max(0.0, size_sq / n - out.mean_size * out.mean_size));
    out.mean_conductance = cond_count ? cond_sum / static_cast<double>(cond_count) : 0.0;
    return out;
}

PlantedGraph generate_planted_partition(const PlantedParams& params, Rng& rng) {
    if (params.p_in < 0 || params.p_in > 1 || params.p_out < 0 || params.p_out > 1)
        throw DataError("generate_planted_partition: probabilities must be in [0,1]");
    const std::size_t n = params.blocks * params.block_size;
    if (n == 0)
        throw DataError("generate_planted_partition: empty graph");

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same = (i / params.block_size) == (j / params.block_size);
            if (rng.bernoulli(same ? params.p_in : params.p_out))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }

    PlantedGraph out;
    out.graph = Graph::from_edges(n, edges);
    std::vector<std::vector<ExternalId>> sets(params.blocks);
    for (std::size_t b = 0; b < params.blocks; ++b)
        for (std::size_t i = 0; i < params.block_size; ++i)
            sets[b].push_back(static_cast<ExternalId>(b * params.block_size + i));
    out.truth = ground_truth_from_sets(std::move(sets), false);
    return out;
}

namespace {

struct TrialContext {
    const Graph* graph = nullptr;        // dataset mode: shared graph
    const GroundTruth* truth = nullptr;
    std::vector<std::size_t> targets;    // dataset mode: chosen community per trial
};

TrialRow run_detect_trial(const ExperimentConfig& cfg, const TrialContext& ctx,
                          std::size_t trial_id) {
    TrialRow row;
    row.trial_id = trial_id;
    row.strategy = seed_strategy_name(cfg.strategy);
    Rng rng = Rng(cfg.rng_seed).fork(trial_id);

    try {
        PlantedGraph generated;
        const Graph* g = ctx.graph;
        const GroundTruth* gt = ctx.truth;
        std::size_t target;
        if (cfg.planted) {
            generated = generate_planted_partition(*cfg.planted, rng);
            g = &generated.graph;
            gt = &generated.truth;
            target = rng.below(gt->communities.size());
        } else {
            target = ctx.targets[trial_id];
        }
        row.community_id = target;
        const std::vector<ExternalId>& truth_ext = gt->communities[target];
        row.truth_size = truth_ext.size();

        std::vector<Vertex> community;
        community.reserve(truth_ext.size());
        for (ExternalId e : truth_ext)
            if (auto v = g->find_external(e))
                community.push_back(*v);
        if (community.size() < cfg.seeds_per_community)
            throw DataError("target community smaller than the requested seed count");

        SeedSet seeds = generate_seeds(*g, community, cfg.strategy, cfg.seeds_per_community, rng);
        for (Vertex s : seeds.members)
            row.seeds.push_back(g->external_id(s));

        const auto t0 = std::chrono::steady_clock::now();
        DetectionResult det =
            cfg.truncate_to_truth_size
                ? detect_fixed_size(*g, seeds.members, truth_ext.size(), cfg.params)
                : detect(*g, seeds.members, cfg.params);
        const auto t1 = std::chrono::steady_clock::now();
        row.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.rounds = static_cast<int>(det.trace.size());

        std::vector<ExternalId> detected_ext;
        detected_ext.reserve(det.community.members.size());
        for (Vertex v : det.community.members)
            detected_ext.push_back(g->external_id(v));
        F1Score f = f1_score(detected_ext, truth_ext);
        row.detected_size = detected_ext.size();
        row.precision = f.precision;
        row.recall = f.recall;
        row.f1 = f.f1;
    } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
    }
    return row;
}

// multi mode: one query vertex per trial; every truth community containing
// the query is matched against the best detected community
struct MultiQuery {
    ExternalId vertex;
    std::size_t om;
};

TrialRow run_multi_trial(const ExperimentConfig& cfg, const Graph& g, const GroundTruth& gt,
                         const MultiQuery& query, std::size_t trial_id, double& f1_sum,
                         std::size_t& pair_count) {
    TrialRow row;
    row.trial_id = trial_id;
    row.strategy = "multi";
    row.seeds = {query.vertex};
    f1_sum = 0.0;
    pair_count = 0;
    try {
        auto v = g.find_external(query.vertex);
        if (!v)
            throw DataError("query vertex not in graph");
        const auto t0 = std::chrono::steady_clock::now();
        MembershipResult res = find_all_memberships(g, *v, cfg.params);
        const auto t1 = std::chrono::steady_clock::now();
        row.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.detected_size = res.communities.size();

        std::vector<std::vector<ExternalId>> detected;
        for (const auto& det : res.communities) {
            std::vector<ExternalId> ext;
            for (Vertex m : det.community.members)
                ext.push_back(g.external_id(m));
            detected.push_back(std::move(ext));
        }
        double best_sum = 0.0;
        std::size_t pairs = 0;
        for (std::size_t ci : gt.memberships.at(query.vertex)) {
            double best = 0.0;
            for (const auto& d : detected)
                best = std::max(best, f1_score(d, gt.communities[ci]).f1);
            best_sum += best;
            ++pairs;
        }
        f1_sum = best_sum;
        pair_count = pairs;
        row.truth_size = pairs;
        row.f1 = pairs ? best_sum / static_cast<double>(pairs) : 0.0;
    } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
    }
    return row;
}

void finalize_report(Report& report) {
    double f1 = 0.0, p = 0.0, r = 0.0, ms = 0.0, f1_sq = 0.0;
    for (const auto& row : report.rows) {
        if (row.failed)
            ++report.failures;
        f1 += row.f1;
        f1_sq += row.f1 * row.f1;
        p += row.precision;
        r += row.recall;
        ms += row.millis;
    }
    const double n = static_cast<double>(report.rows.size());
    if (n > 0) {
        report.mean_f1 = f1 / n;
        report.std_f1 = std::sqrt(std::max(0.0, f1_sq / n - report.mean_f1 * report.mean_f1));
        report.mean_precision = p / n;
        report.mean_recall = r / n;
        report.mean_millis = ms / n;
    }
}

} // namespace

Report run_experiment(const ExperimentConfig& cfg) {
    Report report;

    Graph loaded_graph;
    GroundTruth loaded_truth;
    TrialContext ctx;
    if (!cfg.planted) {
        if (cfg.graph_path.empty() || cfg.truth_path.empty())
            throw DataError("run_experiment: need either planted params or graph+truth paths");
        loaded_graph = Graph::load_edge_list(cfg.graph_path);
        loaded_truth = load_ground_truth(cfg.truth_path, true);
        ctx.graph = &loaded_graph;
        ctx.truth = &loaded_truth;
    }

    if (cfg.mode == ExperimentMode::multi) {
        if (cfg.planted)
            throw DataError("run_experiment: multi mode needs a dataset graph");
        // group vertices by om, pick per_om_vertices from each group
        Rng rng(cfg.rng_seed);
        std::map<std::size_t, std::vector<ExternalId>> groups;
        for (const auto& [v, comms] : loaded_truth.memberships) {
            std::size_t om = std::min(comms.size(), cfg.max_om);
            groups[om].push_back(v);
        }
        std::vector<MultiQuery> queries;
        for (auto& [om, vertices] : groups) {
            std::sort(vertices.begin(), vertices.end());
            auto picked = rng.sample_without_replacement(vertices, cfg.per_om_vertices);
            for (ExternalId v : picked)
                queries.push_back({v, om});
        }
        std::map<std::size_t, double> om_f1;
        std::map<std::size_t, std::size_t> om_pairs, om_queries;
        for (std::size_t i = 0; i < queries.size(); ++i) {
            double f1_sum = 0.0;
            std::size_t pairs = 0;
            report.rows.push_back(
                run_multi_trial(cfg, loaded_graph, loaded_truth, queries[i], i, f1_sum, pairs));
            om_f1[queries[i].om] += f1_sum;
            om_pairs[queries[i].om] += pairs;
            om_queries[queries[i].om] += 1;
        }
        for (const auto& [om, sum] : om_f1) {
            OmGroupStats s;
            s.queries = om_queries[om];
            s.truth_pairs = om_pairs[om];
            s.mean_f1 = om_pairs[om] ? sum / static_cast<double>(om_pairs[om]) : 0.0;
            report.per_om[om] = s;
        }
        finalize_report(report);
        return report;
    }

    std::size_t trials = cfg.trials;
    if (!cfg.planted) {
        // choose distinct target communities up front, reproducibly
        Rng rng(cfg.rng_seed);
        std::vector<std::size_t> all(loaded_truth.communities.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;
        ctx.targets = rng.sample_without_replacement(all, cfg.trials);
        trials = ctx.targets.size();
    }

    report.rows.resize(trials);
    const int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (std::size_t t = 0; t < trials; ++t)
            report.rows[t] = run_detect_trial(cfg, ctx, t);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t t = next.fetch_add(1);
                if (t >= trials)
                    return;
                report.rows[t] = run_detect_trial(cfg, ctx, t);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    finalize_report(report);
    return report;
}

} // namespace lscd
