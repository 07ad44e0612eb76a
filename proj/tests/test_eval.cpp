#include "lscd/eval.hpp"

#include "lscd/serialize.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace lscd;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "lscd_test_eval_" + std::to_string(counter++) + ".txt";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_SUITE("eval") {

TEST_CASE("f1 score formulas") {
    std::vector<ExternalId> c{1, 2, 3, 4};
    F1Score equal = f1_score(c, c);
    CHECK(equal.precision == doctest::Approx(1.0));
    CHECK(equal.recall == doctest::Approx(1.0));
    CHECK(equal.f1 == doctest::Approx(1.0));

    F1Score none = f1_score(c, std::vector<ExternalId>{9, 10});
    CHECK(none.f1 == doctest::Approx(0.0));

    F1Score half = f1_score(c, std::vector<ExternalId>{3, 4, 5, 6});
    CHECK(half.precision == doctest::Approx(0.5));
    CHECK(half.recall == doctest::Approx(0.5));
    CHECK(half.f1 == doctest::Approx(0.5));

    CHECK_THROWS_AS(f1_score(c, std::vector<ExternalId>{}), DataError);
}

TEST_CASE("f1 is symmetric") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ExternalId> a, b;
        for (int i = 0; i < 12; ++i) {
            if (rng.bernoulli(0.5))
                a.push_back(i);
            if (rng.bernoulli(0.5))
                b.push_back(i);
        }
        if (a.empty() || b.empty())
            continue;
        CHECK(f1_score(a, b).f1 == doctest::Approx(f1_score(b, a).f1));
    }
}

TEST_CASE("ground truth loading, dedup and om") {
    TempFile f("1 2 3\n4 5\n1 2 3\n2 6\n");
    GroundTruth with_dup = load_ground_truth(f.path, false);
    CHECK(with_dup.communities.size() == 4);
    GroundTruth deduped = load_ground_truth(f.path, true);
    CHECK(deduped.communities.size() == 3);
    CHECK(deduped.om(2) == 2);
    CHECK(deduped.om(4) == 1);
    CHECK(deduped.om(99) == 0);

    // om histogram sums to the number of (vertex, community) incidences
    std::size_t incidences = 0;
    for (const auto& c : deduped.communities)
        incidences += c.size();
    std::size_t om_sum = 0;
    for (const auto& [v, comms] : deduped.memberships)
        om_sum += comms.size();
    CHECK(om_sum == incidences);

    TempFile empty("# nothing\n");
    CHECK_THROWS_AS(load_ground_truth(empty.path, true), DataError);
}

TEST_CASE("ground truth statistics") {
    // K3 community {0,1,2} with one external edge from 2
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    Graph g = Graph::from_edges(4, edges);
    GroundTruth gt = ground_truth_from_sets({{0, 1, 2}}, false);
    GroundTruthStats s = ground_truth_stats(g, gt);
    CHECK(s.community_count == 1);
    CHECK(s.mean_size == doctest::Approx(3.0));
    CHECK(s.std_size == doctest::Approx(0.0));
    CHECK(s.mean_conductance == doctest::Approx(1.0 / 7));
}

TEST_CASE("planted partition extremes") {
    Rng rng(8);
    PlantedParams cliques;
    cliques.blocks = 3;
    cliques.block_size = 4;
    cliques.p_in = 1.0;
    cliques.p_out = 0.0;
    PlantedGraph pg = generate_planted_partition(cliques, rng);
    CHECK(pg.graph.vertex_count() == 12);
    CHECK(pg.graph.edge_count() == 3 * 6);
    CHECK(pg.truth.communities.size() == 3);

    // expected degrees at the benchmark parameters
    PlantedParams bench;
    Rng rng2(9);
    double internal = 0.0, external = 0.0;
    int reps = 20;
    for (int i = 0; i < reps; ++i) {
        PlantedGraph b = generate_planted_partition(bench, rng2);
        for (Vertex v = 0; v < b.graph.vertex_count(); ++v) {
            std::size_t block = v / bench.block_size;
            for (Vertex w : b.graph.neighbors(v)) {
                if (w / bench.block_size == block)
                    internal += 1.0;
                else
                    external += 1.0;
            }
        }
    }
    const double n = 200.0 * reps;
    CHECK(internal / n == doctest::Approx(19 * 0.3).epsilon(0.05));
    CHECK(external / n == doctest::Approx(180 * 0.02).epsilon(0.08));
}

TEST_CASE("no block signal means near-baseline accuracy") {
    ExperimentConfig cfg;
    cfg.planted = PlantedParams{};
    cfg.planted->p_in = 0.1;
    cfg.planted->p_out = 0.1; // no community structure at all
    cfg.trials = 10;
    cfg.truncate_to_truth_size = true;
    cfg.rng_seed = 13;
    Report r = run_experiment(cfg);
    CHECK(r.mean_f1 < 0.5);
}

TEST_CASE("experiment runs are reproducible and parallel-stable") {
    ExperimentConfig cfg;
    cfg.planted = PlantedParams{};
    cfg.trials = 6;
    cfg.seeds_per_community = 3;
    cfg.truncate_to_truth_size = true;
    cfg.rng_seed = 321;
    cfg.workers = 1;

    Report a = run_experiment(cfg);
    cfg.workers = 2;
    Report b = run_experiment(cfg);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].f1 == b.rows[i].f1);
        CHECK(a.rows[i].seeds == b.rows[i].seeds);
        CHECK(a.rows[i].community_id == b.rows[i].community_id);
    }
    CHECK(a.mean_f1 == b.mean_f1);
}

TEST_CASE("csv report has the documented columns") {
    ExperimentConfig cfg;
    cfg.planted = PlantedParams{};
    cfg.planted->blocks = 4;
    cfg.planted->block_size = 8;
    cfg.trials = 2;
    cfg.rng_seed = 7;
    Report r = run_experiment(cfg);

    std::ostringstream out;
    write_report_csv(out, r);
    const std::string csv = out.str();
    CHECK(csv.substr(0, csv.find('\n')) ==
          "trial_id,community_id,strategy,seeds,detected_size,truth_size,precision,recall,f1,"
          "rounds,ms");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3); // header + 2 rows
}

TEST_CASE("multi-mode experiments report per-om groups") {
    // two overlapping triangle communities sharing vertex 3
    TempFile graph_file("0 1\n1 2\n0 2\n0 3\n1 3\n2 3\n4 5\n5 6\n4 6\n4 3\n5 3\n6 3\n");
    TempFile truth_file("0 1 2 3\n4 5 6 3\n");

    ExperimentConfig cfg;
    cfg.mode = ExperimentMode::multi;
    cfg.graph_path = graph_file.path;
    cfg.truth_path = truth_file.path;
    cfg.per_om_vertices = 3;
    cfg.rng_seed = 11;

    Report r = run_experiment(cfg);
    REQUIRE(!r.rows.empty());
    CHECK(r.per_om.count(1) == 1);
    CHECK(r.per_om.count(2) == 1); // vertex 3 sits in both communities
    CHECK(r.per_om.at(2).queries == 1);
    CHECK(r.per_om.at(1).mean_f1 > 0.5);
    CHECK(r.failures == 0);
}

TEST_CASE("experiment config round-trips through json") {
    TempFile cfg_file(R"({
        "planted": {"blocks": 5, "size": 10, "p_in": 0.4, "p_out": 0.01},
        "trials": 9,
        "seeds_per_community": 1,
        "strategy": "low-degree",
        "truncation": "fixed-size",
        "params": {"d": 2, "k": 4, "metric": "tpn", "gamma": 1.5},
        "reseeding": false,
        "rng_seed": 77,
        "workers": 2
    })");
    ExperimentConfig cfg = load_experiment_config(cfg_file.path);
    CHECK(cfg.planted->blocks == 5);
    CHECK(cfg.planted->block_size == 10);
    CHECK(cfg.trials == 9);
    CHECK(cfg.seeds_per_community == 1);
    CHECK(cfg.strategy == SeedStrategy::low_degree);
    CHECK(cfg.truncate_to_truth_size);
    CHECK(cfg.params.d == 2);
    CHECK(cfg.params.k == 4);
    CHECK(cfg.params.metric == Metric::tpn);
    CHECK(cfg.params.gamma == doctest::Approx(1.5));
    CHECK(cfg.params.max_reseed_rounds == 0);
    CHECK(cfg.rng_seed == 77);
    CHECK(cfg.workers == 2);

    TempFile bad("{not json");
    CHECK_THROWS_AS(load_experiment_config(bad.path), DataError);
}

} // TEST_SUITE
