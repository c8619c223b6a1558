#include "hodgelink/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hodgelink/baselines.hpp"
#include "hodgelink/io.hpp"
#include "hodgelink/rng.hpp"
#include "hodgelink/synth.hpp"

namespace hodgelink {

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

int parse_int_cfg(const std::string& key, const std::string& value) {
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        throw ConfigError(key + " expects an integer, got: " + value);
    }
}

double parse_real_cfg(const std::string& key, const std::string& value) {
    try {
        return std::stod(value);
    } catch (const std::exception&) {
        throw ConfigError(key + " expects a number, got: " + value);
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::vector<std::string> kKnownMethods = {"hat_A", "hat_A_lifted", "C", "D", "E1", "S"};

SimplicialComplex load_input(const RunConfig& cfg, NodeMetadata& meta) {
    if (!cfg.metadata.empty())
        meta = io::read_metadata_csv(cfg.metadata);
    if (cfg.input.rfind("synth:", 0) == 0) {
        std::string kind = cfg.input.substr(6);
        if (kind == "two_triangles")
            return two_triangles();
        if (kind.rfind("planted:", 0) == 0) {
            auto parts = split_list(kind.substr(8));
            if (parts.size() != 4)
                throw ConfigError("synth:planted needs blocks,size,overlap,rate");
            PlantedOverlap po = planted_overlap(
                parse_int_cfg("blocks", parts[0]), parse_int_cfg("block_size", parts[1]),
                parse_int_cfg("overlap_nodes", parts[2]),
                parse_real_cfg("triangle_rate", parts[3]), cfg.seed);
            if (cfg.metadata.empty())
                meta = po.metadata;
            return po.complex;
        }
        throw ConfigError("unknown synthetic input: " + cfg.input);
    }
    return build_complex(io::read_simplex_list(cfg.input), cfg.closure, cfg.project_cliques);
}

} // namespace

RunConfig config_from_map(const std::map<std::string, std::string>& kv) {
    RunConfig cfg;
    for (const auto& [key, value] : kv) {
        if (key == "input")
            cfg.input = value;
        else if (key == "metadata")
            cfg.metadata = value;
        else if (key == "methods")
            cfg.methods = split_list(value);
        else if (key == "t_grid") {
            cfg.t_grid.clear();
            for (const std::string& t : split_list(value))
                cfg.t_grid.push_back(parse_int_cfg(key, t));
        } else if (key == "seed")
            cfg.seed = std::stoull(value);
        else if (key == "closure")
            cfg.closure = value == "reject" ? ClosurePolicy::reject : ClosurePolicy::complete;
        else if (key == "project_cliques")
            cfg.project_cliques = value == "1" || value == "true";
        else if (key == "sample_count")
            cfg.sample_count = parse_int_cfg(key, value);
        else if (key == "sample_min")
            cfg.sample_min = parse_int_cfg(key, value);
        else if (key == "sample_max")
            cfg.sample_max = parse_int_cfg(key, value);
        else if (key == "constrain_k")
            cfg.constrain_k = parse_int_cfg(key, value);
        else if (key == "max_dense")
            cfg.max_dense = parse_int_cfg(key, value);
        else if (key == "shuffle")
            cfg.shuffle = value == "1" || value == "true";
        else if (key == "e1_self")
            cfg.e1_self = value == "1" || value == "true";
        else if (key == "jobs")
            cfg.jobs = parse_int_cfg(key, value);
        else if (key == "out")
            cfg.out_dir = value;
        else
            throw ConfigError("unknown config key: " + key);
    }
    return cfg;
}

Partition run_method(const SimplicialComplex& x, const LiftedLineGraph& g,
                     const std::string& method, int t, std::uint64_t seed, bool shuffle,
                     int constrain_k, int max_dense, bool e1_self) {
    if (method == "hat_A" || method == "hat_A_lifted") {
        Partition p;
        if (method == "hat_A") {
            p = partition_supernode(g, t, seed, shuffle, max_dense);
        } else {
            p = project_to_links(partition_lifted(g, t, seed, shuffle, max_dense), g.n1);
            p.method = "hat_A_lifted";
        }
        if (constrain_k > 0 && p.n_communities() > constrain_k) {
            Eigen::MatrixXd eff = MatI(supernode_graph(g)).cast<double>();
            if (t > 1)
                eff = stability_matrix(eff, t, max_dense);
            p = merge_to_count(eff, p, constrain_k);
        }
        return p;
    }
    if (method == "C" || method == "D" || method == "E1") {
        LineGraphKind kind = method == "C"   ? LineGraphKind::C
                             : method == "D" ? LineGraphKind::D
                                             : LineGraphKind::E1;
        SpMatD adj = line_graph(x, kind, e1_self);
        std::vector<int> order(x.n1());
        std::iota(order.begin(), order.end(), 0);
        if (shuffle) {
            std::mt19937_64 gen(seed);
            rng::shuffle(order, gen);
        }
        Partition p;
        Eigen::MatrixXd eff;
        if (t == 1) {
            p = louvain(adj, order);
            eff = Eigen::MatrixXd(adj);
        } else {
            eff = stability_matrix(Eigen::MatrixXd(adj), t, max_dense);
            p = louvain(eff, order);
        }
        p.t = t;
        p.seed = seed;
        p.method = method;
        if (constrain_k > 0 && p.n_communities() > constrain_k)
            p = merge_to_count(eff, p, constrain_k);
        return p;
    }
    if (method == "S") {
        Partition p = dendrogram_cut(x, nullptr, constrain_k);
        p.t = 1;
        p.seed = seed;
        return p;
    }
    throw ConfigError("unknown method: " + method);
}

PipelineResult run_pipeline(const RunConfig& cfg) {
    if (cfg.methods.empty())
        throw ConfigError("no methods configured");
    for (const std::string& m : cfg.methods)
        if (std::find(kKnownMethods.begin(), kKnownMethods.end(), m) == kKnownMethods.end())
            throw ConfigError("unknown method: " + m);
    bool needs_t = false;
    for (const std::string& m : cfg.methods)
        if (m != "S")
            needs_t = true;
    if (needs_t && cfg.t_grid.empty())
        throw ConfigError("t_grid must be non-empty for line-graph methods");
    if (cfg.input.empty())
        throw ConfigError("no input configured");
    if (cfg.out_dir.empty())
        throw ConfigError("no output directory configured");

    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    fs::create_directories(cfg.out_dir + "/partitions");
    fs::create_directories(cfg.out_dir + "/networks");

    PipelineResult result;
    NodeMetadata meta;
    auto t_load = std::chrono::steady_clock::now();
    SimplicialComplex parent = load_input(cfg, meta);
    result.timings.push_back({"*", "ingest", seconds_since(t_load)});

    std::vector<SampledNetwork> networks;
    if (cfg.sample_count > 0) {
        auto t_sample = std::chrono::steady_clock::now();
        networks = sample_subnetworks(parent, cfg.sample_count, cfg.sample_min,
                                      cfg.sample_max, cfg.seed);
        result.timings.push_back({"*", "sample", seconds_since(t_sample)});
    } else {
        SampledNetwork net;
        net.id = "net_0";
        net.complex = parent;
        networks.push_back(std::move(net));
    }
    result.networks = static_cast<int>(networks.size());

    struct NetworkRows {
        std::vector<MetricsReport> reports;
        std::vector<double> q_hat;
        std::vector<StageTiming> timings;
    };
    std::vector<NetworkRows> rows(networks.size());

    auto process = [&](std::size_t idx) {
        const SampledNetwork& net = networks[idx];
        const SimplicialComplex& x = net.complex;
        NetworkRows& out = rows[idx];
        const std::uint64_t net_seed = cfg.seed + idx;

        io::write_simplex_list(cfg.out_dir + "/networks/" + net.id + ".txt", x);
        io::write_node_map(cfg.out_dir + "/networks/" + net.id + ".nodes.csv", x);

        auto t_lift = std::chrono::steady_clock::now();
        LiftedLineGraph g = lift(x);
        out.timings.push_back({net.id, "lift", seconds_since(t_lift)});
        SpMatD supernode = supernode_graph(g).cast<double>();

        for (const std::string& method : cfg.methods) {
            std::vector<int> ts = (method == "S") ? std::vector<int>{1} : cfg.t_grid;
            for (int t : ts) {
                auto t_part = std::chrono::steady_clock::now();
                Partition p = run_method(x, g, method, t, net_seed, cfg.shuffle,
                                         cfg.constrain_k, cfg.max_dense, cfg.e1_self);
                out.timings.push_back(
                    {net.id, "partition:" + method + ":t" + std::to_string(t),
                     seconds_since(t_part)});

                std::string stem = cfg.out_dir + "/partitions/" + net.id + "__" + method +
                                   "__t" + std::to_string(t);
                io::write_partition_csv(stem + ".csv", x, p);
                io::write_partition_json(stem + ".json", p);

                auto t_eval = std::chrono::steady_clock::now();
                out.reports.push_back(evaluate_partition(x, p, meta, net.id, method));
                out.q_hat.push_back(modularity(supernode, p.assignment));
                out.timings.push_back({net.id, "evaluate:" + method + ":t" + std::to_string(t),
                                       seconds_since(t_eval)});
            }
        }
    };

    if (cfg.jobs > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int workers = std::min<int>(cfg.jobs, static_cast<int>(networks.size()));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (std::size_t idx = next.fetch_add(1); idx < networks.size();
                     idx = next.fetch_add(1))
                    process(idx);
            });
        for (auto& th : pool)
            th.join();
    } else {
        for (std::size_t idx = 0; idx < networks.size(); ++idx)
            process(idx);
    }

    for (const NetworkRows& r : rows) {
        result.reports.insert(result.reports.end(), r.reports.begin(), r.reports.end());
        result.q_hat.insert(result.q_hat.end(), r.q_hat.begin(), r.q_hat.end());
        result.timings.insert(result.timings.end(), r.timings.begin(), r.timings.end());
    }

    // Composite: per method, pick each network's best-own-objective t, then
    // average the four metrics across networks.
    std::vector<MetricsReport> per_method;
    for (const std::string& method : cfg.methods) {
        MetricsReport avg;
        avg.network = "ALL";
        avg.method = method;
        avg.t = 0;
        int n_nets = 0;
        for (const SampledNetwork& net : networks) {
            const MetricsReport* best = nullptr;
            for (const MetricsReport& r : result.reports)
                if (r.method == method && r.network == net.id)
                    if (!best || r.score > best->score)
                        best = &r;
            if (!best)
                continue;
            ++n_nets;
            avg.score += best->score;
            avg.enrichment += best->enrichment_defined ? best->enrichment : 0.0;
            avg.enrichment_defined = avg.enrichment_defined && best->enrichment_defined;
            avg.overlap_quality += best->overlap_quality;
            avg.community_coverage += best->community_coverage;
            avg.overlap_coverage += best->overlap_coverage;
        }
        if (n_nets > 0) {
            avg.score /= n_nets;
            avg.enrichment /= n_nets;
            avg.overlap_quality /= n_nets;
            avg.community_coverage /= n_nets;
            avg.overlap_coverage /= n_nets;
        }
        per_method.push_back(std::move(avg));
    }
    if (per_method.size() >= 2)
        result.composite_rows = composite(per_method);

    io::write_metrics_csv(cfg.out_dir + "/metrics.csv", result.reports, result.q_hat);
    io::write_long_csv(cfg.out_dir + "/long.csv", result.reports);
    if (!result.composite_rows.empty())
        io::write_composite_csv(cfg.out_dir + "/composite.csv", result.composite_rows);
    {
        std::ofstream out(cfg.out_dir + "/timings.csv");
        out << "network,stage,seconds\n";
        for (const StageTiming& t : result.timings)
            out << t.network << "," << t.stage << "," << io::format_double(t.seconds) << "\n";
    }
    {
        nlohmann::json j;
        j["input"] = cfg.input;
        j["metadata"] = cfg.metadata;
        j["methods"] = cfg.methods;
        j["t_grid"] = cfg.t_grid;
        j["seed"] = cfg.seed;
        j["closure"] = cfg.closure == ClosurePolicy::reject ? "reject" : "complete";
        j["project_cliques"] = cfg.project_cliques;
        j["sample_count"] = cfg.sample_count;
        j["constrain_k"] = cfg.constrain_k;
        j["shuffle"] = cfg.shuffle;
        j["e1_self"] = cfg.e1_self;
        nlohmann::json nets = nlohmann::json::array();
        for (const SampledNetwork& net : networks)
            nets.push_back({{"id", net.id},
                            {"n0", net.complex.n0()},
                            {"n1", net.complex.n1()},
                            {"n2", net.complex.n2()}});
        j["networks"] = nets;
        std::ofstream out(cfg.out_dir + "/manifest.json");
        out << j.dump(2) << "\n";
    }
    return result;
}

} // namespace hodgelink
