// Command-line front end: higher-order link partitioning of simplicial
// complexes plus the graph baselines and the evaluation suite.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodgelink/baselines.hpp"
#include "hodgelink/hodge.hpp"
#include "hodgelink/io.hpp"
#include "hodgelink/metrics.hpp"
#include "hodgelink/pipeline.hpp"
#include "hodgelink/spectral.hpp"
#include "hodgelink/synth.hpp"

namespace hl = hodgelink;

namespace {

hl::SimplicialComplex load_complex(const std::string& path, bool reject, bool project) {
    return hl::build_complex(hl::io::read_simplex_list(path),
                             reject ? hl::ClosurePolicy::reject : hl::ClosurePolicy::complete,
                             project);
}

int run(int argc, char** argv) {
    CLI::App app{"Link communities of simplicial complexes via the lifted line-graph walk"};
    app.require_subcommand(1);

    // ---- build ----------------------------------------------------------
    auto* build = app.add_subcommand("build", "Ingest and canonicalize a simplex list");
    std::string build_input, build_triangles, build_out, build_nodes_out;
    bool build_reject = false, build_project = false;
    build->add_option("--input", build_input, "simplex list")->required();
    build->add_option("--triangles", build_triangles, "optional separate triangle list");
    build->add_flag("--reject-open", build_reject,
                    "reject simplices whose faces are missing instead of completing them");
    build->add_flag("--project-cliques", build_project,
                    "clique-project simplices larger than 3 nodes");
    build->add_option("--out", build_out, "canonical simplex dump")->required();
    build->add_option("--nodes-out", build_nodes_out, "dense id to original id CSV");
    build->callback([&]() {
        auto simplices = hl::io::read_simplex_list(build_input);
        if (!build_triangles.empty()) {
            auto tris = hl::io::read_simplex_list(build_triangles);
            simplices.insert(simplices.end(), tris.begin(), tris.end());
        }
        hl::SimplicialComplex x = hl::build_complex(
            simplices,
            build_reject ? hl::ClosurePolicy::reject : hl::ClosurePolicy::complete,
            build_project);
        hl::io::write_simplex_list(build_out, x);
        if (!build_nodes_out.empty())
            hl::io::write_node_map(build_nodes_out, x);
        hl::WalkCheck w = hl::validate_walk_assumptions(x);
        std::cout << "nodes " << x.n0() << " links " << x.n1() << " triangles " << x.n2()
                  << " skeleton "
                  << (w == hl::WalkCheck::ok
                          ? "ok"
                          : (w == hl::WalkCheck::disconnected ? "disconnected" : "bipartite"))
                  << "\n";
    });

    // ---- dump-operators --------------------------------------------------
    auto* dump_ops = app.add_subcommand("dump-operators", "Write B1, B2, L1 and Dtot");
    std::string ops_input, ops_dir;
    dump_ops->add_option("--input", ops_input, "simplex list")->required();
    dump_ops->add_option("--out-dir", ops_dir, "output directory")->required();
    dump_ops->callback([&]() {
        hl::SimplicialComplex x = load_complex(ops_input, false, false);
        std::filesystem::create_directories(ops_dir);
        hl::io::write_coordinate_matrix(ops_dir + "/b1.txt", hl::boundary_1(x));
        hl::io::write_coordinate_matrix(ops_dir + "/b2.txt", hl::boundary_2(x));
        hl::io::write_coordinate_matrix(ops_dir + "/l1.txt", hl::hodge_l1(x));
        hl::io::write_coordinate_matrix(ops_dir + "/l1_normalized.txt", hl::normalized_l1(x));
        hl::VecI d = hl::total_degree_diagonal(x);
        hl::SpMatI dtot(x.n1(), x.n1());
        for (int k = 0; k < x.n1(); ++k)
            dtot.insert(k, k) = d[k];
        hl::io::write_coordinate_matrix(ops_dir + "/dtot.txt", dtot);
    });

    // ---- dump-lifted -----------------------------------------------------
    auto* dump_lifted = app.add_subcommand("dump-lifted", "Write the lifted adjacency");
    std::string lift_input, lift_out;
    bool lift_components = false;
    dump_lifted->add_option("--input", lift_input, "simplex list")->required();
    dump_lifted->add_option("--out", lift_out, "adjacency in coordinate text")->required();
    dump_lifted->add_flag("--components", lift_components,
                          "also write the lower/upper/self parts next to --out");
    dump_lifted->callback([&]() {
        hl::SimplicialComplex x = load_complex(lift_input, false, false);
        hl::LiftedLineGraph g = hl::lift(x);
        hl::io::write_coordinate_matrix(lift_out, g.adjacency());
        if (lift_components) {
            hl::io::write_coordinate_matrix(lift_out + ".lower", g.lower);
            hl::io::write_coordinate_matrix(lift_out + ".upper", g.upper);
            hl::SpMatI self(g.states(), g.states());
            for (int s = 0; s < g.states(); ++s)
                self.insert(s, s) = g.self_loop[s];
            hl::io::write_coordinate_matrix(lift_out + ".self", self);
        }
    });

    // ---- partition -------------------------------------------------------
    auto* part = app.add_subcommand("partition", "Higher-order link partition (Louvain)");
    std::string part_input, part_out, part_route = "supernode";
    int part_t = 1, part_k = 0, part_max_dense = 4096;
    std::uint64_t part_seed = 42;
    bool part_shuffle = false, part_allow_large = false;
    part->add_option("--input", part_input, "simplex list")->required();
    part->add_option("--t", part_t, "random-walk time step (default 1)");
    part->add_option("--seed", part_seed, "shuffle seed");
    part->add_flag("--shuffle", part_shuffle, "shuffle the Louvain order (within halves)");
    part->add_option("--route", part_route, "supernode (default) or lifted");
    part->add_option("--k", part_k, "post-hoc community-count constraint");
    part->add_flag("--allow-large-dense", part_allow_large,
                   "lift the dense-size gate for t > 1");
    part->add_option("--out", part_out, "output prefix (.csv and .json)")->required();
    part->callback([&]() {
        hl::SimplicialComplex x = load_complex(part_input, false, false);
        hl::LiftedLineGraph g = hl::lift(x);
        if (part_allow_large)
            part_max_dense = 1 << 30;
        std::string method = part_route == "lifted" ? "hat_A_lifted" : "hat_A";
        hl::Partition p = hl::run_method(x, g, method, part_t, part_seed, part_shuffle,
                                         part_k, part_max_dense, true);
        hl::io::write_partition_csv(part_out + ".csv", x, p);
        hl::io::write_partition_json(part_out + ".json", p);
        std::cout << p.n_communities() << " communities, score "
                  << hl::io::format_double(p.score) << "\n";
    });

    // ---- baseline --------------------------------------------------------
    auto* base = app.add_subcommand("baseline", "Graph-only baselines C, D, E1, S");
    std::string base_input, base_out, base_method;
    int base_t = 1, base_k = 0, base_max_dense = 4096;
    std::uint64_t base_seed = 42;
    bool base_shuffle = false, base_e1_no_self = false;
    base->add_option("--input", base_input, "simplex list")->required();
    base->add_option("--method", base_method, "C, D, E1 or S")->required();
    base->add_option("--t", base_t, "random-walk time step for line-graph methods");
    base->add_option("--seed", base_seed, "shuffle seed");
    base->add_flag("--shuffle", base_shuffle, "shuffle the Louvain order");
    base->add_option("--k", base_k, "post-hoc community-count constraint");
    base->add_flag("--e1-no-self", base_e1_no_self, "drop the E1 diagonal self terms");
    base->add_option("--out", base_out, "output prefix (.csv and .json)")->required();
    base->callback([&]() {
        hl::SimplicialComplex x = load_complex(base_input, false, false);
        hl::LiftedLineGraph g = hl::lift(x);
        hl::Partition p = hl::run_method(x, g, base_method, base_t, base_seed, base_shuffle,
                                         base_k, base_max_dense, !base_e1_no_self);
        hl::io::write_partition_csv(base_out + ".csv", x, p);
        hl::io::write_partition_json(base_out + ".json", p);
        std::cout << p.n_communities() << " communities, score "
                  << hl::io::format_double(p.score) << "\n";
    });

    // ---- evaluate --------------------------------------------------------
    auto* eval = app.add_subcommand("evaluate", "Score a partition with the four metrics");
    std::string eval_input, eval_partition, eval_meta, eval_out, eval_network = "net_0";
    eval->add_option("--input", eval_input, "simplex list")->required();
    eval->add_option("--partition", eval_partition, "partition CSV")->required();
    eval->add_option("--metadata", eval_meta, "metadata CSV");
    eval->add_option("--network", eval_network, "network id for the report row");
    eval->add_option("--out", eval_out, "metrics CSV")->required();
    eval->callback([&]() {
        hl::SimplicialComplex x = load_complex(eval_input, false, false);
        hl::Partition p = hl::io::read_partition_csv(eval_partition, x);
        hl::NodeMetadata meta;
        if (!eval_meta.empty())
            meta = hl::io::read_metadata_csv(eval_meta);
        std::string method = "unknown";
        {
            std::ifstream sidecar(eval_partition.substr(0, eval_partition.size() - 4) +
                                  ".json");
            if (sidecar) {
                nlohmann::json j;
                sidecar >> j;
                method = j.value("method", "unknown");
                p.t = j.value("t", 1);
                p.score = j.value("score", 0.0);
            }
        }
        hl::MetricsReport rep = hl::evaluate_partition(x, p, meta, eval_network, method);
        double q_hat = hl::modularity(
            hl::SpMatD(hl::supernode_graph(hl::lift(x)).cast<double>()), p.assignment);
        hl::io::write_metrics_csv(eval_out, {rep}, {q_hat});
    });

    // ---- composite -------------------------------------------------------
    auto* comp = app.add_subcommand("composite", "Renormalize metrics across methods");
    std::string comp_reports, comp_out;
    comp->add_option("--reports", comp_reports, "metrics CSV (one row per method)")
        ->required();
    comp->add_option("--out", comp_out, "composite CSV")->required();
    comp->callback([&]() {
        auto reports = hl::io::read_metrics_csv(comp_reports);
        hl::io::write_composite_csv(comp_out, hl::composite(reports));
    });

    // ---- spectral-report ---------------------------------------------------
    auto* spectral = app.add_subcommand("spectral-report", "Spectral verification as JSON");
    std::string spec_input, spec_out;
    bool spec_allow_large = false;
    spectral->add_option("--input", spec_input, "simplex list")->required();
    spectral->add_option("--out", spec_out, "report JSON")->required();
    spectral->add_flag("--allow-large-dense", spec_allow_large, "lift the dense-size gate");
    spectral->callback([&]() {
        hl::SimplicialComplex x = load_complex(spec_input, false, false);
        hl::LiftedLineGraph g = hl::lift(x);
        hl::SpectrumReport rep =
            hl::spectrum_decomposition(g, spec_allow_large ? (1 << 30) : 4096);
        double identity_residual = hl::verify_lifting_identity(x);
        nlohmann::json j;
        j["n1"] = g.n1;
        j["full_spectrum"] = std::vector<double>(rep.full.begin(), rep.full.end());
        j["even_spectrum"] = std::vector<double>(rep.even.begin(), rep.even.end());
        j["odd_spectrum"] = std::vector<double>(rep.odd.begin(), rep.odd.end());
        j["multiset_gap"] = rep.multiset_gap;
        j["even_contains_one"] = rep.even_contains_one;
        j["stationary"] = std::vector<double>(rep.stationary.begin(), rep.stationary.end());
        j["stationary_residual"] = rep.stationary_residual;
        j["projection_residual"] = rep.projection_residual;
        j["lifting_identity_residual"] = identity_residual;
        j["betti_1"] = hl::betti_1(x);
        j["l1_kernel_dimension"] = hl::kernel_dimension_l1(x);
        std::ofstream out(spec_out);
        out << j.dump(2) << "\n";
        if (rep.multiset_gap > 1e-8 || rep.stationary_residual > 1e-12 ||
            rep.projection_residual > 1e-12 || identity_residual > 1e-12 ||
            !rep.even_contains_one ||
            hl::betti_1(x) != hl::kernel_dimension_l1(x))
            throw hl::NumericError("spectral verification failed; see " + spec_out);
        std::cout << "spectral checks passed (gap " << rep.multiset_gap << ")\n";
    });

    // ---- synth -----------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "Synthetic complexes");
    std::string synth_kind, synth_out, synth_meta;
    int synth_blocks = 2, synth_block_size = 8, synth_overlap = 1;
    double synth_rate = 1.0;
    std::uint64_t synth_seed = 42;
    synth->add_option("--kind", synth_kind, "two-triangles or planted-overlap")->required();
    synth->add_option("--out", synth_out, "simplex list output")->required();
    synth->add_option("--meta", synth_meta, "metadata CSV output (planted-overlap)");
    synth->add_option("--blocks", synth_blocks, "planted blocks");
    synth->add_option("--block-size", synth_block_size, "nodes per block");
    synth->add_option("--overlap-nodes", synth_overlap, "nodes shared between blocks");
    synth->add_option("--triangle-rate", synth_rate, "triangle fill rate inside blocks");
    synth->add_option("--seed", synth_seed, "generator seed");
    synth->callback([&]() {
        if (synth_kind == "two-triangles") {
            hl::io::write_simplex_list(synth_out, hl::two_triangles());
        } else if (synth_kind == "planted-overlap") {
            hl::PlantedOverlap po = hl::planted_overlap(synth_blocks, synth_block_size,
                                                        synth_overlap, synth_rate, synth_seed);
            hl::io::write_simplex_list(synth_out, po.complex);
            if (!synth_meta.empty())
                hl::io::write_metadata_csv(synth_meta, po.metadata);
        } else {
            throw hl::ConfigError("unknown synthetic kind: " + synth_kind);
        }
    });

    // ---- sample ----------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "Snowball-sample sub-networks");
    std::string sample_input, sample_dir;
    int sample_count = 100, sample_min = 59, sample_max = 93;
    std::uint64_t sample_seed = 42;
    bool sample_project = false;
    sample->add_option("--input", sample_input, "simplex list")->required();
    sample->add_option("--count", sample_count, "number of sub-networks");
    sample->add_option("--min-nodes", sample_min, "smallest sample size");
    sample->add_option("--max-nodes", sample_max, "largest sample size");
    sample->add_option("--seed", sample_seed, "sampler seed");
    sample->add_flag("--project-cliques", sample_project, "clique-project large simplices");
    sample->add_option("--out-dir", sample_dir, "output directory")->required();
    sample->callback([&]() {
        hl::SimplicialComplex x = load_complex(sample_input, false, sample_project);
        auto nets = hl::sample_subnetworks(x, sample_count, sample_min, sample_max,
                                           sample_seed);
        std::filesystem::create_directories(sample_dir);
        nlohmann::json manifest = nlohmann::json::array();
        for (const auto& net : nets) {
            hl::io::write_simplex_list(sample_dir + "/" + net.id + ".txt", net.complex);
            manifest.push_back({{"id", net.id},
                                {"n0", net.complex.n0()},
                                {"n1", net.complex.n1()},
                                {"n2", net.complex.n2()}});
        }
        std::ofstream out(sample_dir + "/manifest.json");
        out << manifest.dump(2) << "\n";
        std::cout << nets.size() << " sub-networks written to " << sample_dir << "\n";
    });

    // ---- pipeline ----------------------------------------------------------
    auto* pipe = app.add_subcommand("pipeline", "End-to-end batch run from a config file");
    std::string pipe_config;
    std::vector<std::string> pipe_sets;
    pipe->add_option("--config", pipe_config, "key=value config file");
    pipe->add_option("--set", pipe_sets, "override: key=value (flags win)");
    pipe->callback([&]() {
        std::map<std::string, std::string> kv;
        if (!pipe_config.empty())
            kv = hl::io::read_config(pipe_config);
        for (const std::string& s : pipe_sets) {
            auto eq = s.find('=');
            if (eq == std::string::npos)
                throw hl::ConfigError("--set expects key=value, got: " + s);
            kv[s.substr(0, eq)] = s.substr(eq + 1);
        }
        hl::PipelineResult res = hl::run_pipeline(hl::config_from_map(kv));
        std::cout << res.networks << " networks, " << res.reports.size()
                  << " report rows written\n";
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
