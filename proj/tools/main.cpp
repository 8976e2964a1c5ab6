// clsnet command line: reproducible, seeded runs over the shared-library C API.
// Every artifact gets a sibling <out>.manifest.json recording the subcommand,
// parameters, seed, tool version, and output hashes.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clsnet.h"

using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
    CliError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
    int exit_code;
};

void check(clsnet_status status, const std::string& context) {
    if (status == CLSNET_OK) return;
    throw CliError(static_cast<int>(status), context + ": " + clsnet_last_error());
}

[[noreturn]] void usage_error(const std::string& message) { throw CliError(64, message); }

clsnet_geometry geometry_from(const std::string& name) {
    if (name == "euclidean") return CLSNET_GEOM_EUCLIDEAN;
    if (name == "spherical") return CLSNET_GEOM_SPHERICAL;
    if (name == "hyperbolic") return CLSNET_GEOM_HYPERBOLIC;
    if (name == "ultrametric") return CLSNET_GEOM_ULTRAMETRIC;
    usage_error("unknown geometry: " + name);
}

std::string file_sha256(const std::string& path) {
    char hex[65];
    check(clsnet_file_sha256(path.c_str(), hex), "hashing " + path);
    return hex;
}

void write_manifest(const std::string& primary_out, const std::string& subcommand,
                    const json& parameters, std::optional<uint64_t> seed,
                    const std::vector<std::string>& artifacts) {
    json manifest;
    manifest["tool"] = "clsnet";
    manifest["version"] = clsnet_version();
    manifest["subcommand"] = subcommand;
    manifest["parameters"] = parameters;
    if (seed) manifest["seed"] = *seed;
    json outputs = json::array();
    for (const auto& path : artifacts)
        outputs.push_back(json{{"path", path}, {"sha256", file_sha256(path)}});
    manifest["outputs"] = outputs;

    const std::string path = primary_out + ".manifest.json";
    std::ofstream out(path);
    if (!out) throw CliError(CLSNET_ERR_IO, "cannot write manifest: " + path);
    out << manifest.dump(2) << "\n";
}

struct GraphHandle {
    clsnet_graph* g = nullptr;
    ~GraphHandle() { clsnet_graph_destroy(g); }
};

void warn_parse_cleanups(const GraphHandle& graph) {
    uint32_t duplicates = 0, self_loops = 0;
    if (clsnet_graph_parse_stats(graph.g, &duplicates, &self_loops) != CLSNET_OK) return;
    if (duplicates > 0)
        std::cerr << "warning: " << duplicates << " duplicate edge(s) deduplicated\n";
    if (self_loops > 0) std::cerr << "warning: " << self_loops << " self-loop(s) dropped\n";
}

struct PositionsHandle {
    clsnet_positions* p = nullptr;
    ~PositionsHandle() { clsnet_positions_destroy(p); }
};

struct EnsembleHandle {
    clsnet_ensemble* e = nullptr;
    ~EnsembleHandle() { clsnet_ensemble_destroy(e); }
};

// --- sample -------------------------------------------------------------------

struct SampleArgs {
    std::string geometry = "euclidean";
    uint32_t n = 0;
    double radius = 1.0;
    double alpha = 0.0;
    uint32_t branching = 2;
    uint32_t depth = 3;
    uint64_t seed = 0;
    std::string out;
    bool alpha_given = false;
};

void run_sample(const SampleArgs& a) {
    PositionsHandle positions;
    const clsnet_geometry geom = geometry_from(a.geometry);
    if (a.alpha_given && geom != CLSNET_GEOM_HYPERBOLIC)
        usage_error("--alpha (quasi-uniform shape) applies to hyperbolic sampling only");
    if (geom == CLSNET_GEOM_ULTRAMETRIC) {
        check(clsnet_sample_ultrametric(a.n, a.branching, a.depth, a.seed, &positions.p),
              "sample");
    } else if (a.alpha_given) {
        check(clsnet_sample_quasi_uniform(a.n, a.radius, a.alpha, a.seed, &positions.p), "sample");
    } else {
        check(clsnet_sample_disk(geom, a.n, a.radius, a.seed, &positions.p), "sample");
    }
    check(clsnet_positions_write_csv(positions.p, a.out.c_str()), "writing " + a.out);

    json params{{"geometry", a.geometry}, {"n", a.n}};
    if (geom == CLSNET_GEOM_ULTRAMETRIC) {
        params["branching"] = a.branching;
        params["depth"] = a.depth;
    } else {
        params["radius"] = a.radius;
        if (a.alpha_given) params["alpha"] = a.alpha;
    }
    write_manifest(a.out, "sample", params, a.seed, {a.out});
}

// --- generate ------------------------------------------------------------------

struct GenerateArgs {
    std::string model = "distance-logit";
    std::string geometry = "euclidean";
    uint32_t n = 0;
    double radius = 1.0;
    double alpha = 0.0;
    double gamma = 0.0;
    bool rescale = false;
    double kbar = 8.0;
    double gamma_pl = 3.0;
    double temperature = 0.1;
    std::string graphon = "constant";
    double p = 0.5;
    std::string kernel;
    uint32_t t = 2;
    double zeta = 1.0;
    uint32_t branching = 2;
    uint32_t depth = 3;
    std::string config_path;
    uint64_t seed = 0;
    std::string out;

    // which flags the user actually passed (for config overrides + validation)
    std::map<std::string, bool> given;
};

void run_generate(const GenerateArgs& a) {
    std::string model = a.model;
    // flag/model compatibility
    if (a.given.at("gamma") && model != "heaviside")
        usage_error("--gamma is the Heaviside cutoff; use --model heaviside");
    if (a.given.at("rescale") && model != "heaviside")
        usage_error("--rescale applies to the heaviside model only");
    if ((a.given.at("kbar") || a.given.at("gamma-pl")) && model != "krioukov")
        usage_error("--kbar/--gamma-pl apply to the krioukov model only");
    if ((a.given.at("graphon") || a.given.at("p")) && model != "graphon")
        usage_error("--graphon/--p apply to the graphon model only");
    if (a.given.at("alpha") && (model == "heaviside" || model == "krioukov" || model == "graphon"))
        usage_error("--alpha (logit intercept) does not apply to model " + model);

    std::string kernel = a.kernel;
    if (model.rfind("kernel:", 0) == 0) {
        kernel = model.substr(7);
        model = "kernel";
    }

    json params{{"model", model}, {"n", a.n}};
    GraphHandle graph;
    std::optional<double> solved_radius;

    if (model == "krioukov" && a.config_path.empty()) {
        double radius = 0.0;
        check(clsnet_generate_krioukov(a.n, a.kbar, a.gamma_pl, a.temperature, a.seed, &graph.g,
                                       &radius),
              "generate");
        solved_radius = radius;
        params["kbar"] = a.kbar;
        params["gamma_pl"] = a.gamma_pl;
        params["T"] = a.temperature;
        params["solved_radius"] = radius;
    } else {
        std::ostringstream config;
        if (!a.config_path.empty()) {
            std::ifstream in(a.config_path);
            if (!in) throw CliError(CLSNET_ERR_IO, "cannot open config: " + a.config_path);
            config << in.rdbuf() << "\n";
            params["config"] = a.config_path;
            params["config_sha256"] = file_sha256(a.config_path);
        }
        auto set = [&](const std::string& key, const std::string& value, bool provided) {
            if (provided) {
                config << key << " = " << value << "\n";
                params[key == "T" ? "T" : key] = value;
            }
        };
        auto num = [](double v) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            return std::string(buf);
        };
        set("model", model, a.given.at("model") || a.config_path.empty());
        set("geometry", a.geometry, a.given.at("geometry"));
        set("n", std::to_string(a.n), a.given.at("n"));
        set("radius", num(a.radius), a.given.at("radius"));
        set("alpha", num(a.alpha), a.given.at("alpha"));
        set("gamma", num(a.gamma), a.given.at("gamma"));
        set("rescale", a.rescale ? "1" : "0", a.given.at("rescale"));
        set("kbar", num(a.kbar), a.given.at("kbar"));
        set("gamma_pl", num(a.gamma_pl), a.given.at("gamma-pl"));
        set("T", num(a.temperature), a.given.at("T"));
        set("graphon", a.graphon, a.given.at("graphon"));
        set("p", num(a.p), a.given.at("p"));
        set("kernel", kernel, !kernel.empty());
        set("t", std::to_string(a.t), a.given.at("t"));
        set("zeta", num(a.zeta), a.given.at("zeta"));
        set("branching", std::to_string(a.branching), a.given.at("branching"));
        set("depth", std::to_string(a.depth), a.given.at("depth"));
        check(clsnet_generate_from_config(config.str().c_str(), a.seed, &graph.g), "generate");
    }

    check(clsnet_graph_write_edge_list(graph.g, a.out.c_str()), "writing " + a.out);
    std::cout << "n = " << clsnet_graph_node_count(graph.g)
              << ", edges = " << clsnet_graph_edge_count(graph.g);
    if (solved_radius) std::cout << ", R = " << *solved_radius;
    std::cout << "\n";
    write_manifest(a.out, "generate", params, a.seed, {a.out});
}

// --- baseline -------------------------------------------------------------------

struct BaselineArgs {
    std::string kind = "er";
    uint32_t n = 0;
    double p = 0.1;
    uint32_t m = 4;
    uint32_t k = 2;
    double beta = 0.0;
    uint64_t seed = 0;
    std::string out;
};

void run_baseline(const BaselineArgs& a) {
    GraphHandle graph;
    check(clsnet_generate_baseline(a.kind.c_str(), a.n, a.p, a.m, a.k, a.beta, a.seed, &graph.g),
          "baseline");
    check(clsnet_graph_write_edge_list(graph.g, a.out.c_str()), "writing " + a.out);
    std::cout << "n = " << clsnet_graph_node_count(graph.g)
              << ", edges = " << clsnet_graph_edge_count(graph.g) << "\n";
    json params{{"kind", a.kind}, {"n", a.n}};
    if (a.kind == "er") params["p"] = a.p;
    if (a.kind == "ba") params["m"] = a.m;
    if (a.kind == "ws" || a.kind == "lattice") params["k"] = a.k;
    if (a.kind == "ws") params["beta"] = a.beta;
    write_manifest(a.out, "baseline", params, a.seed, {a.out});
}

// --- sweep ----------------------------------------------------------------------

struct SweepArgs {
    std::vector<std::string> geometries{"euclidean", "hyperbolic", "spherical"};
    std::vector<double> radii;
    std::vector<uint32_t> n_values{20, 50, 100};
    uint32_t reps = 200;
    double gamma_start = 0.0;
    double gamma_stop = 1.0;
    double gamma_step = 0.2;
    uint64_t seed = 0;
    std::string out;
};

void run_sweep_cmd(const SweepArgs& a) {
    if (a.radii.size() != a.geometries.size())
        usage_error("--radii must list one radius per geometry");
    std::vector<clsnet_geometry> geoms;
    for (const auto& name : a.geometries) geoms.push_back(geometry_from(name));
    check(clsnet_run_sweep(geoms.data(), a.radii.data(), static_cast<uint32_t>(geoms.size()),
                           a.n_values.data(), static_cast<uint32_t>(a.n_values.size()), a.reps,
                           a.gamma_start, a.gamma_stop, a.gamma_step, a.seed, a.out.c_str()),
          "sweep");
    json params{{"geometries", a.geometries}, {"radii", a.radii},    {"n_values", a.n_values},
                {"reps", a.reps},             {"gamma_start", a.gamma_start},
                {"gamma_stop", a.gamma_stop}, {"gamma_step", a.gamma_step}};
    write_manifest(a.out, "sweep", params, a.seed, {a.out});
}

// --- spectrum ----------------------------------------------------------------------

struct SpectrumArgs {
    std::string edges;
    std::string out;
    std::string labels_out;
    uint32_t cap = 0;
    bool strict = false;
};

void run_spectrum(const SpectrumArgs& a) {
    GraphHandle graph;
    check(clsnet_graph_read_edge_list(a.edges.c_str(), a.strict ? 1 : 0, &graph.g),
          "reading " + a.edges);
    warn_parse_cleanups(graph);
    std::cout << "n = " << clsnet_graph_node_count(graph.g)
              << ", edges = " << clsnet_graph_edge_count(graph.g) << "\n";
    check(clsnet_graph_spectrum_csv(graph.g, a.out.c_str(), a.cap), "spectrum");
    std::vector<std::string> artifacts{a.out};
    if (!a.labels_out.empty()) {
        check(clsnet_graph_write_labels(graph.g, a.labels_out.c_str()), "writing labels");
        artifacts.push_back(a.labels_out);
    }
    json params{{"edges", a.edges},
                {"edges_sha256", file_sha256(a.edges)},
                {"n", clsnet_graph_node_count(graph.g)},
                {"cap", a.cap}};
    write_manifest(a.out, "spectrum", params, std::nullopt, artifacts);
}

// --- ensemble -----------------------------------------------------------------------

struct EnsembleArgs {
    std::string geometry = "euclidean";
    uint32_t n = 0;
    uint32_t reps = 100;
    double radius = 3.141592653589793;
    uint64_t seed = 0;
    std::string out;
};

void run_ensemble(const EnsembleArgs& a) {
    EnsembleHandle ens;
    check(clsnet_build_ensemble(geometry_from(a.geometry), a.n, a.reps, a.radius, a.seed, &ens.e),
          "ensemble");
    check(clsnet_ensemble_write_csv(ens.e, a.out.c_str()), "writing " + a.out);
    json params{{"geometry", a.geometry}, {"n", a.n}, {"reps", a.reps}, {"radius", a.radius}};
    write_manifest(a.out, "ensemble", params, a.seed, {a.out});
}

// --- compare -------------------------------------------------------------------------

struct CompareArgs {
    std::string edges;
    uint32_t reps = 100;
    double radius = 3.141592653589793;
    uint64_t seed = 0;
    std::string out = "scores.json";
    bool strict = false;
};

void run_compare(const CompareArgs& a) {
    GraphHandle graph;
    check(clsnet_graph_read_edge_list(a.edges.c_str(), a.strict ? 1 : 0, &graph.g),
          "reading " + a.edges);
    warn_parse_cleanups(graph);
    check(clsnet_compare(graph.g, a.reps, a.radius, a.seed, a.out.c_str()), "compare");
    std::ifstream scores(a.out);
    std::cout << scores.rdbuf();
    json params{{"edges", a.edges},
                {"edges_sha256", file_sha256(a.edges)},
                {"n", clsnet_graph_node_count(graph.g)},
                {"reps", a.reps},
                {"radius", a.radius}};
    write_manifest(a.out, "compare", params, a.seed, {a.out});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"clsnet: continuous latent space network models and Laplacian spectra"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(clsnet_version()));

    SampleArgs sample;
    auto* cmd_sample = app.add_subcommand("sample", "Sample latent positions in a geometry");
    cmd_sample->add_option("--geometry", sample.geometry)->required();
    cmd_sample->add_option("--n", sample.n)->required();
    cmd_sample->add_option("--radius", sample.radius);
    auto* sample_alpha = cmd_sample->add_option("--alpha", sample.alpha);
    cmd_sample->add_option("--branching", sample.branching);
    cmd_sample->add_option("--depth", sample.depth);
    cmd_sample->add_option("--seed", sample.seed)->required();
    cmd_sample->add_option("--out", sample.out)->required();
    cmd_sample->callback([&] {
        sample.alpha_given = sample_alpha->count() > 0;
        run_sample(sample);
    });

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "Generate a network from a CLS model");
    std::map<std::string, CLI::Option*> gen_opts;
    gen_opts["model"] = cmd_gen->add_option("--model", gen.model,
                                            "distance-logit|heaviside|krioukov|graphon|kernel:<name>");
    gen_opts["geometry"] = cmd_gen->add_option("--geometry", gen.geometry);
    gen_opts["n"] = cmd_gen->add_option("--n", gen.n);
    gen_opts["radius"] = cmd_gen->add_option("--radius", gen.radius);
    gen_opts["alpha"] = cmd_gen->add_option("--alpha", gen.alpha, "logit intercept");
    gen_opts["gamma"] = cmd_gen->add_option("--gamma", gen.gamma, "Heaviside cutoff");
    gen_opts["rescale"] = cmd_gen->add_flag("--rescale", gen.rescale,
                                            "rescale distances by the simulation maximum");
    gen_opts["kbar"] = cmd_gen->add_option("--kbar", gen.kbar, "target mean degree");
    gen_opts["gamma-pl"] = cmd_gen->add_option("--gamma-pl", gen.gamma_pl, "power-law exponent");
    gen_opts["T"] = cmd_gen->add_option("--T", gen.temperature, "temperature");
    gen_opts["graphon"] = cmd_gen->add_option("--graphon", gen.graphon, "constant|product");
    gen_opts["p"] = cmd_gen->add_option("--p", gen.p, "constant graphon level");
    gen_opts["t"] = cmd_gen->add_option("--t", gen.t, "latent dimension");
    gen_opts["zeta"] = cmd_gen->add_option("--zeta", gen.zeta, "ARD scale");
    gen_opts["branching"] = cmd_gen->add_option("--branching", gen.branching);
    gen_opts["depth"] = cmd_gen->add_option("--depth", gen.depth);
    cmd_gen->add_option("--config", gen.config_path, "declarative model config file");
    cmd_gen->add_option("--seed", gen.seed)->required();
    cmd_gen->add_option("--out", gen.out)->required();
    cmd_gen->callback([&] {
        if (gen.config_path.empty() && gen_opts.at("n")->count() == 0)
            usage_error("generate requires --n (or a config file that sets n)");
        for (const auto& [name, opt] : gen_opts) gen.given[name] = opt->count() > 0;
        run_generate(gen);
    });

    BaselineArgs base;
    auto* cmd_base = app.add_subcommand("baseline", "Classical generators: er|ba|ws|lattice");
    cmd_base->add_option("--kind", base.kind)->required();
    cmd_base->add_option("--n", base.n)->required();
    cmd_base->add_option("--p", base.p);
    cmd_base->add_option("--m", base.m);
    cmd_base->add_option("--k", base.k);
    cmd_base->add_option("--beta", base.beta);
    cmd_base->add_option("--seed", base.seed)->required();
    cmd_base->add_option("--out", base.out)->required();
    cmd_base->callback([&] { run_baseline(base); });

    SweepArgs sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "Heaviside gamma sweep across geometries");
    cmd_sweep->add_option("--geometries", sweep.geometries)->delimiter(',');
    cmd_sweep->add_option("--radii", sweep.radii)->delimiter(',')->required();
    cmd_sweep->add_option("--n-values", sweep.n_values)->delimiter(',');
    cmd_sweep->add_option("--reps", sweep.reps);
    cmd_sweep->add_option("--gamma-start", sweep.gamma_start);
    cmd_sweep->add_option("--gamma-stop", sweep.gamma_stop);
    cmd_sweep->add_option("--gamma-step", sweep.gamma_step);
    cmd_sweep->add_option("--seed", sweep.seed)->required();
    cmd_sweep->add_option("--out", sweep.out)->required();
    cmd_sweep->callback([&] { run_sweep_cmd(sweep); });

    SpectrumArgs spectrum;
    auto* cmd_spec = app.add_subcommand("spectrum", "Laplacian eigenvalue curve of a network");
    cmd_spec->add_option("--edges", spectrum.edges)->required();
    cmd_spec->add_option("--out", spectrum.out)->required();
    cmd_spec->add_option("--labels-out", spectrum.labels_out);
    cmd_spec->add_option("--cap", spectrum.cap, "dense eigensolver cap (default 5000)");
    cmd_spec->add_flag("--strict", spectrum.strict);
    cmd_spec->callback([&] { run_spectrum(spectrum); });

    EnsembleArgs ensemble;
    auto* cmd_ens = app.add_subcommand("ensemble", "Simulated eigenvalue-curve envelope");
    cmd_ens->add_option("--geometry", ensemble.geometry)->required();
    cmd_ens->add_option("--n", ensemble.n)->required();
    cmd_ens->add_option("--reps", ensemble.reps);
    cmd_ens->add_option("--radius", ensemble.radius);
    cmd_ens->add_option("--seed", ensemble.seed)->required();
    cmd_ens->add_option("--out", ensemble.out)->required();
    cmd_ens->callback([&] { run_ensemble(ensemble); });

    CompareArgs compare;
    auto* cmd_cmp = app.add_subcommand("compare", "Score observed network against geometry ensembles");
    cmd_cmp->add_option("--edges", compare.edges)->required();
    cmd_cmp->add_option("--reps", compare.reps);
    cmd_cmp->add_option("--radius", compare.radius);
    cmd_cmp->add_flag("--strict", compare.strict);
    cmd_cmp->add_option("--seed", compare.seed)->required();
    cmd_cmp->add_option("--out", compare.out);
    cmd_cmp->callback([&] { run_compare(compare); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err{{"error", {{"code", 64}, {"kind", "usage"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 64;
    } catch (const CliError& e) {
        json err{{"error", {{"code", e.exit_code}, {"kind", "runtime"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return e.exit_code == 0 ? 1 : e.exit_code;
    } catch (const std::exception& e) {
        json err{{"error", {{"code", 1}, {"kind", "internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
