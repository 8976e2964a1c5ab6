#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"
#include "util.hpp"

namespace clsnet {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

} // namespace

ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options) {
    ParsedGraph out;
    std::unordered_map<std::string, uint32_t> ids;
    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.emplace(token, static_cast<uint32_t>(out.labels.size()));
        if (inserted) out.labels.push_back(token);
        return it->second;
    };

    std::vector<Edge> edges;
    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        if (body.find("->") != std::string::npos)
            throw_parse("line " + std::to_string(line_no) + ": directed edge markers are not supported");
        const auto tokens = split_ws(body);
        if (tokens.size() == 1) {
            intern(tokens[0]);
            continue;
        }
        if (tokens.size() != 2)
            throw_parse("line " + std::to_string(line_no) + ": expected one or two node tokens, got " +
                        std::to_string(tokens.size()));
        if (tokens[0] == tokens[1]) {
            if (options.strict)
                throw_parse("line " + std::to_string(line_no) + ": self-loop on node '" + tokens[0] + "'");
            intern(tokens[0]);
            ++out.self_loop_count;
            continue;
        }
        uint32_t u = intern(tokens[0]);
        uint32_t v = intern(tokens[1]);
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }

    std::sort(edges.begin(), edges.end());
    const auto unique_end = std::unique(edges.begin(), edges.end());
    out.duplicate_count = static_cast<uint32_t>(edges.end() - unique_end);
    if (out.duplicate_count > 0 && options.strict)
        throw_parse("duplicate edges present (strict mode)");
    edges.erase(unique_end, edges.end());

    out.graph = Graph::undirected(static_cast<uint32_t>(out.labels.size()), std::move(edges));
    return out;
}

ParsedGraph parse_edge_list_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) throw_io("cannot open edge list: " + path);
    return parse_edge_list(in, options);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    if (g.directed)
        throw_input("edge-list files are undirected; directed graphs stay in-memory");
    for (uint32_t v = 0; v < g.n; ++v) out << v << "\n";
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw_io("cannot open for writing: " + path);
    write_edge_list(g, out);
}

void write_positions_csv(std::span<const PolarPoint> points, std::ostream& out) {
    out << "node,r,phi\n";
    for (size_t i = 0; i < points.size(); ++i)
        out << i << "," << format_g17(points[i].r) << "," << format_g17(points[i].phi) << "\n";
}

void write_leaves_csv(std::span<const uint64_t> leaves, std::ostream& out) {
    out << "node,leaf\n";
    for (size_t i = 0; i < leaves.size(); ++i) out << i << "," << leaves[i] << "\n";
}

void write_curve_csv(const EigenCurve& curve, std::ostream& out) {
    out << "rank,value\n";
    for (size_t r = 0; r < curve.values.size(); ++r)
        out << (r + 1) << "," << format_g17(curve.values[r]) << "\n";
}

void write_ensemble_csv(const GeometryEnsemble& ensemble, std::ostream& out) {
    out << "rank,mean,min,max\n";
    for (uint32_t r = 0; r < ensemble.n; ++r)
        out << (r + 1) << "," << format_g17(ensemble.mean[r]) << "," << format_g17(ensemble.lo[r])
            << "," << format_g17(ensemble.hi[r]) << "\n";
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
    out << "geometry,n,gamma,stat,mean,min,max\n";
    for (const auto& row : rows)
        out << row.geometry << "," << row.n << "," << format_g(row.gamma, 6) << "," << row.stat
            << "," << format_g17(row.mean) << "," << format_g17(row.min) << ","
            << format_g17(row.max) << "\n";
}

void write_labels_csv(std::span<const std::string> labels, std::ostream& out) {
    out << "id,label\n";
    for (size_t i = 0; i < labels.size(); ++i) out << i << "," << labels[i] << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_io("cannot open for writing: " + path);
    out << contents;
}

// --- config ---------------------------------------------------------------------

ConfigMap parse_config(std::istream& in) {
    ConfigMap map;
    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw_parse("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty()) throw_parse("config line " + std::to_string(line_no) + ": empty key");
        map[key] = value;
    }
    return map;
}

ConfigMap parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_io("cannot open config: " + path);
    return parse_config(in);
}

std::vector<double> parse_number_list(const std::string& text) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    std::vector<double> out;
    double v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw_parse("malformed number list: " + text);
    return out;
}

std::vector<std::vector<double>> parse_matrix(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string row;
    while (std::getline(in, row, ';')) rows.push_back(parse_number_list(row));
    return rows;
}

namespace {

double get_number(const ConfigMap& map, const std::string& key, double fallback) {
    const auto it = map.find(key);
    if (it == map.end()) return fallback;
    try {
        size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw_parse("config key '" + key + "' is not a number: " + it->second);
    }
}

std::string get_string(const ConfigMap& map, const std::string& key, const std::string& fallback) {
    const auto it = map.find(key);
    return it == map.end() ? fallback : it->second;
}

bool get_flag(const ConfigMap& map, const std::string& key, bool fallback) {
    const auto it = map.find(key);
    if (it == map.end()) return fallback;
    if (it->second == "1" || it->second == "true") return true;
    if (it->second == "0" || it->second == "false") return false;
    throw_parse("config key '" + key + "' must be 0/1/true/false");
}

GeometrySpace space_from_config(const ConfigMap& map) {
    const std::string name = get_string(map, "geometry", "euclidean");
    const Geometry kind = geometry_from_name(name);
    if (kind == Geometry::Ultrametric) {
        const auto b = static_cast<uint32_t>(get_number(map, "branching", 2));
        const auto depth = static_cast<uint32_t>(get_number(map, "depth", 3));
        return GeometrySpace::ultrametric(b, depth);
    }
    return GeometrySpace{kind, {}};
}

} // namespace

GenerateRequest build_generate_request(const ConfigMap& config) {
    GenerateRequest req;
    req.model = get_string(config, "model", req.model);
    req.n = static_cast<uint32_t>(get_number(config, "n", 0));
    req.directed = get_flag(config, "directed", false);
    req.space = space_from_config(config);
    req.radius = get_number(config, "radius", req.radius);
    req.alpha = get_number(config, "alpha", req.alpha);
    req.gamma_cut = get_number(config, "gamma", req.gamma_cut);
    req.rescale = get_flag(config, "rescale", req.rescale);
    req.kbar = get_number(config, "kbar", req.kbar);
    req.gamma_pl = get_number(config, "gamma_pl", req.gamma_pl);
    req.temperature = get_number(config, "T", req.temperature);
    req.graphon = get_string(config, "graphon", req.graphon);
    req.graphon_p = get_number(config, "p", req.graphon_p);
    req.kernel = get_string(config, "kernel", req.kernel);
    req.t = static_cast<uint32_t>(get_number(config, "t", req.t));
    req.zeta = get_number(config, "zeta", req.zeta);
    req.latent = get_string(config, "latent", req.latent);
    if (const auto it = config.find("A"); it != config.end()) req.matrix = parse_matrix(it->second);
    if (const auto it = config.find("psi"); it != config.end())
        req.psi = parse_number_list(it->second);
    if (const auto it = config.find("mixture"); it != config.end()) {
        // component syntax: weight : mu1, mu2 : sigma  (components ';'-separated)
        std::istringstream in(it->second);
        std::string comp;
        while (std::getline(in, comp, ';')) {
            std::istringstream fields(comp);
            std::string w, mu, sigma;
            if (!std::getline(fields, w, ':') || !std::getline(fields, mu, ':') ||
                !std::getline(fields, sigma))
                throw_parse("mixture component must be weight:mu,...:sigma");
            MixtureComponent c;
            c.weight = parse_number_list(w).at(0);
            c.mean = parse_number_list(mu);
            c.sigma = parse_number_list(sigma).at(0);
            req.mixture.push_back(std::move(c));
        }
    }
    return req;
}

namespace {

std::vector<double> flatten_matrix(const std::vector<std::vector<double>>& rows, uint32_t dim) {
    if (rows.size() != dim) throw_input("kernel matrix must be square (t rows)");
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(dim) * dim);
    for (const auto& row : rows) {
        if (row.size() != dim) throw_input("kernel matrix must be square (t columns)");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

std::vector<double> identity_matrix(uint32_t dim) {
    std::vector<double> m(static_cast<size_t>(dim) * dim, 0.0);
    for (uint32_t i = 0; i < dim; ++i) m[static_cast<size_t>(i) * dim + i] = 1.0;
    return m;
}

GeneratedGraph generate_kernel_model(const GenerateRequest& req, uint64_t seed) {
    const KernelKind kind = kernel_from_name(req.kernel);
    const uint32_t n = req.n;

    SimilarityKernel kernel;
    uint32_t dim = req.t;
    switch (kind) {
        case KernelKind::Dot: kernel = SimilarityKernel::dot(); break;
        case KernelKind::Projection: kernel = SimilarityKernel::projection(); break;
        case KernelKind::Bilinear: kernel = SimilarityKernel::bilinear(); break;
        case KernelKind::Ard: kernel = SimilarityKernel::ard(req.zeta); break;
        case KernelKind::Quadratic:
            kernel = SimilarityKernel::quadratic(
                req.matrix.empty() ? identity_matrix(dim) : flatten_matrix(req.matrix, dim), dim);
            break;
        case KernelKind::Sbm: {
            if (req.matrix.empty()) throw_input("sbm kernel requires an A matrix in the config");
            dim = static_cast<uint32_t>(req.matrix.size());
            kernel = SimilarityKernel::sbm(flatten_matrix(req.matrix, dim), dim);
            break;
        }
        case KernelKind::Mmsbm: {
            if (req.matrix.empty()) throw_input("mmsbm kernel requires an A matrix in the config");
            dim = static_cast<uint32_t>(req.matrix.size());
            kernel = SimilarityKernel::mmsbm(flatten_matrix(req.matrix, dim), dim);
            break;
        }
        case KernelKind::NegativeDistance:
            kernel = SimilarityKernel::negative_distance(req.space);
            break;
        case KernelKind::DistanceWithEffects:
            kernel = SimilarityKernel::distance_with_effects(req.space);
            break;
    }

    // latent distribution: explicit, else the kernel's conventional default
    std::string latent = req.latent;
    if (latent.empty()) {
        switch (kind) {
            case KernelKind::Sbm: latent = "onehot"; break;
            case KernelKind::Mmsbm: latent = "dirichlet"; break;
            case KernelKind::NegativeDistance:
            case KernelKind::DistanceWithEffects: latent = "uniform-disk"; break;
            default: latent = "stdnormal"; break;
        }
    }

    GeneratedGraph out;
    LatentConfiguration config;
    if (latent == "stdnormal") {
        config = sample_latent_distribution(DistributionSpec::std_normal(), n, dim, seed);
    } else if (latent == "dirichlet") {
        auto psi = req.psi.empty() ? std::vector<double>(dim, 1.0) : req.psi;
        config = sample_latent_distribution(DistributionSpec::dirichlet(std::move(psi)), n, 0, seed);
    } else if (latent == "onehot") {
        auto psi = req.psi.empty() ? std::vector<double>(dim, 1.0 / dim) : req.psi;
        config = sample_latent_distribution(DistributionSpec::one_hot(std::move(psi)), n, 0, seed);
    } else if (latent == "uniform-disk") {
        if (req.space.kind == Geometry::Ultrametric) {
            out.leaves = sample_leaves(req.space, n, seed, 0);
            config = LatentConfiguration::from_leaves(out.leaves);
        } else {
            out.positions = sample_disk(DiskDomain::make(req.space, req.radius), n, seed, 0);
            config = LatentConfiguration::from_polar(out.positions);
        }
    } else if (latent == "quasi-uniform") {
        out.positions = sample_quasi_uniform(req.radius, req.alpha > 0 ? req.alpha : 1.0, n, seed);
        config = LatentConfiguration::from_polar(out.positions);
    } else if (latent == "mixture") {
        config = sample_latent_distribution(DistributionSpec::normal_mixture(req.mixture), n, 0, seed);
    } else {
        throw_input("unknown latent distribution: " + latent);
    }

    // per-node effects where the kernel needs them
    if (kind == KernelKind::Bilinear || kind == KernelKind::Ard ||
        kind == KernelKind::DistanceWithEffects) {
        Rng rng(seed, 0xeffec7ull);
        config.sender.resize(n);
        config.receiver.resize(n);
        for (auto& a : config.sender) a = rng.normal();
        for (auto& b : config.receiver) b = rng.normal();
    }

    const CLSModel model{std::move(kernel), Link::logit(req.alpha)};
    out.graph = generate_cls(model, config, substream_seed(seed, 0x9a17ull), req.directed);
    return out;
}

} // namespace

GeneratedGraph generate_from_request(const GenerateRequest& req, uint64_t seed) {
    if (req.n < 2) throw_input("generate: n must be >= 2");

    if (req.model == "distance-logit") {
        GeneratedGraph out;
        LatentConfiguration config;
        if (req.space.kind == Geometry::Ultrametric) {
            out.leaves = sample_leaves(req.space, req.n, seed, 0);
            config = LatentConfiguration::from_leaves(out.leaves);
        } else {
            out.positions = sample_disk(DiskDomain::make(req.space, req.radius), req.n, seed, 0);
            config = LatentConfiguration::from_polar(out.positions);
        }
        const CLSModel model{SimilarityKernel::negative_distance(req.space),
                             Link::logit(req.alpha)};
        out.graph = generate_cls(model, config, substream_seed(seed, 1));
        return out;
    }

    if (req.model == "heaviside") {
        if (req.rescale && (req.gamma_cut < 0.0 || req.gamma_cut > 1.0))
            throw_input("heaviside: rescaled gamma must lie in [0, 1]");
        GeneratedGraph out;
        if (req.space.kind == Geometry::Ultrametric) {
            out.leaves = sample_leaves(req.space, req.n, seed, 0);
        } else {
            out.positions = sample_disk(DiskDomain::make(req.space, req.radius), req.n, seed, 0);
        }
        const uint32_t n = req.n;
        std::vector<double> dist(static_cast<size_t>(n) * n, 0.0);
        double dmax = 0.0;
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j = i + 1; j < n; ++j) {
                const double d =
                    req.space.kind == Geometry::Ultrametric
                        ? static_cast<double>(leaf_distance(req.space, out.leaves[i], out.leaves[j]))
                        : distance(req.space, out.positions[i], out.positions[j]);
                dist[static_cast<size_t>(i) * n + j] = d;
                dmax = std::max(dmax, d);
            }
        }
        const double scale = req.rescale && dmax > 0.0 ? dmax : 1.0;
        std::vector<Edge> edges;
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = i + 1; j < n; ++j)
                if (req.gamma_cut - dist[static_cast<size_t>(i) * n + j] / scale >= 0.0)
                    edges.emplace_back(i, j);
        out.graph = Graph::undirected(n, std::move(edges));
        return out;
    }

    if (req.model == "krioukov") {
        const auto kri = generate_krioukov(req.n, req.kbar, req.gamma_pl, req.temperature, seed);
        GeneratedGraph out;
        out.graph = kri.graph;
        out.positions = kri.positions;
        out.krioukov_radius = kri.R;
        return out;
    }

    if (req.model == "graphon") {
        Graphon w;
        if (req.graphon == "constant") {
            const double p = req.graphon_p;
            w = [p](double, double) { return p; };
        } else if (req.graphon == "product") {
            w = [](double u, double v) { return u * v; };
        } else {
            throw_input("unknown graphon: " + req.graphon + " (expected constant|product)");
        }
        GeneratedGraph out;
        out.graph = sample_graphon(w, req.n, seed);
        return out;
    }

    if (req.model == "kernel") return generate_kernel_model(req, seed);

    throw_input("unknown model: " + req.model);
}

} // namespace clsnet
