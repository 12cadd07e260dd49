#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "acceptance.hpp"
#include "speiser/curvature.hpp"
#include "speiser/export.hpp"
#include "speiser/extension.hpp"
#include "speiser/generators.hpp"

namespace speiser::cli {

namespace {

using nlohmann::ordered_json;

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw Error(ErrorCode::BadArgument, "cannot write " + path);
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    bool to_file() const { return file_ != nullptr; }

private:
    std::unique_ptr<std::ofstream> file_;
};

Family resolve_family(const RunConfig& cfg) {
    if (cfg.family.empty()) throw Error(ErrorCode::BadArgument, "--graph is required");
    const std::string tag = cfg.family == "appendixA" ? "appendix-a" : cfg.family;
    if (cfg.extended <= 0) return make_family(tag, cfg.params);
    auto params = cfg.params;
    params["base"] = tag;
    params["n"] = std::to_string(cfg.extended);
    return make_family("extended", params);
}

VertexId parse_vertex(const std::string& s, const GraphOracle& g) {
    if (s.empty()) return g.seed();
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(ErrorCode::BadArgument, "vertex ids are decimal integers: " + s);
    return static_cast<VertexId>(v);
}

// Graph JSON with the run configuration as its first member.
void write_json_with_config(std::ostream& os, const RunConfig& cfg, const std::string& body) {
    ordered_json doc = ordered_json::parse(body);
    ordered_json out;
    out["run_config"] = cfg.to_json();
    if (cfg.timestamp) out["timestamp"] = utc_timestamp();
    for (auto& [k, v] : doc.items()) out[k] = v;
    os << out.dump(1) << '\n';
}

int export_ball(RunConfig& cfg, const Args& a, bool validate) {
    Family f = resolve_family(cfg);
    const GraphOracle& g = *f.oracle;
    cfg.extra["radius"] = a.radius;
    cfg.extra["format"] = a.format;
    if (a.labels) cfg.extra["labels"] = true;
    std::optional<SpeiserGraph> sg;
    if (validate && f.q > 0) sg = validate_speiser_or_throw(f.oracle, f.q, a.radius);
    Ball b = ball(g, g.seed(), a.radius, cfg.vertex_budget);
    Output out(cfg.out);
    if (a.format == "dot") {
        write_header(out.stream(), cfg, "//");
        write_graph_dot(out.stream(), g, b);
        return 0;
    }
    if (a.format != "json") throw Error(ErrorCode::BadArgument, "format must be json or dot");
    Labeling labels;
    ExportOptions opt;
    opt.q = f.q;
    opt.family = cfg.extended > 0 ? g.name() : cfg.family;
    if (a.labels) {
        if (!sg) throw Error(ErrorCode::NotValidated, "face labels need a Speiser graph");
        std::vector<VertexId> region;
        for (std::size_t v = 0; v < b.size(); ++v) region.push_back(b.subgraph.id(v));
        labels = label_faces(g, region, f.q, Corner{g.seed(), 0}, 0, &sg->parity);
        opt.labels = &labels;
    }
    std::ostringstream body;
    write_graph_json(body, g, b, opt);
    write_json_with_config(out.stream(), cfg, body.str());
    return 0;
}

std::string face_list(const GraphOracle& g, VertexId v) {
    std::string s;
    const int deg = static_cast<int>(g.darts(v).size());
    for (int c = 0; c < deg; ++c) {
        FaceSize f = corner_face(g, v, c);
        s += (c ? ";" : "") + (f.infinite ? std::string("inf") : std::to_string(f.length));
    }
    return s;
}

}  // namespace

int run_generate(RunConfig& cfg, const Args& a) { return export_ball(cfg, a, true); }

int run_extend(RunConfig& cfg, const Args& a) {
    if (a.n < 1) throw Error(ErrorCode::BadArgument, "--n must be at least 1");
    cfg.extended = a.n;
    return export_ball(cfg, a, false);
}

int run_excess(RunConfig& cfg, const Args& a) {
    Family f = resolve_family(cfg);
    const GraphOracle& g = *f.oracle;
    const VertexId center = parse_vertex(a.vertex, g);
    cfg.extra["vertex"] = std::to_string(center);
    cfg.extra["radius"] = a.radius;
    BfsLayers layers = bfs_layers(g, center, a.radius, cfg.vertex_budget);
    Output out(cfg.out);
    std::ostream& os = out.stream();
    write_header(os, cfg);
    os << "vertex,distance,degree,faces,excess_num,excess_den,excess\n";
    Rational total = 0;
    for (int r = 0; r <= layers.radius; ++r) {
        const std::size_t lo = r == 0 ? 0 : layers.count_within(r - 1);
        for (std::size_t i = lo; i < layers.count_within(r); ++i) {
            VertexId v = layers.vertices[i];
            Rational e = excess(g, v);
            total += e;
            os << v << ',' << r << ',' << g.darts(v).size() << ',' << face_list(g, v) << ',' << e.numerator() << ','
               << e.denominator() << ',' << std::setprecision(12) << to_double(e) << '\n';
        }
    }
    os << "# total: " << total.numerator() << '/' << total.denominator() << " over " << layers.vertices.size()
       << " vertices\n";
    return 0;
}

int run_mean_excess(RunConfig& cfg, const Args& a) {
    Family f = resolve_family(cfg);
    const GraphOracle& g = *f.oracle;
    const std::vector<int> radii = integer_radii(cfg.radii);
    const int max_r = *std::max_element(radii.begin(), radii.end());
    cfg.extra["window"] = a.window;
    cfg.extra["exhaustion"] = a.exhaustion;
    MeanExcessProfile p;
    if (a.exhaustion == "hexagon") {
        auto hex = std::dynamic_pointer_cast<const TrHexagonOracle>(f.oracle);
        if (!hex) throw Error(ErrorCode::BadArgument, "hexagon exhaustion needs --graph tr-hexagon");
        p = mean_excess_over_layers(g, tr_hexagon_layers(*hex, max_r, cfg.vertex_budget), a.window);
    } else if (a.exhaustion == "balls") {
        p = mean_excess_profile(g, g.seed(), max_r, a.window, cfg.vertex_budget);
    } else {
        throw Error(ErrorCode::BadArgument, "exhaustion must be balls or hexagon");
    }
    const std::set<int> wanted(radii.begin(), radii.end());
    std::erase_if(p.records, [&](const MeanExcessRecord& r) { return !wanted.count(r.radius); });
    Output out(cfg.out);
    write_header(out.stream(), cfg);
    write_profile_csv(out.stream(), p);
    return 0;
}

namespace {

ResistanceProfile profile_of(RunConfig& cfg) {
    Family f = resolve_family(cfg);
    return resistance_profile(*f.oracle, f.oracle->seed(), integer_radii(cfg.radii), cfg.solver, cfg.vertex_budget);
}

}  // namespace

int run_resistance(RunConfig& cfg, const Args&) {
    ResistanceProfile p = profile_of(cfg);
    Output out(cfg.out);
    std::ostream& os = out.stream();
    write_header(os, cfg);
    os << "radius,resistance,residual,vertices\n" << std::setprecision(15);
    for (const auto& e : p.entries) os << e.radius << ',' << e.resistance << ',' << e.residual << ',' << e.vertices << '\n';
    os << "# solver: " << solver_mode_name(p.mode) << '\n';
    return 0;
}

int run_classify(RunConfig& cfg, const Args&) {
    ResistanceProfile p = profile_of(cfg);
    Classification c = classify_type(p);
    Output out(cfg.out);
    std::ostream& os = out.stream();
    write_header(os, cfg);
    os << "radius,resistance,increment,ratio,vertices\n" << std::setprecision(15);
    for (std::size_t k = 0; k < p.entries.size(); ++k) {
        os << p.entries[k].radius << ',' << p.entries[k].resistance << ',';
        if (k >= 1) os << c.increments[k - 1];
        os << ',';
        if (k >= 2) os << c.ratios[k - 2];
        os << ',' << p.entries[k].vertices << '\n';
    }
    os << "# log_fit: slope " << c.log_slope << " intercept " << c.log_intercept << " r2 " << c.log_r2 << '\n';
    os << "# classification: " << type_name(c.type) << " (" << c.reason << ")\n";
    if (out.to_file()) std::cout << type_name(c.type) << " (" << c.reason << ")\n";
    return 0;
}

int run_walk(RunConfig& cfg, const Args& a) {
    Family f = resolve_family(cfg);
    const GraphOracle& g = *f.oracle;
    cfg.extra["radius"] = a.radius;
    cfg.extra["trials"] = a.trials;
    cfg.extra["z"] = a.z;
    const double R = resistance_to_sphere(g, g.seed(), a.radius, cfg.solver, cfg.vertex_budget).value;
    WalkStats w = random_walk_escape(g, g.seed(), a.radius, a.trials, cfg.seed, a.z, cfg.vertex_budget);
    const double deg = static_cast<double>(g.darts(g.seed()).size());
    const double identity = w.p_hat * deg * R;
    Output out(cfg.out);
    std::ostream& os = out.stream();
    write_header(os, cfg);
    os << "radius,trials,escaped,p_hat,sigma,half_width,resistance,degree,identity,deviation_sigma\n"
       << std::setprecision(12) << w.radius << ',' << w.trials << ',' << w.escaped << ',' << w.p_hat << ',' << w.sigma
       << ',' << w.half_width << ',' << R << ',' << deg << ',' << identity << ','
       << (identity - 1) / (w.sigma * deg * R) << '\n';
    return 0;
}

int run_annuli_bound(RunConfig& cfg, const Args& a) {
    cfg.family = "gamma-star";
    GammaStarDensities d;
    d.fine_base = a.fine_base;
    d.coarse = a.coarse;
    d.bridge_base = a.bridge_base;
    if (a.bridge_density == "count") d.bridges = BridgeDensity::CountRule;
    else if (a.bridge_density == "height") d.bridges = BridgeDensity::Height;
    else throw Error(ErrorCode::BadArgument, "bridge density must be count or height");
    cfg.extra["annuli"] = a.annuli;
    cfg.extra["fine_base"] = a.fine_base;
    cfg.extra["coarse"] = a.coarse;
    cfg.extra["bridge_density"] = a.bridge_density;
    cfg.extra["bridge_base"] = a.bridge_base;
    if (a.annuli < 1 || a.annuli > GammaStarOracle::kMaxLevel - 1)
        throw Error(ErrorCode::BadArgument, "--annuli must be in 1.." + std::to_string(GammaStarOracle::kMaxLevel - 1));
    auto g = gen_gamma_star();
    std::vector<DensityAssignment> annuli;
    for (int i = 1; i <= a.annuli; ++i) annuli.push_back(gamma_star_annulus(*g, i, d));
    std::vector<AnnulusBound> bounds = annuli_lower_bound(annuli);
    Output out(cfg.out);
    std::ostream& os = out.stream();
    write_header(os, cfg);
    os << "annulus,label,vertices,edges,min_weight,energy,lambda,cumulative,r_lo,r_hi,log_r_hi\n" << std::setprecision(12);
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        const auto lo = g->join_position(static_cast<std::int64_t>(i) + 1);
        const auto hi = g->join_position(static_cast<std::int64_t>(i) + 2);
        os << i + 1 << ',' << bounds[i].label << ',' << annuli[i].n << ',' << annuli[i].edges.size() << ','
           << bounds[i].min_weight << ',' << bounds[i].energy << ',' << bounds[i].lambda << ',' << bounds[i].cumulative
           << ',' << lo << ',' << hi << ',' << std::log(static_cast<double>(hi)) << '\n';
    }
    return 0;
}

int run_nash_williams(RunConfig& cfg, const Args& a) {
    Family f = resolve_family(cfg);
    const GraphOracle& g = *f.oracle;
    cfg.extra["radius"] = a.radius;
    std::vector<Cutset> cuts = level_cutsets(g, g.seed(), a.radius, cfg.vertex_budget);
    NashWilliamsResult nw = nash_williams(g, g.seed(), cuts, {}, cfg.vertex_budget);
    Output out(cfg.out);
    std::ostream& os = out.stream();
    write_header(os, cfg);
    os << "radius,cut_size,partial_sum\n" << std::setprecision(12);
    for (std::size_t i = 0; i < cuts.size(); ++i)
        os << cuts[i].radius << ',' << cuts[i].edges.size() << ',' << nw.partial_sums[i] << '\n';
    if (nw.partial_sums.size() >= 5)
        os << "# trend: " << type_name(nw.trend.type) << " (" << nw.trend.reason << ")\n";
    return 0;
}

int run_curvature(RunConfig& cfg, const Args& a) {
    GridSpec spec;
    spec.h = a.h;
    spec.r_max = a.r_max;
    spec.stencil = a.stencil;
    spec.margin = a.margin;
    cfg.extra["h"] = a.h;
    cfg.extra["r_max"] = a.r_max;
    cfg.extra["stencil"] = a.stencil;
    cfg.extra["margin"] = a.margin;
    cfg.extra["levels"] = a.levels;
    for (double r : cfg.radii)
        if (r <= 0 || r > a.r_max) throw Error(ErrorCode::BadArgument, "radii must lie in (0, r_max]");
    std::vector<CurvatureReport> reports = curvature_refinement(spec, a.levels, cfg.radii);
    Output out(cfg.out);
    std::ostream& os = out.stream();
    write_header(os, cfg);
    for (const CurvatureReport& rep : reports) {
        if (reports.size() > 1) os << "# h=" << rep.h << " nodes=" << rep.nodes << '\n';
        write_curvature_csv(os, rep);
    }
    return 0;
}

int run_export(RunConfig& cfg, const Args& a) {
    if (a.in.empty()) return export_ball(cfg, a, false);
    cfg.extra["in"] = a.in;
    cfg.extra["format"] = a.format;
    std::ifstream is(a.in, std::ios::binary);
    if (!is) throw Error(ErrorCode::BadArgument, "cannot read " + a.in);
    ImportedGraph g = read_graph_json(is);
    Output out(cfg.out);
    if (a.format == "dot") {
        write_header(out.stream(), cfg, "//");
        write_graph_dot(out.stream(), g);
        return 0;
    }
    if (a.format != "json") throw Error(ErrorCode::BadArgument, "format must be json or dot");
    std::ostringstream body;
    write_graph_json(body, g);
    write_json_with_config(out.stream(), cfg, body.str());
    return 0;
}

int run_repro(RunConfig& cfg, const Args& a) {
    acceptance::Options opt;
    opt.seed = cfg.seed;
    opt.vertex_budget = cfg.vertex_budget;
    if (a.only) cfg.extra["only"] = a.only;
    Output out(cfg.out);
    std::ostream& os = out.stream();
    write_header(os, cfg);
    bool all = true;
    int passed = 0, run = 0;
    for (const auto& c : acceptance::criteria()) {
        if (a.only && c.id != a.only) continue;
        acceptance::CriterionResult r = acceptance::run_criterion(c.id, opt);
        acceptance::print_result(os, r, !a.quiet);
        os.flush();
        all = all && r.pass;
        passed += r.pass;
        ++run;
    }
    os << passed << '/' << run << " criteria passed\n";
    return all ? 0 : 1;
}

}  // namespace speiser::cli
