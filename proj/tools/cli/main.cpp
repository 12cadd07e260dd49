#include <cstring>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "speiser/oracle.hpp"

namespace {

using namespace speiser;
using namespace speiser::cli;

constexpr int kComputeError = 1;
constexpr int kUsageError = 2;

void report_error(bool as_json, const std::string& subcommand, const std::string& code, const std::string& message,
                  int exit_code) {
    if (as_json) {
        nlohmann::ordered_json j;
        j["error"] = code;
        j["message"] = message;
        j["subcommand"] = subcommand;
        j["exit_code"] = exit_code;
        std::cerr << j.dump() << '\n';
    } else {
        std::cerr << "speiser: " << message << '\n';
    }
}

struct Common {
    std::string graph;
    std::vector<std::string> params;
    int extended = 0;
    std::string radii;
    std::string solver = "auto";
    double tolerance = 1e-10;
    int max_iter = 200000;
    std::size_t exact_limit = 2000;
    std::uint64_t seed = 1;
    std::string out;
    std::size_t vertex_budget = 0;
    bool no_timestamp = false;
};

}  // namespace

int main(int argc, char** argv) {
    bool error_json = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--error-json") == 0) error_json = true;

    CLI::App app{"Speiser graphs, line complexes and type problems"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--error-json", error_json, "Print errors as one JSON object on stderr");

    Common c;
    c.vertex_budget = default_vertex_budget();
    Args a;
    std::map<CLI::App*, std::function<int(RunConfig&, const Args&)>> handlers;

    auto add = [&](const std::string& name, const std::string& help, auto handler) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--out,-o", c.out, "Output file (default stdout)");
        sub->add_option("--seed", c.seed, "Random seed");
        sub->add_option("--vertex-budget", c.vertex_budget,
                        "Maximum vertices per computation (default $SPEISER_VERTEX_BUDGET or 4000000)");
        sub->add_flag("--no-timestamp", c.no_timestamp, "Omit the timestamp header line");
        handlers[sub] = handler;
        return sub;
    };
    auto family = [&](CLI::App* sub) {
        sub->add_option("--graph,-g", c.graph, "Family tag, e.g. tr-hexagon, appendix-a");
        sub->add_option("--param,-p", c.params, "Family parameter key=value (repeatable)");
        sub->add_option("--extended", c.extended, "Use the extended graph with this n (0 = the graph itself)")
            ->check(CLI::NonNegativeNumber);
    };
    auto radii = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--radii", c.radii, "Radii: 2,4,8 or 4..40 or 4..40:4 or 2..128*2");
        if (required) o->required();
    };
    auto solver = [&](CLI::App* sub) {
        sub->add_option("--solver", c.solver, "auto, exact or iterative")
            ->check(CLI::IsMember({"auto", "exact", "iterative"}));
        sub->add_option("--tolerance", c.tolerance, "Iterative solver relative residual");
        sub->add_option("--max-iter", c.max_iter, "Iterative solver iteration cap");
        sub->add_option("--exact-limit", c.exact_limit, "Largest system solved exactly in auto mode");
    };
    auto shape = [&](CLI::App* sub, int default_radius) {
        a.radius = default_radius;
        sub->add_option("--radius,-r", a.radius, "Ball radius")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", a.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    };

    auto* gen = add("generate", "Export a ball of a generated family as graph JSON or DOT", run_generate);
    gen->add_option("family", c.graph, "Family tag")->required();
    gen->add_option("--param,-p", c.params, "Family parameter key=value (repeatable)");
    shape(gen, 6);
    gen->add_flag("--labels", a.labels, "Include face labels a1..aq");

    auto* exc = add("excess", "Excess of a vertex or of every vertex in a ball", run_excess);
    family(exc);
    exc->add_option("--vertex", a.vertex, "Vertex id (default the seed)");
    exc->add_option("--radius,-r", a.radius, "Ball radius")->check(CLI::NonNegativeNumber);

    auto* me = add("mean-excess", "Mean excess profile over balls or the hexagon exhaustion", run_mean_excess);
    family(me);
    radii(me, true);
    me->add_option("--window", a.window, "Subsequence window")->check(CLI::PositiveNumber);
    me->add_option("--exhaustion", a.exhaustion, "balls or hexagon")->check(CLI::IsMember({"balls", "hexagon"}));

    auto* ext = add("extend", "Export a ball of the extended graph", run_extend);
    family(ext);
    ext->add_option("--n", a.n, "Extension parameter n")->check(CLI::PositiveNumber);
    shape(ext, 6);

    auto* res = add("resistance", "Resistance from the seed to distance spheres", run_resistance);
    family(res);
    radii(res, true);
    solver(res);

    auto* cls = add("classify", "Classify the type from a resistance profile", run_classify);
    family(cls);
    radii(cls, true);
    solver(cls);

    auto* walk = add("walk", "Monte Carlo escape probability and the identity p*deg*R = 1", run_walk);
    family(walk);
    walk->add_option("--radius,-r", a.radius, "Sphere radius")->check(CLI::PositiveNumber);
    walk->add_option("--trials", a.trials, "Number of walks");
    walk->add_option("--z", a.z, "Confidence multiplier");
    solver(walk);

    auto* ann = add("annuli-bound", "Extremal length lower bound on the gamma-star annuli", run_annuli_bound);
    ann->add_option("--annuli", a.annuli, "Number of annuli");
    ann->add_option("--fine-base", a.fine_base, "Fine edges of annulus i get fine_base^i");
    ann->add_option("--coarse", a.coarse, "Density on coarse and join edges");
    ann->add_option("--bridge-density", a.bridge_density, "count or height")
        ->check(CLI::IsMember({"count", "height"}));
    ann->add_option("--bridge-base", a.bridge_base, "Base for the height rule");

    auto* nw = add("nash-williams", "Nash-Williams sums over distance-layer cutsets", run_nash_williams);
    family(nw);
    nw->add_option("--radius,-r", a.radius, "Largest cutset radius")->check(CLI::PositiveNumber);

    auto* cur = add("curvature", "Grid curvature report for the P/Q surface", run_curvature);
    radii(cur, false);
    cur->add_option("--spacing", a.h, "Grid spacing h, with 1/h an integer")->check(CLI::PositiveNumber);
    cur->add_option("--r-max", a.r_max, "Largest radius the window must hold")->check(CLI::PositiveNumber);
    cur->add_option("--stencil", a.stencil, "Stencil reach")->check(CLI::Range(1, 6));
    cur->add_option("--margin", a.margin, "Extra window room");
    cur->add_option("--levels", a.levels, "Refinement levels, coarse first")->check(CLI::Range(1, 6));

    auto* exp = add("export", "Convert graph JSON, or a family ball, to DOT or JSON", run_export);
    family(exp);
    exp->add_option("--in", a.in, "Graph JSON to read");
    shape(exp, 6);
    exp->get_option("--format")->default_str("dot");

    auto* rep = add("repro", "Run the acceptance criteria and print a pass/fail report", run_repro);
    rep->add_option("--only", a.only, "Run one criterion")->check(CLI::Range(1, 9));
    rep->add_flag("--quiet", a.quiet, "Omit detail lines");

    std::string subcommand;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error(error_json, "", "Usage", e.what(), kUsageError);
        if (!error_json) std::cerr << "run 'speiser --help' for usage\n";
        return kUsageError;
    }

    CLI::App* sub = app.get_subcommands().front();
    subcommand = sub->get_name();
    if (sub == exp && exp->count("--format") == 0) a.format = "dot";
    if (sub == exc && exc->count("--radius") == 0) a.radius = 0;
    RunConfig cfg;
    cfg.subcommand = subcommand;
    cfg.family = c.graph;
    cfg.extended = c.extended;
    cfg.seed = c.seed;
    cfg.out = c.out;
    cfg.vertex_budget = c.vertex_budget;
    cfg.timestamp = !c.no_timestamp;
    try {
        for (const std::string& kv : c.params) {
            auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::BadArgument, "--param needs key=value: " + kv);
            cfg.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        if (subcommand == "curvature" && c.radii.empty()) c.radii = "1.." + std::to_string(static_cast<int>(a.r_max));
        if (!c.radii.empty()) {
            cfg.radii_spec = c.radii;
            cfg.radii = parse_radii(c.radii);
        }
        cfg.solver.mode = parse_solver_mode(c.solver);
        cfg.solver.tolerance = c.tolerance;
        cfg.solver.max_iterations = c.max_iter;
        cfg.solver.exact_limit = c.exact_limit;
        if (cfg.vertex_budget == 0) throw Error(ErrorCode::BadArgument, "--vertex-budget must be positive");
        return handlers.at(sub)(cfg, a);
    } catch (const Error& e) {
        const bool usage = e.code() == ErrorCode::BadArgument || e.code() == ErrorCode::UnknownTag;
        const int code = usage ? kUsageError : kComputeError;
        report_error(error_json, subcommand, error_name(e.code()), e.what(), code);
        return code;
    } catch (const std::exception& e) {
        report_error(error_json, subcommand, "Internal", e.what(), kComputeError);
        return kComputeError;
    }
}
