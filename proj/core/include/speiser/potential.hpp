#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "speiser/oracle.hpp"

namespace speiser {

using BigRational = boost::multiprecision::cpp_rational;

// Unit-conductance multigraph on local indices 0..n-1.
struct Network {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

Network network_of(const RotationGraph& g);

enum class SolverMode { Auto, ExactRational, Iterative };

struct SolverOptions {
    SolverMode mode = SolverMode::Auto;
    std::size_t exact_limit = 2000;  // Auto uses exact elimination up to this many vertices
    double tolerance = 1e-10;
    int max_iterations = 200000;
};

struct ResistanceResult {
    double value = 0;
    std::optional<BigRational> exact;
    double residual = 0;
    SolverMode mode = SolverMode::Iterative;
    int iterations = 0;
};

// Effective resistance between two vertex sets, each shorted to a single node.
ResistanceResult resistance_between(const Network& net, const std::vector<std::uint32_t>& sources,
                                    const std::vector<std::uint32_t>& sinks, const SolverOptions& opt = {});

// Center to the shorted ball boundary; to the outer sphere when the ball
// exhausts a finite graph.
ResistanceResult effective_resistance(const Ball& b, const SolverOptions& opt = {});

// Center to the shorted set of vertices at distance exactly radius.
ResistanceResult resistance_to_sphere(const GraphOracle& g, VertexId center, int radius, const SolverOptions& opt = {},
                                      std::size_t budget = default_vertex_budget());

struct ResistanceEntry {
    int radius = 0;
    double resistance = 0;
    double residual = 0;
    std::size_t vertices = 0;
};

struct ResistanceProfile {
    VertexId center = 0;
    SolverMode mode = SolverMode::Iterative;
    std::vector<ResistanceEntry> entries;
};

ResistanceProfile resistance_profile(const GraphOracle& g, VertexId center, const std::vector<int>& radii,
                                     const SolverOptions& opt = {}, std::size_t budget = default_vertex_budget());

enum class GraphType { Parabolic, Hyperbolic, Inconclusive };
const char* type_name(GraphType t);

struct ClassifierConfig {
    double ratio_threshold = 0.85;
    int ratio_window = 4;
    double r2_threshold = 0.98;
    double harmonic_min = 0.02;  // floor for increment * r / dr in the harmonic test
};

struct Classification {
    GraphType type = GraphType::Inconclusive;
    std::vector<double> increments;
    std::vector<double> ratios;
    double log_slope = 0;
    double log_intercept = 0;
    double log_r2 = 0;
    std::vector<double> harmonic;  // increment * r / dr, tends to a constant for R ~ c log r
    std::string reason;
};

Classification classify_type(const std::vector<std::pair<double, double>>& radius_value,
                             const ClassifierConfig& cfg = {});
Classification classify_type(const ResistanceProfile& p, const ClassifierConfig& cfg = {});

// Extremal length of the family of paths joining two vertex sets, with the
// convention lambda = effective resistance.
ResistanceResult extremal_length(const Network& net, const std::vector<std::uint32_t>& sources,
                                 const std::vector<std::uint32_t>& targets, const SolverOptions& opt = {});

struct DensityEdge {
    std::uint32_t u = 0, v = 0;
    double mu = 0;
    std::uint64_t key = 0;  // global edge identity, used for disjointness
};

struct DensityAssignment {
    std::size_t n = 0;
    std::vector<DensityEdge> edges;
    std::vector<std::uint32_t> sources, targets;
    std::string label;
};

struct AdmissibilityResult {
    bool ok = false;
    double min_weight = 0;
    std::vector<std::size_t> witness;  // edge indices of a lightest path
};

AdmissibilityResult check_admissible(const DensityAssignment& d);

struct AnnulusBound {
    std::string label;
    double min_weight = 0;  // c, before rescaling
    double energy = 0;      // sum of mu^2 before rescaling
    double lambda = 0;      // c^2 / energy
    double cumulative = 0;
};

std::vector<AnnulusBound> annuli_lower_bound(const std::vector<DensityAssignment>& annuli);

// Directed edge key: the half-edge with the smaller (vertex, slot) pair.
struct EdgeKey {
    VertexId u = 0;
    int slot = 0;
    auto operator<=>(const EdgeKey&) const = default;
};
EdgeKey edge_key(const GraphOracle& g, VertexId u, int slot);

struct Cutset {
    int radius = 0;  // separates the center from every vertex beyond this radius
    std::vector<EdgeKey> edges;
};

// Edges between distance layers r and r+1 for r = 0..max_radius-1.
std::vector<Cutset> level_cutsets(const GraphOracle& g, VertexId center, int max_radius,
                                  std::size_t budget = default_vertex_budget());

struct NashWilliamsResult {
    std::vector<double> partial_sums;
    Classification trend;
};

NashWilliamsResult nash_williams(const GraphOracle& g, VertexId center, const std::vector<Cutset>& cuts,
                                 const ClassifierConfig& cfg = {}, std::size_t budget = default_vertex_budget());
// Partial sums of 1/|C_i| without structural validation.
std::vector<double> nash_williams_sums(const std::vector<std::size_t>& sizes);

struct WalkStats {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    int radius = 0;
    std::size_t escaped = 0;
    double p_hat = 0;
    double sigma = 0;       // binomial standard error
    double half_width = 0;  // at the configured z
    double z = 1.96;
};

WalkStats random_walk_escape(const GraphOracle& g, VertexId center, int radius, std::size_t trials, std::uint64_t seed,
                             double z = 1.96, std::size_t budget = default_vertex_budget());

}  // namespace speiser
