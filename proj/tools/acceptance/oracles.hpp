#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "speiser/potential.hpp"

// Reference computations that share no code with the library solvers.
namespace speiser::acceptance {

struct PathFamilyResult {
    double lambda = 0.0;  // 1 / minimal energy
    std::size_t paths = 0;
    std::size_t sweeps = 0;
    bool converged = false;
};

// Extremal length of the source-target path family by brute force: enumerate
// every simple path, then minimise sum mu^2 subject to weight >= 1 on each path
// with Hildreth's row-action method.  Paths stop at the first target reached and
// never revisit a source.
PathFamilyResult brute_force_extremal_length(const Network& net, const std::vector<std::uint32_t>& sources,
                                             const std::vector<std::uint32_t>& targets,
                                             std::size_t max_paths = 2'000'000);

struct SeriesInstance {
    Network whole;
    std::vector<std::uint32_t> first, last;  // terminal sets of the whole network
    struct Part {
        Network net;
        std::vector<std::uint32_t> in, out;
    };
    std::vector<Part> parts;
    bool pure_chain = false;  // every junction is a single vertex
};

// Parts are glued in sequence along junction vertex sets; each part is a random
// connected multigraph on its two junction sets plus a few interior vertices.
SeriesInstance random_series_network(std::mt19937_64& rng, bool pure_chain, std::size_t max_edges = 50);

struct RandomInstance {
    Network net;
    std::vector<std::uint32_t> sources, targets;
};

RandomInstance random_connected_instance(std::mt19937_64& rng, std::size_t max_edges = 24);

// Largest radius whose ball around the seed has at most budget vertices.
int affordable_radius(const GraphOracle& g, std::size_t budget, int max_radius);

}  // namespace speiser::acceptance
