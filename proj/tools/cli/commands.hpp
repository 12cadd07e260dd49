#pragma once

#include <string>

#include "run_config.hpp"

namespace speiser::cli {

// Flag values of every subcommand; each command reads the ones it declares.
struct Args {
    std::string vertex;
    int radius = 6;
    int n = 1;
    std::string format = "json";
    bool labels = false;
    int window = 4;
    std::string exhaustion = "balls";
    std::size_t trials = 100'000;
    double z = 1.96;
    int annuli = 8;
    double fine_base = 0.5;
    double coarse = 1.0;
    std::string bridge_density = "count";
    double bridge_base = 0.5;
    double h = 0.02;
    double r_max = 12;
    int stencil = 3;
    double margin = 1.0;
    int levels = 1;
    std::string in;
    int only = 0;
    bool quiet = false;
};

int run_generate(RunConfig& cfg, const Args& a);
int run_excess(RunConfig& cfg, const Args& a);
int run_mean_excess(RunConfig& cfg, const Args& a);
int run_extend(RunConfig& cfg, const Args& a);
int run_resistance(RunConfig& cfg, const Args& a);
int run_classify(RunConfig& cfg, const Args& a);
int run_walk(RunConfig& cfg, const Args& a);
int run_annuli_bound(RunConfig& cfg, const Args& a);
int run_nash_williams(RunConfig& cfg, const Args& a);
int run_curvature(RunConfig& cfg, const Args& a);
int run_export(RunConfig& cfg, const Args& a);
int run_repro(RunConfig& cfg, const Args& a);

}  // namespace speiser::cli
