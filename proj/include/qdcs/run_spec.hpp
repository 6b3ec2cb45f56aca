#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qdcs {

struct MultilayerOptions {
    std::filesystem::path coords_csv;
    double delta = 0;
};

struct RunOptions {
    std::filesystem::path model;
    std::filesystem::path spec;
    std::optional<std::filesystem::path> output;  // overlay target, image models
    bool verbose = false;
    std::vector<std::pair<std::filesystem::path, std::string>> layers;  // mask image : proposition
    std::optional<MultilayerOptions> multilayer;
    bool symmetrize_pos = false;
};

// Runs one spec against one model. The model file is sniffed: a P3/P6 header
// means an image (4-adjacency grid), anything else the graph text format.
// paint results go to the --output overlay for images and to stdout as
// `<paint-index> <node-id>` lines for graphs; each ask prints true/false.
// Returns the exit code: 0 = all asks true (or none), 1 = some ask false,
// 2 = any error (reported on `err`).
int run_spec(const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace qdcs
