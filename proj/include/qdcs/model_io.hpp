#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qdcs/ppm.hpp"
#include "qdcs/space.hpp"

namespace qdcs {

using Palette = std::vector<std::pair<std::string, Rgb>>;

// Text graph model:
//   graph directed|symmetric
//   node <id> [p1,p2,...]
//   edge <id1> <id2>
// with # comments. Node ids become space labels, in declaration order.
// Self-loops are dropped (reported through `warnings`).
ClosureModel load_graph_model(const std::filesystem::path& path,
                              std::vector<std::string>* warnings = nullptr);

// Canonical text form (always `graph directed`, nodes in index order, edges
// sorted): loading the output and re-serializing reproduces it byte for byte.
std::string serialize_graph_model(const ClosureModel& model);

struct MaskLayer {
    std::filesystem::path path;  // PPM of the same dimensions
    std::string prop;            // holds where the mask pixel is not black
};

// A pixel model keeps its source raster so results can be painted back over it.
struct ImageModel {
    ClosureModel model;
    PpmImage image;
};

// Space = 4-adjacency grid over the pixels; propositions = one per palette
// entry (exact color match), one `#rrggbb` literal per distinct color in the
// image, and one per mask layer.
ImageModel load_image_model(const std::filesystem::path& path, const Palette& palette,
                            const std::vector<MaskLayer>& masks = {});

// Writes the source image with each layer's points recolored, later layers
// painted over earlier ones.
void save_overlay_image(const ImageModel& model, const std::vector<std::pair<PointSet, Rgb>>& layers,
                        const std::filesystem::path& path);

// One agent position: the pixel that hosts the agent and its physical
// 2D position.
struct AgentPosition {
    uint32_t column = 0, row = 0;
    double x = 0, y = 0;
};

// CSV lines `column,row,x,y`; # comments and blank lines ignored.
std::vector<AgentPosition> load_positions_csv(const std::filesystem::path& path);

// Two-layer space: the image grid plus one coordinate point per distinct
// position (bit-equal positions merge; first-occurrence order). Edges are the
// grid 4-adjacency, a directed `pos` edge from each listed pixel to its
// coordinate point (reverse edges only with symmetrize_pos), and symmetric
// links between coordinate points at Euclidean distance <= delta. Coordinate
// points satisfy exactly the proposition `coord`.
ClosureModel build_multilayer_model(const ImageModel& image, const std::vector<AgentPosition>& positions,
                                    double delta, bool symmetrize_pos = false);

}  // namespace qdcs
