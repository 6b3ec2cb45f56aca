#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qdcs/logic.hpp"
#include "qdcs/ppm.hpp"

namespace qdcs {

struct PaintCommand {
    IndividualFormula formula;
    Rgb color;
    std::string source;  // formula text as written
};

struct AskCommand {
    CollectiveFormula formula;
    bool has_at = false;
    std::vector<std::pair<int, int>> at_coords;  // (column,row), image models
    std::vector<std::string> at_ids;             // graph node ids
    std::string source;
};

// A query file:
//   let <id> = <formula> ;
//   prop <id> = #rrggbb ;
//   paint "<individual formula>" #rrggbb ;
//   ask "<collective formula>" [at (x,y),(x,y),... | at <node-id>...] ;
// with // comments. Macros substitute textually-parsed terms before
// desugaring and may only refer to earlier bindings; painted colors must be
// pairwise distinct.
struct SpecProgram {
    FormulaArena arena;
    MacroTable macros;
    std::vector<std::pair<std::string, Rgb>> palette;  // prop bindings, in order
    std::vector<PaintCommand> paints;
    std::vector<AskCommand> asks;
};

SpecProgram parse_spec_program(std::string_view text);
SpecProgram load_spec_program(const std::filesystem::path& path);

}  // namespace qdcs
