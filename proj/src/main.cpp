#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdcs/run_spec.hpp"

namespace {

// "<left>:<right>" split at the last colon, so paths with colons survive.
bool split_colon(const std::string& s, std::string& left, std::string& right) {
    size_t p = s.rfind(':');
    if (p == std::string::npos || p == 0 || p + 1 == s.size()) return false;
    left = s.substr(0, p);
    right = s.substr(p + 1);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatial model checker for quasi-discrete closure spaces"};
    app.get_formatter()->column_width(34);

    qdcs::RunOptions opt;
    std::string model, spec, output, multilayer;
    std::vector<std::string> layers;

    app.add_option("--model", model, "Model file: PPM image (P3/P6) or graph text")->required();
    app.add_option("--spec", spec, "Query file with let/prop/paint/ask statements")->required();
    app.add_option("--output", output, "Overlay image written by paint commands on image models");
    app.add_flag("--verbose", opt.verbose, "Print worklist traces on stderr");
    app.add_option("--layers", layers, "Extra proposition from a mask image, as <mask.ppm>:<prop>")
        ->take_all();
    app.add_option("--multilayer", multilayer,
                   "Add a coordinate layer from agent positions, as <coords.csv>:<delta>");
    app.add_flag("--symmetrize-pos", opt.symmetrize_pos,
                 "Give position edges a pixel-ward reverse direction too");

    CLI11_PARSE(app, argc, argv);

    opt.model = model;
    opt.spec = spec;
    if (!output.empty()) opt.output = output;
    for (const std::string& s : layers) {
        std::string path, prop;
        if (!split_colon(s, path, prop)) {
            std::cerr << "error: --layers expects <mask.ppm>:<prop>, got '" << s << "'\n";
            return 2;
        }
        opt.layers.emplace_back(path, prop);
    }
    if (!multilayer.empty()) {
        std::string path, delta;
        double d = 0;
        bool ok = split_colon(multilayer, path, delta);
        if (ok) {
            try {
                size_t used = 0;
                d = std::stod(delta, &used);
                ok = used == delta.size();
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) {
            std::cerr << "error: --multilayer expects <coords.csv>:<delta>, got '" << multilayer
                      << "'\n";
            return 2;
        }
        opt.multilayer = qdcs::MultilayerOptions{path, d};
    }

    return qdcs::run_spec(opt, std::cout, std::cerr);
}
