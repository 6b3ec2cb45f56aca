#include "qdcs/model_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace qdcs {

namespace {

[[noreturn]] void fail_line(const std::filesystem::path& path, size_t line, const std::string& msg) {
    throw Error(path.string() + ":" + std::to_string(line) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
    size_t h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

bool valid_id(const std::string& s) {
    return !s.empty() && s.find_first_of("[],#\"") == std::string::npos;
}

}  // namespace

ClosureModel load_graph_model(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model '" + path.string() + "'");

    bool symmetric = false, saw_header = false;
    std::vector<std::string> ids;
    std::map<std::string, uint32_t> index_of;
    std::vector<std::vector<std::string>> node_props;           // by node index
    std::vector<std::tuple<std::string, std::string, size_t>> edge_lines;  // id1, id2, line

    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        // Split off a [p1,p2,...] group first so prop lists may contain spaces.
        std::string props_part;
        size_t lb = line.find('[');
        if (lb != std::string::npos) {
            size_t rb = line.find(']', lb);
            if (rb == std::string::npos) fail_line(path, lineno, "missing ']'");
            props_part = line.substr(lb + 1, rb - lb - 1);
            if (line.find_first_not_of(" \t", rb + 1) != std::string::npos)
                fail_line(path, lineno, "trailing text after ']'");
            line = line.substr(0, lb);
        }
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) {
            if (lb != std::string::npos) fail_line(path, lineno, "proposition list without a node");
            continue;
        }
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "graph" || (tok[1] != "directed" && tok[1] != "symmetric"))
                fail_line(path, lineno, "expected 'graph directed' or 'graph symmetric'");
            symmetric = tok[1] == "symmetric";
            saw_header = true;
            continue;
        }
        if (tok[0] == "node") {
            if (tok.size() != 2) fail_line(path, lineno, "expected 'node <id> [props]'");
            if (!valid_id(tok[1])) fail_line(path, lineno, "bad node id '" + tok[1] + "'");
            if (index_of.count(tok[1])) fail_line(path, lineno, "duplicate node id '" + tok[1] + "'");
            index_of.emplace(tok[1], static_cast<uint32_t>(ids.size()));
            ids.push_back(tok[1]);
            std::vector<std::string> props;
            std::string p;
            std::istringstream ps(props_part);
            while (std::getline(ps, p, ',')) {
                // trim
                size_t b = p.find_first_not_of(" \t");
                size_t e = p.find_last_not_of(" \t");
                if (b == std::string::npos) fail_line(path, lineno, "empty proposition name");
                props.push_back(p.substr(b, e - b + 1));
            }
            node_props.push_back(std::move(props));
        } else if (tok[0] == "edge") {
            if (tok.size() != 3) fail_line(path, lineno, "expected 'edge <id1> <id2>'");
            if (lb != std::string::npos) fail_line(path, lineno, "edges take no proposition list");
            edge_lines.emplace_back(tok[1], tok[2], lineno);
        } else {
            fail_line(path, lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!saw_header) throw Error(path.string() + ": missing 'graph' header line");

    const uint32_t n = static_cast<uint32_t>(ids.size());
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(edge_lines.size());
    for (const auto& [a, b, ln] : edge_lines) {
        auto ia = index_of.find(a);
        auto ib = index_of.find(b);
        if (ia == index_of.end()) fail_line(path, ln, "edge references undeclared node '" + a + "'");
        if (ib == index_of.end()) fail_line(path, ln, "edge references undeclared node '" + b + "'");
        if (ia->second == ib->second) {
            if (warnings)
                warnings->push_back(path.string() + ":" + std::to_string(ln) +
                                    ": dropping self-loop on node '" + a + "'");
            continue;
        }
        edges.emplace_back(ia->second, ib->second);
    }

    std::map<std::string, PointSet> valuation;
    for (uint32_t i = 0; i < n; ++i)
        for (const std::string& p : node_props[i]) {
            auto [it, fresh] = valuation.try_emplace(p, PointSet(n));
            it->second.insert(i);
        }

    QuasiDiscreteSpace space = QuasiDiscreteSpace::from_edges(n, edges, symmetric, ids);
    return ClosureModel(std::move(space), std::move(valuation));
}

std::string serialize_graph_model(const ClosureModel& model) {
    const QuasiDiscreteSpace& space = model.space();
    const uint32_t n = space.point_count();
    auto label = [&](uint32_t i) {
        return space.has_labels() ? space.label(i) : std::to_string(i);
    };

    // Per-node sorted proposition lists; the valuation map is already sorted
    // by name.
    std::vector<std::vector<const std::string*>> props(n);
    for (const auto& [name, set] : model.valuation())
        set.for_each([&, nm = &name](uint32_t p) { props[p].push_back(nm); });

    std::ostringstream out;
    out << "graph directed\n";
    for (uint32_t i = 0; i < n; ++i) {
        out << "node " << label(i) << " [";
        for (size_t k = 0; k < props[i].size(); ++k) {
            if (k) out << ',';
            out << *props[i][k];
        }
        out << "]\n";
    }
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j : space.post(i)) out << "edge " << label(i) << ' ' << label(j) << '\n';
    return out.str();
}

ImageModel load_image_model(const std::filesystem::path& path, const Palette& palette,
                            const std::vector<MaskLayer>& masks) {
    PpmImage img = load_ppm(path);
    const uint32_t n = img.width * img.height;

    std::map<std::string, PointSet> valuation;
    // Every distinct color is addressable as a #rrggbb atom …
    for (uint32_t i = 0; i < n; ++i) {
        auto [it, fresh] = valuation.try_emplace(color_name(img.pixels[i]), PointSet(n));
        it->second.insert(i);
    }
    // … and palette entries give those sets readable names.
    for (const auto& [name, color] : palette) {
        PointSet s(n);
        for (uint32_t i = 0; i < n; ++i)
            if (img.pixels[i] == color) s.insert(i);
        if (!valuation.emplace(name, std::move(s)).second)
            throw Error("palette name '" + name + "' collides with an existing proposition");
    }
    for (const MaskLayer& m : masks) {
        PpmImage mask = load_ppm(m.path);
        if (mask.width != img.width || mask.height != img.height)
            throw Error("mask '" + m.path.string() + "' is " + std::to_string(mask.width) + "x" +
                        std::to_string(mask.height) + ", image is " + std::to_string(img.width) + "x" +
                        std::to_string(img.height));
        PointSet s(n);
        for (uint32_t i = 0; i < n; ++i)
            if (mask.pixels[i] != Rgb{0, 0, 0}) s.insert(i);
        if (!valuation.emplace(m.prop, std::move(s)).second)
            throw Error("mask proposition '" + m.prop + "' collides with an existing proposition");
    }

    ClosureModel model(build_grid_4adj(img.width, img.height), std::move(valuation));
    return {std::move(model), std::move(img)};
}

void save_overlay_image(const ImageModel& model, const std::vector<std::pair<PointSet, Rgb>>& layers,
                        const std::filesystem::path& path) {
    PpmImage out = model.image;
    const uint32_t n = out.width * out.height;
    for (const auto& [set, color] : layers) {
        if (set.universe_size() != n) throw Error("overlay layer does not fit the image");
        set.for_each([&](uint32_t p) { out.pixels[p] = color; });
    }
    save_ppm(path, out);
}

std::vector<AgentPosition> load_positions_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open positions '" + path.string() + "'");
    std::vector<AgentPosition> out;
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 4) fail_line(path, lineno, "expected 'column,row,x,y'");
        AgentPosition p;
        try {
            p.column = static_cast<uint32_t>(std::stoul(fields[0]));
            p.row = static_cast<uint32_t>(std::stoul(fields[1]));
            p.x = std::stod(fields[2]);
            p.y = std::stod(fields[3]);
        } catch (const std::exception&) {
            fail_line(path, lineno, "malformed number");
        }
        out.push_back(p);
    }
    return out;
}

ClosureModel build_multilayer_model(const ImageModel& image, const std::vector<AgentPosition>& positions,
                                    double delta, bool symmetrize_pos) {
    if (delta < 0) throw Error("multilayer delta must be >= 0");
    const uint32_t w = image.image.width, h = image.image.height;
    const uint32_t pixels = w * h;

    // Coordinate points: one per distinct (bit-equal) position, in
    // first-occurrence order. Keyed on the bit patterns, not double
    // comparison, so 0.0 and -0.0 stay distinct points.
    std::vector<std::pair<double, double>> coords;
    std::map<std::pair<uint64_t, uint64_t>, uint32_t> coord_index;
    std::vector<std::pair<uint32_t, uint32_t>> pos_edges;  // pixel -> coord point
    std::vector<char> pixel_used(pixels, 0);
    for (const AgentPosition& p : positions) {
        if (p.column >= w || p.row >= h)
            throw Error("position references pixel (" + std::to_string(p.column) + "," +
                        std::to_string(p.row) + ") outside the " + std::to_string(w) + "x" +
                        std::to_string(h) + " image");
        uint32_t pix = p.row * w + p.column;
        if (pixel_used[pix])
            throw Error("pixel (" + std::to_string(p.column) + "," + std::to_string(p.row) +
                        ") listed twice in positions");
        pixel_used[pix] = 1;
        auto [it, fresh] = coord_index.try_emplace(
            std::pair{std::bit_cast<uint64_t>(p.x), std::bit_cast<uint64_t>(p.y)},
            static_cast<uint32_t>(coords.size()));
        if (fresh) coords.emplace_back(p.x, p.y);
        pos_edges.emplace_back(pix, pixels + it->second);
    }
    const uint32_t nz = pixels + static_cast<uint32_t>(coords.size());

    std::vector<std::pair<uint32_t, uint32_t>> edges;
    const QuasiDiscreteSpace& grid = image.model.space();
    for (uint32_t x = 0; x < pixels; ++x)
        for (uint32_t y : grid.post(x)) edges.emplace_back(x, y);
    for (auto [pix, cp] : pos_edges) {
        edges.emplace_back(pix, cp);
        if (symmetrize_pos) edges.emplace_back(cp, pix);
    }
    // Communication links: coordinate points within delta, both directions.
    for (uint32_t i = 0; i < coords.size(); ++i)
        for (uint32_t j = i + 1; j < coords.size(); ++j) {
            double dx = coords[i].first - coords[j].first;
            double dy = coords[i].second - coords[j].second;
            if (dx * dx + dy * dy <= delta * delta) {
                edges.emplace_back(pixels + i, pixels + j);
                edges.emplace_back(pixels + j, pixels + i);
            }
        }

    std::map<std::string, PointSet> valuation;
    for (const auto& [name, set] : image.model.valuation()) {
        PointSet grown(nz);
        set.for_each([&](uint32_t p) { grown.insert(p); });
        valuation.emplace(name, std::move(grown));
    }
    PointSet coord_set(nz);
    for (uint32_t i = pixels; i < nz; ++i) coord_set.insert(i);
    if (!valuation.emplace("coord", std::move(coord_set)).second)
        throw Error("proposition 'coord' already taken; it is reserved for the coordinate layer");

    return ClosureModel(QuasiDiscreteSpace::from_edges(nz, edges, false), std::move(valuation));
}

}  // namespace qdcs
