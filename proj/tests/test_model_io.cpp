#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "qdcs/cslcs.hpp"
#include "qdcs/model_io.hpp"
#include "qdcs/slcs.hpp"

using namespace qdcs;
using qdcs::testing::fixture;
using qdcs::testing::set_of;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "qdcs-io-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
    std::filesystem::path p = temp_path(name);
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
}

std::string read_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename Fn>
void throws_with(Fn&& fn, const std::string& needle) {
    try {
        fn();
        FAIL_CHECK("expected an error mentioning '" << needle << "'");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK_MESSAGE(msg.find(needle) != std::string::npos,
                      "message '" << msg << "' lacks '" << needle << "'");
    }
}

void graph_error(const std::string& body, const std::string& needle) {
    std::filesystem::path p = write_file("bad.graph", body);
    throws_with([&] { load_graph_model(p); }, needle);
}

}  // namespace

TEST_CASE("graph loader reads the ten-node fixture") {
    std::vector<std::string> warnings;
    ClosureModel m = load_graph_model(fixture("paper_graph_10.graph"), &warnings);
    CHECK(warnings.empty());
    CHECK(m.space().point_count() == 10);
    CHECK(m.space().pair_count() == 30);  // 15 symmetric edges
    CHECK(m.space().is_symmetric());
    CHECK(m.space().label(7) == "7");
    CHECK(m.proposition("yellow") == set_of(10, {0, 1, 2, 8, 9}));
    CHECK(m.proposition("red") == set_of(10, {3, 4}));
    CHECK(m.proposition("white") == set_of(10, {5, 6}));
}

TEST_CASE("graph loader diagnostics carry the file position") {
    throws_with([] { load_graph_model("no/such/file.graph"); }, "cannot open model");
    graph_error("node a []\n", ":1: expected 'graph directed' or 'graph symmetric'");
    graph_error("# only a comment\n", "missing 'graph' header line");
    graph_error("graph directed\nnode a []\nnode a []\n", ":3: duplicate node id 'a'");
    graph_error("graph directed\nnode a []\nedge a b\n", ":3: edge references undeclared node 'b'");
    graph_error("graph directed\nnode a []\nedge b a\n", "undeclared node 'b'");
    graph_error("graph directed\nvertex a\n", ":2: unknown directive 'vertex'");
    graph_error("graph directed\nnode a,b\n", "bad node id 'a,b'");
    graph_error("graph directed\nnode a [p\n", ":2: missing ']'");
    graph_error("graph directed\nnode a [p] junk\n", "trailing text after ']'");
    graph_error("graph directed\nnode a []\nnode b []\nedge a b [p]\n",
                "edges take no proposition list");
    graph_error("graph directed\nedge a\n", "expected 'edge <id1> <id2>'");
    graph_error("graph directed\nnode a\nnode\n", "expected 'node <id> [props]'");
    graph_error("graph directed\n[p]\n", "proposition list without a node");
    graph_error("graph directed\nnode a [x,,y]\n", "empty proposition name");
}

TEST_CASE("graph loader warns about self-loops and drops them") {
    std::filesystem::path p =
        write_file("loop.graph", "graph directed\nnode a []\nnode b []\nedge a a\nedge a b\n");
    std::vector<std::string> warnings;
    ClosureModel m = load_graph_model(p, &warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find(":4: dropping self-loop on node 'a'") != std::string::npos);
    CHECK(m.space().pair_count() == 1);
}

TEST_CASE("graph loader accepts an empty node list") {
    ClosureModel m = load_graph_model(write_file("empty.graph", "graph directed\n"));
    CHECK(m.space().point_count() == 0);
    FormulaArena arena;
    CHECK(sat(m, arena, parse_individual(arena, "TT")).count() == 0);
}

TEST_CASE("symmetric header stores both directions") {
    ClosureModel m =
        load_graph_model(write_file("sym.graph", "graph symmetric\nnode a []\nnode b []\nedge a b\n"));
    CHECK(m.space().pair_count() == 2);
    CHECK(m.space().is_symmetric());
    std::string text = serialize_graph_model(m);
    CHECK(text.find("edge a b\n") != std::string::npos);
    CHECK(text.find("edge b a\n") != std::string::npos);
}

TEST_CASE("graph serialization is canonical and idempotent") {
    ClosureModel m = load_graph_model(fixture("paper_graph_10.graph"));
    std::string once = serialize_graph_model(m);
    CHECK(once.rfind("graph directed\n", 0) == 0);
    CHECK(once.find("node 0 [yellow]\n") != std::string::npos);
    CHECK(once.find("node 7 []\n") != std::string::npos);

    ClosureModel reloaded = load_graph_model(write_file("round.graph", once));
    CHECK(serialize_graph_model(reloaded) == once);
    CHECK(reloaded.space().pair_count() == 30);
    CHECK(reloaded.proposition("yellow") == m.proposition("yellow"));

    // Multiple propositions on one node serialize sorted by name.
    ClosureModel multi = load_graph_model(
        write_file("multi.graph", "graph directed\nnode n [zeta, alpha]\n"));
    CHECK(serialize_graph_model(multi).find("node n [alpha,zeta]\n") != std::string::npos);
}

TEST_CASE("color parsing and naming") {
    CHECK(parse_color("#ff8800") == Rgb{255, 136, 0});
    CHECK(parse_color("#FF8800") == Rgb{255, 136, 0});
    CHECK(color_name(Rgb{255, 136, 0}) == "#ff8800");
    CHECK(color_name(parse_color("#AbCdEf")) == "#abcdef");
    throws_with([] { parse_color("ff8800"); }, "color must be #rrggbb");
    throws_with([] { parse_color("#ff88"); }, "color must be #rrggbb");
    throws_with([] { parse_color("#ff88zz"); }, "color must be #rrggbb");
}

TEST_CASE("ppm loading handles both text and binary variants") {
    PpmImage p3 = load_ppm(fixture("evac_3x2.ppm"));
    CHECK(p3.width == 3);
    CHECK(p3.height == 2);
    CHECK(p3.at(0, 0) == Rgb{255, 255, 0});
    CHECK(p3.at(2, 0) == Rgb{128, 128, 128});
    CHECK(p3.at(0, 1) == Rgb{0, 0, 255});

    std::filesystem::path out = temp_path("evac_p6.ppm");
    save_ppm(out, p3);
    PpmImage p6 = load_ppm(out);
    CHECK(p6.width == p3.width);
    CHECK(p6.height == p3.height);
    CHECK(p6.pixels == p3.pixels);

    // Saving the reloaded image reproduces the bytes exactly.
    std::filesystem::path again = temp_path("evac_p6_again.ppm");
    save_ppm(again, p6);
    CHECK(read_bytes(again) == read_bytes(out));

    // Header comments are allowed in either variant.
    PpmImage commented =
        load_ppm(write_file("comment.ppm", "P3 # magic\n# size\n1 1\n255\n1 2 3\n"));
    CHECK(commented.pixels == std::vector<Rgb>{Rgb{1, 2, 3}});
}

TEST_CASE("ppm loading rejects malformed files") {
    throws_with([] { load_ppm("no/such/image.ppm"); }, "cannot open image");
    throws_with([] { load_ppm(write_file("bad1.ppm", "P2\n1 1\n255\n0\n")); },
                "not a P3/P6 pixmap");
    throws_with([] { load_ppm(write_file("bad2.ppm", "P3\n0 1\n255\n")); }, "zero-sized image");
    throws_with([] { load_ppm(write_file("bad3.ppm", "P3\n1 1\n65535\n0 0 0\n")); },
                "only maxval 255 is supported, got 65535");
    throws_with([] { load_ppm(write_file("bad4.ppm", "P3\n1 1\n255\n300 0 0\n")); },
                "sample exceeds maxval");
    throws_with([] { load_ppm(write_file("bad5.ppm", "P3\n1 1\n255\n0 0\n")); },
                "missing pixel sample");
    throws_with([] { load_ppm(write_file("bad6.ppm", std::string("P6\n2 2\n255\nabc"))); },
                "truncated pixel data");
    throws_with([] { load_ppm(write_file("bad7.ppm", "P3\n1 1\n")); }, "missing maxval");

    PpmImage broken{2, 2, {Rgb{}}};
    throws_with([&] { save_ppm(temp_path("bad_out.ppm"), broken); },
                "pixel buffer does not match dimensions");
}

TEST_CASE("image models key propositions on palette entries, literals, and masks") {
    Palette palette = {{"yellow", parse_color("#ffff00")}, {"blue", parse_color("#0000ff")}};
    ImageModel im = load_image_model(fixture("evac_3x2.ppm"), palette);
    const ClosureModel& m = im.model;
    CHECK(m.space().point_count() == 6);
    CHECK(m.space().pair_count() == 14);  // 7 grid adjacencies, both ways
    CHECK(m.proposition("yellow") == set_of(6, {0, 1}));
    CHECK(m.proposition("blue") == set_of(6, {3, 5}));
    CHECK(m.proposition("#ffff00") == set_of(6, {0, 1}));
    CHECK(m.proposition("#808080") == set_of(6, {2, 4}));
    CHECK(m.proposition("nothing") == PointSet(6));

    // A mask marks every non-black pixel.
    std::filesystem::path mask = write_file(
        "zone.ppm", "P3\n3 2\n255\n255 255 255 0 0 0 0 0 0 0 0 0 0 0 0 9 9 9\n");
    ImageModel masked = load_image_model(fixture("evac_3x2.ppm"), palette, {{mask, "zone"}});
    CHECK(masked.model.proposition("zone") == set_of(6, {0, 5}));

    std::filesystem::path small = write_file("small.ppm", "P3\n2 2\n255\n" +
                                                              std::string("0 0 0 ") +
                                                              "0 0 0 0 0 0 0 0 0\n");
    throws_with([&] { load_image_model(fixture("evac_3x2.ppm"), palette, {{small, "zone"}}); },
                "is 2x2, image is 3x2");
}

TEST_CASE("image model proposition collisions are rejected") {
    Palette clash = {{"#ffff00", parse_color("#123456")}};
    throws_with([&] { load_image_model(fixture("evac_3x2.ppm"), clash); },
                "palette name '#ffff00' collides");

    Palette twice = {{"a", parse_color("#ffff00")}, {"a", parse_color("#0000ff")}};
    throws_with([&] { load_image_model(fixture("evac_3x2.ppm"), twice); },
                "palette name 'a' collides");

    std::filesystem::path mask = write_file("collide.ppm", "P3\n3 2\n255\n" +
                                                               std::string("0 0 0 0 0 0 0 0 0 ") +
                                                               "0 0 0 0 0 0 0 0 0\n");
    Palette palette = {{"yellow", parse_color("#ffff00")}};
    throws_with([&] { load_image_model(fixture("evac_3x2.ppm"), palette, {{mask, "yellow"}}); },
                "mask proposition 'yellow' collides");
}

TEST_CASE("overlay saving recolors layer points in order") {
    ImageModel im = load_image_model(fixture("evac_3x2.ppm"), {});
    const uint32_t n = 6;

    std::filesystem::path plain = temp_path("overlay_plain.ppm");
    save_overlay_image(im, {}, plain);
    CHECK(load_ppm(plain).pixels == im.image.pixels);
    std::filesystem::path direct = temp_path("direct.ppm");
    save_ppm(direct, im.image);
    CHECK(read_bytes(plain) == read_bytes(direct));

    std::filesystem::path painted = temp_path("overlay_painted.ppm");
    save_overlay_image(
        im, {{PointSet::full(n), Rgb{200, 0, 0}}, {set_of(n, {0}), Rgb{0, 200, 0}}}, painted);
    PpmImage result = load_ppm(painted);
    CHECK(result.pixels[0] == Rgb{0, 200, 0});
    for (uint32_t i = 1; i < n; ++i) CHECK(result.pixels[i] == Rgb{200, 0, 0});

    throws_with([&] { save_overlay_image(im, {{PointSet(5), Rgb{}}}, temp_path("bad.ppm")); },
                "overlay layer does not fit the image");
}

TEST_CASE("positions csv") {
    std::vector<AgentPosition> ps = load_positions_csv(fixture("evac_coords.csv"));
    REQUIRE(ps.size() == 4);
    CHECK(ps[0].column == 0);
    CHECK(ps[0].row == 0);
    CHECK(ps[1].column == 1);
    CHECK(ps[1].x == 1.0);
    CHECK(ps[2].y == 5.0);
    CHECK(ps[3].column == 2);
    CHECK(ps[3].row == 1);
    CHECK(ps[3].x == 9.0);

    throws_with([] { load_positions_csv("no/such/file.csv"); }, "cannot open positions");
    throws_with([] { load_positions_csv(write_file("bad.csv", "1,2,3\n")); },
                ":1: expected 'column,row,x,y'");
    throws_with([] { load_positions_csv(write_file("bad2.csv", "1,2,three,4\n")); },
                "malformed number");
}

TEST_CASE("multilayer models join the grid, position, and communication layers") {
    Palette palette = {{"yellow", parse_color("#ffff00")}, {"blue", parse_color("#0000ff")}};
    ImageModel im = load_image_model(fixture("evac_3x2.ppm"), palette);
    std::vector<AgentPosition> ps = load_positions_csv(fixture("evac_coords.csv"));
    ClosureModel m = build_multilayer_model(im, ps, 5.0);
    const QuasiDiscreteSpace& s = m.space();
    const uint32_t pixels = 6;
    REQUIRE(s.point_count() == 10);  // 6 pixels + 4 distinct positions

    PointSet coord = m.proposition("coord");
    CHECK(coord == set_of(10, {6, 7, 8, 9}));

    // Image propositions survive, padded to the larger universe.
    CHECK(m.proposition("yellow") == set_of(10, {0, 1}));
    CHECK(m.proposition("blue") == set_of(10, {3, 5}));

    for (uint32_t cp = pixels; cp < 10; ++cp) {
        // Every coordinate point is the target of at least one position edge…
        bool has_pos = false;
        for (uint32_t q : s.pre(cp)) has_pos = has_pos || q < pixels;
        CHECK(has_pos);
        // …and never points back into the image layer.
        for (uint32_t q : s.post(cp)) CHECK(q >= pixels);
        // Coordinate points satisfy exactly `coord`.
        for (const auto& [name, set] : m.valuation())
            CHECK(set.contains(cp) == (name == "coord"));
    }

    // Positions (0,0), (1,0), (0,5), (9,5): within range 5 only the first
    // three pairs (0,0)-(1,0) and (0,0)-(0,5) are linked, symmetrically.
    auto linked = [&](uint32_t a, uint32_t b) {
        for (uint32_t q : s.post(a))
            if (q == b) return true;
        return false;
    };
    CHECK(linked(6, 7));
    CHECK(linked(7, 6));
    CHECK(linked(6, 8));
    CHECK(linked(8, 6));
    CHECK_FALSE(linked(7, 8));
    CHECK_FALSE(linked(8, 9));
    CHECK_FALSE(linked(6, 9));

    // The grouping query from the evacuation example: yellow agents can relay
    // through each other, the blue pair is out of range.
    FormulaArena arena;
    PointSet agents = sat(m, arena, parse_individual(arena, "coord & N (yellow | blue)"));
    CHECK(agents == set_of(10, {6, 7, 8, 9}));
    PointSet yellows = sat(m, arena, parse_individual(arena, "coord & N yellow"));
    CHECK(yellows == set_of(10, {6, 7}));
    PointSet blues = sat(m, arena, parse_individual(arena, "coord & N blue"));
    CHECK(blues == set_of(10, {8, 9}));
    CHECK(check_group(m, yellows, agents));
    CHECK_FALSE(check_group(m, blues, agents));
}

TEST_CASE("multilayer coordinate identity is bit-exact") {
    ImageModel im = load_image_model(fixture("evac_3x2.ppm"), {});

    // Same physical position twice: one coordinate point, two position edges.
    std::vector<AgentPosition> merged = {{0, 0, 2.5, 2.5}, {1, 0, 2.5, 2.5}};
    ClosureModel m1 = build_multilayer_model(im, merged, 1.0);
    CHECK(m1.space().point_count() == 7);
    CHECK(m1.space().pre(6).size() == 2);

    // 0.0 and -0.0 compare equal as doubles but are different bit patterns,
    // hence different points — at distance zero, so delta 0 still links them.
    std::vector<AgentPosition> zeros = {{0, 0, 0.0, 0.0}, {1, 0, -0.0, 0.0}};
    ClosureModel m2 = build_multilayer_model(im, zeros, 0.0);
    CHECK(m2.space().point_count() == 8);
    CHECK(m2.space().post(6).size() == 1);
    CHECK(m2.space().post(6)[0] == 7);
}

TEST_CASE("multilayer validation") {
    ImageModel im = load_image_model(fixture("evac_3x2.ppm"), {});

    // Distinct positions beyond reach: delta 0 leaves the layer edgeless.
    std::vector<AgentPosition> apart = {{0, 0, 0.0, 0.0}, {1, 0, 3.0, 0.0}};
    ClosureModel m = build_multilayer_model(im, apart, 0.0);
    CHECK(m.space().post(6).empty());
    CHECK(m.space().post(7).empty());

    // The reverse position edges appear only on request.
    ClosureModel sym = build_multilayer_model(im, apart, 0.0, true);
    CHECK(sym.space().post(6).size() == 1);
    CHECK(sym.space().post(6)[0] == 0);

    throws_with([&] { build_multilayer_model(im, apart, -1.0); }, "delta must be >= 0");
    std::vector<AgentPosition> dup = {{0, 0, 0.0, 0.0}, {0, 0, 1.0, 0.0}};
    throws_with([&] { build_multilayer_model(im, dup, 1.0); }, "pixel (0,0) listed twice");
    std::vector<AgentPosition> oob = {{3, 0, 0.0, 0.0}};
    throws_with([&] { build_multilayer_model(im, oob, 1.0); },
                "pixel (3,0) outside the 3x2 image");

    Palette reserved = {{"coord", parse_color("#ffff00")}};
    ImageModel im2 = load_image_model(fixture("evac_3x2.ppm"), reserved);
    throws_with([&] { build_multilayer_model(im2, apart, 1.0); },
                "'coord' already taken");
}
