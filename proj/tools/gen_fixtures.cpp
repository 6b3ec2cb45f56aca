// Regenerates the committed image fixtures. Run from the repository root:
//   gen-fixtures [output-dir]   (default tests/fixtures)
// Output is plain P3 so fixture diffs stay readable.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "qdcs/ppm.hpp"

using qdcs::PpmImage;
using qdcs::Rgb;

namespace {

constexpr Rgb kBlack{0x00, 0x00, 0x00};
constexpr Rgb kWhite{0xff, 0xff, 0xff};
constexpr Rgb kBlue{0x00, 0x00, 0xff};
constexpr Rgb kGreen{0x00, 0xff, 0x00};
constexpr Rgb kYellow{0xff, 0xff, 0x00};
constexpr Rgb kGray{0x80, 0x80, 0x80};

void write_p3(const std::filesystem::path& path, const PpmImage& img) {
    std::ofstream out(path);
    if (!out) throw qdcs::Error("cannot write '" + path.string() + "'");
    out << "P3\n" << img.width << ' ' << img.height << "\n255\n";
    for (uint32_t r = 0; r < img.height; ++r) {
        for (uint32_t c = 0; c < img.width; ++c) {
            Rgb p = img.at(c, r);
            out << int(p.r) << ' ' << int(p.g) << ' ' << int(p.b)
                << (c + 1 == img.width ? '\n' : ' ');
        }
    }
}

PpmImage from_art(const std::vector<std::string>& rows, const std::map<char, Rgb>& key) {
    PpmImage img;
    img.height = static_cast<uint32_t>(rows.size());
    img.width = static_cast<uint32_t>(rows.at(0).size());
    for (const std::string& r : rows)
        if (r.size() != img.width) throw qdcs::Error("ragged art rows");
    img.pixels.resize(size_t(img.width) * img.height);
    for (uint32_t r = 0; r < img.height; ++r)
        for (uint32_t c = 0; c < img.width; ++c) img.at(c, r) = key.at(rows[r][c]);
    return img;
}

// 11x11, white with two black-walled white holes. The left hole is the 2x2
// block (3..4, 3..4); the right hole is an L: column 6 rows 3..6 plus row 6
// columns 4..5. Asked points: (4,4) sits in the left hole; (6,4), (4,6) and
// (6,6) in the right one.
PpmImage two_holes() {
    PpmImage img;
    img.width = img.height = 11;
    img.pixels.assign(121, kWhite);
    std::vector<std::pair<int, int>> holes;
    for (int c = 3; c <= 4; ++c)
        for (int r = 3; r <= 4; ++r) holes.emplace_back(c, r);
    for (int r = 3; r <= 6; ++r) holes.emplace_back(6, r);
    for (int c = 4; c <= 5; ++c) holes.emplace_back(c, 6);

    auto is_hole = [&](int c, int r) {
        for (auto [hc, hr] : holes)
            if (hc == c && hr == r) return true;
        return false;
    };
    for (auto [c, r] : holes) {
        const int dc[] = {1, -1, 0, 0}, dr[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            int nc = c + dc[k], nr = r + dr[k];
            if (!is_hole(nc, nr)) img.at(nc, nr) = kBlack;
        }
    }
    return img;
}

const std::map<char, Rgb> kMazeKey = {
    {'#', kBlack}, {'.', kWhite}, {'B', kBlue}, {'G', kGreen}};

// Both 13x5 mazes share the layout: blue start rooms left and right, a green
// exit zone in the middle. In the connected variant the bottom corridor links
// the two sides; in the disconnected one every left-right path crosses green.
PpmImage maze_connected() {
    return from_art({"#############",
                     "#BB..G..BB###",
                     "#BB..G..BB###",
                     "#.........###",
                     "#############"},
                    kMazeKey);
}

PpmImage maze_disconnected() {
    return from_art({"#############",
                     "#BB..G..BB###",
                     "#BB..G..BB###",
                     "#....G....###",
                     "#############"},
                    kMazeKey);
}

// Disconnected layout plus a sealed blue pocket (top right) that cannot reach
// the exit: startCanExit must paint a strict subset of the blue points.
PpmImage maze_pockets() {
    return from_art({"#############",
                     "#BB..G..BB#B#",
                     "#BB..G..BB#B#",
                     "#....G....###",
                     "#############"},
                    kMazeKey);
}

// 3x2 evacuation raster: two yellow agents top left, two blue agents in the
// bottom corners, neutral gray elsewhere.
PpmImage evac() {
    return from_art({"yy_",
                     "u_u"},
                    {{'y', kYellow}, {'u', kBlue}, {'_', kGray}});
}

// Physical positions: the yellow pair is 1 apart (within the delta-1.5 radius
// of evac.spec); the blue pair is 9 apart, out of range.
const char* kEvacCsv =
    "# column,row,x,y\n"
    "0,0,0,0\n"
    "1,0,1,0\n"
    "0,1,0,5\n"
    "2,1,9,5\n";

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "tests/fixtures";
    try {
        std::filesystem::create_directories(dir);
        write_p3(dir / "two_holes_11x11.ppm", two_holes());
        write_p3(dir / "maze_connected.ppm", maze_connected());
        write_p3(dir / "maze_disconnected.ppm", maze_disconnected());
        write_p3(dir / "maze_pockets.ppm", maze_pockets());
        write_p3(dir / "evac_3x2.ppm", evac());
        std::ofstream csv(dir / "evac_coords.csv");
        csv << kEvacCsv;
        if (!csv) throw qdcs::Error("cannot write evac_coords.csv");
    } catch (const std::exception& e) {
        std::cerr << "gen-fixtures: " << e.what() << "\n";
        return 1;
    }
    std::cout << "fixtures written to " << dir.string() << "\n";
    return 0;
}
