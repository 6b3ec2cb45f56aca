#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qdcs/error.hpp"

namespace qdcs {

struct Rgb {
    uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(Rgb, Rgb) = default;
    friend auto operator<=>(Rgb, Rgb) = default;
};

// Parses "#rrggbb" (hex, case-insensitive).
Rgb parse_color(std::string_view text);

// Lower-case "#rrggbb".
std::string color_name(Rgb c);

// Row-major pixel raster, row 0 at the top. Point (column,row) lives at
// index row*width + column.
struct PpmImage {
    uint32_t width = 0, height = 0;
    std::vector<Rgb> pixels;

    Rgb& at(uint32_t column, uint32_t row) { return pixels[size_t(row) * width + column]; }
    Rgb at(uint32_t column, uint32_t row) const { return pixels[size_t(row) * width + column]; }
};

// P3 or P6, maxval 255 only; header comments accepted.
PpmImage load_ppm(const std::filesystem::path& path);

// Always writes P6, so output bytes are deterministic.
void save_ppm(const std::filesystem::path& path, const PpmImage& image);

}  // namespace qdcs
