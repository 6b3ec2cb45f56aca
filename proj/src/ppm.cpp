#include "qdcs/ppm.hpp"

#include <cctype>
#include <fstream>

namespace qdcs {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// Skips whitespace and '#' comments between PPM header fields.
void skip_header_space(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (c != EOF && std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

uint64_t header_number(std::istream& in, const char* what) {
    skip_header_space(in);
    uint64_t value = 0;
    bool any = false;
    while (std::isdigit(in.peek())) {
        value = value * 10 + static_cast<uint64_t>(in.get() - '0');
        any = true;
        if (value > 1'000'000'000) throw Error(std::string("ppm: ") + what + " out of range");
    }
    if (!any) throw Error(std::string("ppm: missing ") + what);
    return value;
}

}  // namespace

Rgb parse_color(std::string_view text) {
    if (text.size() != 7 || text[0] != '#')
        throw Error("color must be #rrggbb, got '" + std::string(text) + "'");
    uint8_t v[3];
    for (int i = 0; i < 3; ++i) {
        int hi = hex_digit(text[1 + 2 * i]);
        int lo = hex_digit(text[2 + 2 * i]);
        if (hi < 0 || lo < 0)
            throw Error("color must be #rrggbb, got '" + std::string(text) + "'");
        v[i] = static_cast<uint8_t>(hi * 16 + lo);
    }
    return {v[0], v[1], v[2]};
}

std::string color_name(Rgb c) {
    static const char* digits = "0123456789abcdef";
    std::string s = "#......";
    uint8_t v[3] = {c.r, c.g, c.b};
    for (int i = 0; i < 3; ++i) {
        s[1 + 2 * i] = digits[v[i] >> 4];
        s[2 + 2 * i] = digits[v[i] & 15];
    }
    return s;
}

PpmImage load_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open image '" + path.string() + "'");

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || (m1 != '3' && m1 != '6'))
        throw Error("ppm: '" + path.string() + "' is not a P3/P6 pixmap");
    bool binary = m1 == '6';

    PpmImage img;
    img.width = static_cast<uint32_t>(header_number(in, "width"));
    img.height = static_cast<uint32_t>(header_number(in, "height"));
    if (img.width == 0 || img.height == 0) throw Error("ppm: zero-sized image");
    uint64_t maxval = header_number(in, "maxval");
    if (maxval != 255) throw Error("ppm: only maxval 255 is supported, got " + std::to_string(maxval));

    size_t count = size_t(img.width) * img.height;
    img.pixels.resize(count);
    if (binary) {
        int c = in.get();  // single whitespace separator after maxval
        if (c == EOF || !std::isspace(c)) throw Error("ppm: malformed P6 header");
        std::vector<char> raw(count * 3);
        in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
        if (static_cast<size_t>(in.gcount()) != raw.size()) throw Error("ppm: truncated pixel data");
        for (size_t i = 0; i < count; ++i)
            img.pixels[i] = {static_cast<uint8_t>(raw[3 * i]), static_cast<uint8_t>(raw[3 * i + 1]),
                             static_cast<uint8_t>(raw[3 * i + 2])};
    } else {
        for (size_t i = 0; i < count; ++i) {
            uint64_t v[3];
            for (auto& x : v) {
                x = header_number(in, "pixel sample");
                if (x > 255) throw Error("ppm: sample exceeds maxval");
            }
            img.pixels[i] = {static_cast<uint8_t>(v[0]), static_cast<uint8_t>(v[1]),
                             static_cast<uint8_t>(v[2])};
        }
    }
    return img;
}

void save_ppm(const std::filesystem::path& path, const PpmImage& image) {
    if (image.pixels.size() != size_t(image.width) * image.height)
        throw Error("ppm: pixel buffer does not match dimensions");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write image '" + path.string() + "'");
    out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
    std::vector<char> raw;
    raw.reserve(image.pixels.size() * 3);
    for (Rgb p : image.pixels) {
        raw.push_back(static_cast<char>(p.r));
        raw.push_back(static_cast<char>(p.g));
        raw.push_back(static_cast<char>(p.b));
    }
    out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (!out) throw Error("failed writing image '" + path.string() + "'");
}

}  // namespace qdcs
