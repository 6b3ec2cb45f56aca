#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "qdcs/error.hpp"

namespace qdcs {

// Dense indicator set over the points 0..universe_size()-1 of one space.
// Cardinality is kept cached; bulk algebra recomputes it during the word loop.
// Models reach ~10^6 points, so everything is word-parallel.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(uint32_t universe_size)
        : n_(universe_size), words_((universe_size + 63) / 64, 0) {}

    static PointSet full(uint32_t universe_size) {
        PointSet s(universe_size);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.trim();
        s.card_ = universe_size;
        return s;
    }

    uint32_t universe_size() const { return n_; }
    uint32_t count() const { return card_; }
    bool empty() const { return card_ == 0; }

    bool contains(uint32_t p) const {
        return p < n_ && (words_[p >> 6] >> (p & 63)) & 1;
    }

    void insert(uint32_t p) {
        check_point(p);
        uint64_t& w = words_[p >> 6];
        uint64_t bit = uint64_t{1} << (p & 63);
        if (!(w & bit)) {
            w |= bit;
            ++card_;
        }
    }

    void erase(uint32_t p) {
        check_point(p);
        uint64_t& w = words_[p >> 6];
        uint64_t bit = uint64_t{1} << (p & 63);
        if (w & bit) {
            w &= ~bit;
            --card_;
        }
    }

    PointSet& operator|=(const PointSet& o);
    PointSet& operator&=(const PointSet& o);
    PointSet& operator-=(const PointSet& o);

    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

    PointSet complement() const;

    bool operator==(const PointSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool is_subset_of(const PointSet& o) const;
    bool intersects(const PointSet& o) const;

    // Ascending member iteration.
    template <class F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                uint32_t bit = static_cast<uint32_t>(std::countr_zero(w));
                f(static_cast<uint32_t>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<uint32_t> to_vector() const {
        std::vector<uint32_t> v;
        v.reserve(card_);
        for_each([&](uint32_t p) { v.push_back(p); });
        return v;
    }

    // Smallest member; universe_size() when empty.
    uint32_t min_member() const;

private:
    void check_point(uint32_t p) const {
        if (p >= n_) throw Error("point " + std::to_string(p) + " out of range (universe " + std::to_string(n_) + ")");
    }
    void check_same_universe(const PointSet& o) const {
        if (n_ != o.n_) throw Error("point sets over different universes (" + std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
    }
    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }
    void recount() {
        uint64_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        card_ = static_cast<uint32_t>(c);
    }

    uint32_t n_ = 0;
    uint32_t card_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace qdcs
