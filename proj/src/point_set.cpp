#include "qdcs/point_set.hpp"

namespace qdcs {

PointSet& PointSet::operator|=(const PointSet& o) {
    check_same_universe(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    recount();
    return *this;
}

PointSet& PointSet::operator&=(const PointSet& o) {
    check_same_universe(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    recount();
    return *this;
}

PointSet& PointSet::operator-=(const PointSet& o) {
    check_same_universe(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    recount();
    return *this;
}

PointSet PointSet::complement() const {
    PointSet r(n_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    r.card_ = n_ - card_;
    return r;
}

bool PointSet::is_subset_of(const PointSet& o) const {
    check_same_universe(o);
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool PointSet::intersects(const PointSet& o) const {
    check_same_universe(o);
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

uint32_t PointSet::min_member() const {
    for (size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi])
            return static_cast<uint32_t>(wi * 64 + std::countr_zero(words_[wi]));
    return n_;
}

}  // namespace qdcs
