#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace liardom {

// Fixed-width bitset sized at runtime. Verifiers use this so instances are
// not capped at 64 vertices (reductions of n=8 graphs routinely exceed that).
class BlockBitset {
public:
    BlockBitset() = default;
    explicit BlockBitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    int count_and(const BlockBitset& o) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // |(this | o) & d|
    int count_union_and(const BlockBitset& o, const BlockBitset& d) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount((words_[i] | o.words_[i]) & d.words_[i]);
        return c;
    }

    bool intersects(const BlockBitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int size() const { return nbits_; }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace liardom
