#pragma once

#include "posetcalc/diagram.hpp"

#include <cstdint>

namespace posetcalc {

/// Fixed-width bit vector; the value poset for subcomplex-valued diagrams.
struct BitVec {
    int width = 0;
    std::vector<std::uint64_t> words;

    BitVec() = default;
    explicit BitVec(int w) : width(w), words((w + 63) / 64, 0) {}

    bool get(int i) const { return (words[i / 64] >> (i % 64)) & 1; }
    void set(int i) { words[i / 64] |= 1ull << (i % 64); }

    int count() const {
        int c = 0;
        for (auto w : words) c += __builtin_popcountll(w);
        return c;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.width == b.width && a.words == b.words;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }
};

template <>
struct OrderedTraits<BitVec> {
    static BitVec join(const BitVec& a, const BitVec& b) {
        BitVec r = a;
        for (size_t i = 0; i < r.words.size(); ++i) r.words[i] |= b.words[i];
        return r;
    }
    static BitVec meet(const BitVec& a, const BitVec& b) {
        BitVec r = a;
        for (size_t i = 0; i < r.words.size(); ++i) r.words[i] &= b.words[i];
        return r;
    }
    static bool equal(const BitVec& a, const BitVec& b, const Rat&) { return a == b; }
};

} // namespace posetcalc
