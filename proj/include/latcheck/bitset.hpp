#pragma once

#include <bit>
#include <cassert>
#include <cstring>
#include <vector>

#include "latcheck/util.hpp"

namespace latcheck {

// Fixed-universe dynamic bitset over element or subgroup ids.
class bitset {
public:
    bitset() : nbits_(0) {}
    explicit bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::vector<u64>& words() const { return words_; }
    std::vector<u64>& words() { return words_; }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= u64(1) << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(u64(1) << (i & 63));
    }
    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void clear() { std::fill(words_.begin(), words_.end(), u64(0)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (u64 w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (u64 w : words_)
            if (w) return true;
        return false;
    }

    bool operator==(const bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const bitset& o) const { return !(*this == o); }

    bool is_subset_of(const bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bitset& operator&=(const bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    bitset& operator|=(const bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend bitset operator&(bitset a, const bitset& b) { return a &= b; }
    friend bitset operator|(bitset a, const bitset& b) { return a |= b; }

    // index of lowest set bit, or size() if none
    std::size_t first_set() const { return next_set(0); }
    // index of lowest set bit >= from, or size() if none
    std::size_t next_set(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t wi = from >> 6;
        u64 w = words_[wi] & (~u64(0) << (from & 63));
        while (true) {
            if (w) {
                std::size_t bit = (wi << 6) + std::size_t(std::countr_zero(w));
                return bit < nbits_ ? bit : nbits_;
            }
            if (++wi == words_.size()) return nbits_;
            w = words_[wi];
        }
    }
    // index of highest set bit; bitset must be nonempty
    std::size_t last_set() const {
        for (std::size_t wi = words_.size(); wi-- > 0;)
            if (words_[wi]) return (wi << 6) + 63 - std::size_t(std::countl_zero(words_[wi]));
        assert(false && "last_set on empty bitset");
        return nbits_;
    }

    // total order: compare by lowest differing bit; the set with that bit
    // present sorts first.  Ties broken only by full equality.
    bool lex_less(const bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            u64 diff = words_[i] ^ o.words_[i];
            if (diff) {
                u64 low = diff & (~diff + 1);
                return (words_[i] & low) != 0;
            }
        }
        return false;
    }

    u64 hash() const {
        u64 h = fnv1a_init;
        for (u64 w : words_) h = fnv1a_bytes(&w, 8, h);
        return h;
    }

    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            u64 w = words_[wi];
            while (w) {
                std::size_t bit = (wi << 6) + std::size_t(std::countr_zero(w));
                fn(bit);
                w &= w - 1;
            }
        }
    }

private:
    std::size_t nbits_;
    std::vector<u64> words_;
};

struct bitset_hash {
    std::size_t operator()(const bitset& b) const { return std::size_t(b.hash()); }
};

}  // namespace latcheck
