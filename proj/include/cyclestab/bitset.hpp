#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cyclestab {

// Bitset over a fixed universe {0..n-1}. Vertex sets and adjacency rows share
// this representation: O(1) membership, O(n/64) scans and set algebra.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset full(int universe) {
        Bitset b(universe);
        for (auto& w : b.words_) w = ~0ULL;
        b.trim();
        return b;
    }

    static Bitset of(int universe, std::initializer_list<int> bits) {
        Bitset b(universe);
        for (int i : bits) b.set(i);
        return b;
    }

    static Bitset of(int universe, const std::vector<int>& bits) {
        Bitset b(universe);
        for (int i : bits) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    long long intersection_count(const Bitset& o) const {
        long long c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // In-place set difference.
    Bitset& remove(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) {
        a &= b;
        return a;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) {
        a |= b;
        return a;
    }
    Bitset minus(const Bitset& o) const {
        Bitset r = *this;
        r.remove(o);
        return r;
    }

    // First set bit, or -1.
    int first() const { return next(-1); }

    // First set bit strictly after `after`, or -1.
    int next(int after) const {
        int i = after + 1;
        if (i >= n_) return -1;
        std::size_t w = static_cast<std::size_t>(i) >> 6;
        std::uint64_t cur = words_[w] & (~0ULL << (i & 63));
        while (true) {
            if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
            if (++w >= words_.size()) return -1;
            cur = words_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const Bitset&) const = default;

  private:
    void trim() {
        int extra = n_ & 63;
        if (extra && !words_.empty()) words_.back() &= (1ULL << extra) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cyclestab
