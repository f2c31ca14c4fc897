#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace ord {

// Fixed-universe dynamic bitset. All binary operations require equal universe
// sizes; comparison is numeric (highest word first) so it doubles as a
// deterministic total order on subsets.
class Bits {
public:
    Bits() : n_(0) {}
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bits single(int n, int i) {
        Bits b(n);
        b.set(i);
        return b;
    }
    static Bits full(int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator-=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    bool operator==(const Bits& o) const { return w_ == o.w_; }
    bool operator!=(const Bits& o) const { return w_ != o.w_; }
    bool operator<(const Bits& o) const {
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // First set bit, or -1.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }
    // Last set bit, or -1.
    int last() const {
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i]) return int(i * 64 + 63 - std::countl_zero(w_[i]));
        return -1;
    }
    // First set bit > i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        std::size_t k = i >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (w) return int(k * 64 + std::countr_zero(w));
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (int i = first(); i >= 0; i = next(i)) f(i);
    }
    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    std::size_t hash() const {
        std::size_t h = std::size_t(n_) * 0x9e3779b97f4a7c15ull;
        for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

} // namespace ord
