#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hypermatch {

// Hard cap on the number of vertices, so vertex sets fit a fixed number of
// machine words. Exceeding it is a clean error, never UB.
#ifndef HYPERMATCH_MAX_VERTICES
inline constexpr int kMaxVertices = 512;
#else
inline constexpr int kMaxVertices = HYPERMATCH_MAX_VERTICES;
#endif
inline constexpr int kMaxWords = (kMaxVertices + 63) / 64;

inline constexpr int words_for(int n) { return n <= 64 ? 1 : (n + 63) / 64; }

// Fixed-width bitmask over vertices 0..kMaxVertices-1.
class VertexSet {
public:
    constexpr VertexSet() : w_{} {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }
    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }
    static VertexSet full(int n) {
        check_vertex_bound(n - 1);
        VertexSet s;
        for (int v = 0; v < n; ++v) s.w_[v >> 6] |= uint64_t{1} << (v & 63);
        return s;
    }

    bool test(int v) const {
        check_vertex_bound(v);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }
    void set(int v) {
        check_vertex_bound(v);
        w_[v >> 6] |= uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        check_vertex_bound(v);
        w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kMaxWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kMaxWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kMaxWords; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kMaxWords; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kMaxWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kMaxWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kMaxWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet complement(int n) const { return full(n) - *this; }

    // Lowest member, or -1 when empty.
    int lowest() const {
        for (int i = 0; i < kMaxWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < kMaxWords; ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }
    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int x) { v.push_back(x); });
        return v;
    }

    const uint64_t* words() const { return w_.data(); }
    uint64_t* words() { return w_.data(); }

    bool operator==(const VertexSet&) const = default;

private:
    static void check_vertex_bound(int v) {
        if (v < 0 || v >= kMaxVertices)
            throw std::invalid_argument("vertex id out of supported range [0, " +
                                        std::to_string(kMaxVertices) + ")");
    }
    std::array<uint64_t, kMaxWords> w_;
};

}  // namespace hypermatch
