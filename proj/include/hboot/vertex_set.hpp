#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hboot {

/// Largest vertex count any Graph may have.
inline constexpr int kMaxVertices = 512;

/// Fixed-width bitset over vertex indices [0, kMaxVertices).
///
/// One row of a Graph's adjacency matrix. Word-level operations are the
/// inner loop of the embedding search, so everything here is inline and
/// allocation free.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;

    /// The set {0, ..., n-1}.
    static VertexSet prefix(int n)
    {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool intersects(const VertexSet& o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w])
                return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    int next(int v) const
    {
        ++v;
        if (v >= kMaxVertices)
            return -1;
        int w = v >> 6;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (bits)
                return w * 64 + std::countr_zero(bits);
            if (++w == kWords)
                return -1;
            bits = words_[w];
        }
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    const std::array<std::uint64_t, kWords>& words() const { return words_; }

private:
    std::array<std::uint64_t, kWords> words_{};
};

} // namespace hboot
