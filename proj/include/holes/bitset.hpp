#ifndef HOLES_BITSET_HPP
#define HOLES_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace holes {

// Fixed-capacity dynamic bitset sized at construction. Vertex sets and
// adjacency rows are all instances of this.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t capacity() const { return n_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : words_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
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
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset minus(Bitset a, const Bitset& b) { a.subtract(b); return a; }

    bool operator==(const Bitset& o) const = default;

    // First set bit at or after `from`, or capacity() if none.
    std::size_t next(std::size_t from = 0) const {
        if (from >= n_) return n_;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
                return i < n_ ? i : n_;
            }
            if (++w >= words_.size()) return n_;
            cur = words_[w];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = next(); i < n_; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

inline Bitset make_set(std::size_t n, std::initializer_list<int> xs) {
    Bitset b(n);
    for (int x : xs) b.set(static_cast<std::size_t>(x));
    return b;
}

inline Bitset make_set(std::size_t n, const std::vector<int>& xs) {
    Bitset b(n);
    for (int x : xs) b.set(static_cast<std::size_t>(x));
    return b;
}

} // namespace holes

#endif
