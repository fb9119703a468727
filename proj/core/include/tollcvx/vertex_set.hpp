#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tollcvx {

/// Subset of {0, ..., n-1} over a fixed universe of n vertices.
/// Backed by 64-bit words; the universe size is part of the value.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), words_(word_count(universe), 0) {}

    VertexSet(int universe, std::initializer_list<int> vertices) : VertexSet(universe) {
        for (int v : vertices) set(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear() { for (auto& w : words_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const { return next(-1); }

    /// Smallest member strictly greater than v, or -1.
    int next(int v) const {
        for (int i = v + 1; i < n_;) {
            std::uint64_t w = words_[i >> 6] >> (i & 63);
            if (w) return i + std::countr_zero(w);
            i = (i | 63) + 1;
        }
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Lexicographic order on the sorted member sequence (deterministic tie-break).
    bool operator<(const VertexSet& o) const {
        int a = first(), b = o.first();
        while (a != -1 && b != -1) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a == -1 && b != -1;
    }

    class const_iterator {
    public:
        const_iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() { v_ = s_->next(v_); return *this; }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }
    private:
        const VertexSet* s_;
        int v_;
    };
    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    /// "{0,2,5}" — used by report records and the CLI.
    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v : *this) {
            if (sep) s += ',';
            s += std::to_string(v);
            sep = true;
        }
        s += '}';
        return s;
    }

private:
    static std::size_t word_count(int n) { return static_cast<std::size_t>(n + 63) / 64; }

    void trim() {
        if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tollcvx
