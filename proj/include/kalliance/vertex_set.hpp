#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace kalliance {

using Vertex = int;
using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

template <class F>
void for_each_bit(Mask m, F&& f)
{
    while (m != 0) {
        f(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
}

// A subset of {0, ..., universe_size-1}.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe_size);
    VertexSet(int universe_size, Mask bits);

    static VertexSet full(int universe_size);
    static VertexSet of(int universe_size, std::span<const Vertex> members);
    static VertexSet of(int universe_size, std::initializer_list<Vertex> members);

    int universe_size() const { return universe_; }
    Mask bits() const { return bits_; }
    int size() const { return popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(Vertex v) const { return v >= 0 && v < universe_ && (bits_ & bit(v)) != 0; }

    void insert(Vertex v);
    void erase(Vertex v);

    VertexSet complement() const { return VertexSet(universe_, ~bits_ & low_bits(universe_)); }
    bool is_subset_of(const VertexSet& other) const;

    // Ascending.
    std::vector<Vertex> members() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
    friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b);

private:
    int universe_ = 0;
    Mask bits_ = 0;
};

// Orders by sorted member list, shorter prefix first.
bool lexicographic_less(const VertexSet& a, const VertexSet& b);

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace kalliance
