#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "kalliance/graph.hpp"

namespace kalliance::family {

// Canonical labellings:
//   path(n)          0 - 1 - ... - n-1
//   cycle(n)         path plus n-1 - 0, n >= 3
//   star(t)          centre 0, leaves 1..t
//   complete(n)      K_n
//   wheel(m)         hub 0, rim 1..m in cyclic order, m >= 3
//   grid(r, c)       vertex (i, j) is i*c + j
//   empty(n)         n isolated vertices
//   random_tree(n)   uniform labelled tree from a seeded Pruefer sequence
//   gnp(n, p)        Erdos-Renyi with p = num/den
Graph path(int n);
Graph cycle(int n);
Graph star(int t);
Graph complete(int n);
Graph wheel(int m);
Graph grid(int rows, int cols);
Graph empty(int n);
Graph random_tree(int n, std::uint64_t seed);
Graph gnp(int n, int numerator, int denominator, std::uint64_t seed);

// Dispatch by name, used by the CLI. params are the integer arguments in
// the order listed above; seeded kinds take the seed separately.
Graph make(std::string_view kind, std::span<const int> params, std::uint64_t seed = 0);

}  // namespace kalliance::family
