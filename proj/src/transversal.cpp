#include "kalliance/transversal.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace kalliance {

namespace {

std::array<int, 64> membership(std::span<const Mask> edges)
{
    std::array<int, 64> counts{};
    for (Mask e : edges)
        for_each_bit(e, [&](Vertex v) { ++counts[v]; });
    return counts;
}

Vertex most_frequent(const std::array<int, 64>& counts, Mask allowed)
{
    Vertex pick = -1;
    int best = 0;
    for_each_bit(allowed, [&](Vertex v) {
        if (counts[v] > best) {
            best = counts[v];
            pick = v;
        }
    });
    return pick;
}

class BranchAndBound {
public:
    BranchAndBound(int stop_at, int best_size, Mask best, bool have_best, TransversalStats* stats)
        : stop_at_(stop_at), best_size_(best_size), best_(best), have_best_(have_best), stats_(stats)
    {
    }

    void run(std::vector<Mask> edges, Mask chosen, Mask allowed) { visit(std::move(edges), chosen, allowed); }

    bool have_best() const { return have_best_; }
    Mask best() const { return best_; }

private:
    bool done() const { return have_best_ && best_size_ <= stop_at_; }

    void visit(std::vector<Mask> edges, Mask chosen, Mask allowed)
    {
        if (stats_ != nullptr)
            ++stats_->nodes;

        // Drop hit edges, restrict the rest to allowed vertices and force
        // any edge left with a single candidate.
        for (bool forced = true; forced;) {
            forced = false;
            std::size_t kept = 0;
            for (Mask e : edges) {
                if ((e & chosen) != 0)
                    continue;
                Mask r = e & allowed;
                if (r == 0)
                    return;
                if ((r & (r - 1)) == 0) {
                    chosen |= r;
                    allowed &= ~r;
                    forced = true;
                    continue;
                }
                edges[kept++] = r;
            }
            edges.resize(kept);
        }

        const int size = popcount(chosen);
        if (size >= best_size_)
            return;
        if (edges.empty()) {
            best_size_ = size;
            best_ = chosen;
            have_best_ = true;
            return;
        }

        // Pairwise disjoint unhit edges each need their own vertex.
        Mask used = 0;
        int packing = 0;
        for (Mask e : edges) {
            if ((e & used) == 0) {
                used |= e;
                ++packing;
            }
        }
        if (size + packing >= best_size_)
            return;

        const Vertex pivot = most_frequent(membership(edges), allowed);
        visit(edges, chosen | bit(pivot), allowed & ~bit(pivot));
        if (done())
            return;
        visit(std::move(edges), chosen, allowed & ~bit(pivot));
    }

    int stop_at_;
    int best_size_;
    Mask best_;
    bool have_best_;
    TransversalStats* stats_;
};

}  // namespace

bool is_transversal(std::span<const Mask> edges, Mask t)
{
    return std::all_of(edges.begin(), edges.end(), [&](Mask e) { return (e & t) != 0; });
}

Mask greedy_transversal(std::span<const Mask> edges, Mask allowed)
{
    std::vector<Mask> unhit(edges.begin(), edges.end());
    Mask chosen = 0;
    while (!unhit.empty()) {
        const Vertex v = most_frequent(membership(unhit), allowed);
        if (v < 0)
            break;
        chosen |= bit(v);
        allowed &= ~bit(v);
        std::erase_if(unhit, [&](Mask e) { return (e & chosen) != 0; });
    }
    return chosen;
}

std::optional<Mask> minimum_transversal(std::span<const Mask> edges, int universe,
                                        const TransversalConstraints& constraints, TransversalStats* stats)
{
    const Mask all = low_bits(universe);
    const Mask chosen = constraints.forced_in & all;
    const Mask allowed = all & ~constraints.forced_out & ~chosen;

    // Greedy incumbent; the search only looks for strictly smaller sets.
    std::vector<Mask> unhit;
    for (Mask e : edges)
        if ((e & chosen) == 0)
            unhit.push_back(e);
    const Mask greedy = chosen | greedy_transversal(unhit, allowed);
    const bool greedy_ok = is_transversal(edges, greedy);

    int cap = constraints.max_size < 0 ? universe + 1 : constraints.max_size + 1;
    bool have = false;
    int best_size = cap;
    Mask best = 0;
    if (greedy_ok && popcount(greedy) < cap) {
        have = true;
        best_size = popcount(greedy);
        best = greedy;
    }

    BranchAndBound search(constraints.stop_at, best_size, best, have, stats);
    if (!(have && best_size <= constraints.stop_at))
        search.run(std::vector<Mask>(edges.begin(), edges.end()), chosen, allowed);
    if (!search.have_best())
        return std::nullopt;
    return search.best();
}

}  // namespace kalliance
