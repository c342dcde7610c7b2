#include <folklab/clique.hh>

#include <algorithm>
#include <array>
#include <vector>

using std::array;
using std::optional;
using std::vector;

namespace folklab
{
    namespace
    {
        // Greedy sequential colouring of `p` in increasing bit order. Vertices are written to
        // order[] grouped by colour class, colours non-decreasing; returns the vertex count.
        auto greedy_colour(const Mask * adj, Mask p, array<int, max_order> & order, array<int, max_order> & colour) -> int
        {
            int count = 0, c = 0;
            Mask uncoloured = p;
            while (uncoloured) {
                ++c;
                Mask q = uncoloured;
                while (q) {
                    int v = lowest(q);
                    q &= ~adj[v] & ~bit(v);
                    uncoloured &= ~bit(v);
                    order[count] = v;
                    colour[count] = c;
                    ++count;
                }
            }
            return count;
        }

        auto expand_max(const Mask * adj, Mask p, int current, int & best) -> void
        {
            array<int, max_order> order, colour;
            int count = greedy_colour(adj, p, order, colour);
            for (int i = count - 1 ; i >= 0 ; --i) {
                if (current + colour[i] <= best)
                    return;
                int v = order[i];
                Mask next = p & adj[v];
                if (next == 0)
                    best = std::max(best, current + 1);
                else
                    expand_max(adj, next, current + 1, best);
                p &= ~bit(v);
            }
        }

        auto lexicographic_clique(const Mask * adj, Mask within, int k) -> Mask
        {
            Mask chosen = 0, candidates = within;
            int need = k;
            for (Mask m = within; m && need > 0; m &= m - 1) {
                int v = lowest(m);
                if (! (candidates & bit(v)))
                    continue;
                Mask later = candidates & adj[v] & ~low_mask(v + 1);
                if (kernel::find_clique(adj, later, need - 1)) {
                    chosen |= bit(v);
                    candidates = later;
                    --need;
                }
            }
            return chosen;
        }

        auto enumerate(const Graph & g, Mask candidates, Mask chosen, int need, const std::function<void (VertexSet)> & visit) -> void
        {
            if (need == 0) {
                visit(VertexSet{chosen});
                return;
            }
            for (Mask m = candidates; m && popcount(m) >= need; m &= m - 1) {
                int v = lowest(m);
                enumerate(g, m & g.neighbours(v) & ~low_mask(v + 1), chosen | bit(v), need - 1, visit);
            }
        }
    }

    namespace kernel
    {
        auto find_clique(const Mask * adj, Mask p, int k, Mask * witness) -> bool
        {
            if (k <= 0)
                return true;
            if (popcount(p) < k)
                return false;

            switch (k) {
                case 1:
                    if (witness)
                        *witness |= p & (~p + 1);
                    return true;

                case 2:
                    for (Mask m = p; m; m &= m - 1) {
                        int v = lowest(m);
                        if (Mask x = adj[v] & p) {
                            if (witness)
                                *witness |= bit(v) | bit(lowest(x));
                            return true;
                        }
                    }
                    return false;

                case 3:
                    for (Mask m = p; m; m &= m - 1) {
                        int v = lowest(m);
                        Mask nv = adj[v] & m;
                        for (Mask n = nv; n; n &= n - 1) {
                            int u = lowest(n);
                            if (Mask x = adj[u] & nv) {
                                if (witness)
                                    *witness |= bit(v) | bit(u) | bit(lowest(x));
                                return true;
                            }
                        }
                    }
                    return false;

                default:
                    break;
            }

            array<int, max_order> order, colour;
            int count = greedy_colour(adj, p, order, colour);
            for (int i = count - 1 ; i >= 0 ; --i) {
                if (colour[i] < k)
                    return false;
                int v = order[i];
                if (find_clique(adj, p & adj[v], k - 1, witness)) {
                    if (witness)
                        *witness |= bit(v);
                    return true;
                }
                p &= ~bit(v);
            }
            return false;
        }

        auto max_clique_size(const Mask * adj, Mask within) -> int
        {
            if (within == 0)
                return 0;
            int best = 1;
            expand_max(adj, within, 0, best);
            return best;
        }
    }

    auto degeneracy_order(const Graph & g) -> vector<int>
    {
        int n = g.order();
        vector<int> degree(n), removal;
        removal.reserve(n);
        Mask remaining = low_mask(n);
        for (int v = 0 ; v < n ; ++v)
            degree[v] = g.degree(v);
        while (remaining) {
            int pick = -1;
            for (Mask m = remaining; m; m &= m - 1) {
                int v = lowest(m);
                if (pick == -1 || degree[v] < degree[pick])
                    pick = v;
            }
            removal.push_back(pick);
            remaining &= ~bit(pick);
            for (Mask m = g.neighbours(pick) & remaining; m; m &= m - 1)
                --degree[lowest(m)];
        }
        std::reverse(removal.begin(), removal.end());
        return removal;
    }

    auto clique_number(const Graph & g) -> CliqueResult
    {
        int n = g.order();
        if (n == 0)
            return CliqueResult{};

        auto order = degeneracy_order(g);
        vector<int> position(n);
        for (int i = 0 ; i < n ; ++i)
            position[order[i]] = i;

        array<Mask, max_order> renumbered{};
        for (int i = 0 ; i < n ; ++i)
            for (Mask m = g.neighbours(order[i]); m; m &= m - 1)
                renumbered[i] |= bit(position[lowest(m)]);

        int size = kernel::max_clique_size(renumbered.data(), low_mask(n));
        return CliqueResult{size, VertexSet{lexicographic_clique(g.adjacency().data(), low_mask(n), size)}};
    }

    auto independence_number(const Graph & g) -> CliqueResult
    {
        return clique_number(complement(g));
    }

    auto has_clique(const Graph & g, int k, VertexSet within) -> optional<VertexSet>
    {
        if (k < 0)
            throw DomainError("negative clique size " + std::to_string(k));
        if (within.bits() & ~low_mask(g.order()))
            throw DomainError("vertex set exceeds host order");
        Mask witness = 0;
        if (kernel::find_clique(g.adjacency().data(), within.bits(), k, &witness))
            return VertexSet{witness};
        return std::nullopt;
    }

    auto has_clique(const Graph & g, int k) -> optional<VertexSet>
    {
        return has_clique(g, k, g.all());
    }

    auto is_clique(const Graph & g, VertexSet s) -> bool
    {
        for (int v : s.members())
            if ((s.bits() & ~bit(v)) & ~g.neighbours(v))
                return false;
        return true;
    }

    auto is_independent(const Graph & g, VertexSet s) -> bool
    {
        for (int v : s.members())
            if (s.bits() & g.neighbours(v))
                return false;
        return true;
    }

    auto for_each_clique(const Graph & g, int k, const std::function<void (VertexSet)> & visit) -> void
    {
        if (k < 0)
            throw DomainError("negative clique size " + std::to_string(k));
        enumerate(g, low_mask(g.order()), 0, k, visit);
    }
}
