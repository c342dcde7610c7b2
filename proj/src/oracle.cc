#include <folklab/arrowing.hh>

#include <chrono>
#include <cstdint>
#include <vector>

using std::uint64_t;
using std::vector;

// Reference decider: walks every colouring in mixed-radix order and tests it against a list
// of cliques found by plain pairwise-adjacency recursion. Deliberately independent of the
// clique kernel and of the pruned search.

namespace folklab
{
    namespace
    {
        auto collect_cliques(const Graph & g, int k, int from, vector<int> & current, vector<vector<int>> & out) -> void
        {
            if (static_cast<int>(current.size()) == k) {
                out.push_back(current);
                return;
            }
            for (int v = from ; v < g.order() ; ++v) {
                bool fits = true;
                for (int u : current)
                    if (! g.adjacent(u, v)) {
                        fits = false;
                        break;
                    }
                if (! fits)
                    continue;
                current.push_back(v);
                collect_cliques(g, k, v + 1, current, out);
                current.pop_back();
            }
        }

        auto cliques_of_size(const Graph & g, int k) -> vector<vector<int>>
        {
            vector<vector<int>> out;
            vector<int> current;
            collect_cliques(g, k, 0, current, out);
            return out;
        }
    }

    auto decide_with_oracle(const Graph & g, const ArrowTuple & t, Mode mode) -> ArrowVerdict
    {
        auto start = std::chrono::steady_clock::now();
        int r = t.size();
        auto edges = g.edges();
        int elements = mode == Mode::vertex ? g.order() : static_cast<int>(edges.size());

        if (elements > 63)
            throw CapacityError("oracle handles at most 63 colourable elements, got " + std::to_string(elements));

        uint64_t total = 1;
        for (int i = 0 ; i < elements ; ++i) {
            total *= r;
            if (total > oracle_limit)
                throw CapacityError("oracle refuses " + std::to_string(r) + "^" + std::to_string(elements) + " colourings (limit 2^24)");
        }

        vector<int> edge_index(max_order * max_order, -1);
        for (std::size_t i = 0 ; i < edges.size() ; ++i) {
            edge_index[edges[i].u * max_order + edges[i].v] = static_cast<int>(i);
            edge_index[edges[i].v * max_order + edges[i].u] = static_cast<int>(i);
        }

        // forbidden[i]: element sets that must not all take colour i
        vector<vector<uint64_t>> forbidden(r);
        for (int i = 0 ; i < r ; ++i) {
            if (mode == Mode::edge && t[i] <= 2) {
                for (std::size_t e = 0 ; e < edges.size() ; ++e)
                    forbidden[i].push_back(uint64_t{1} << e);
                continue;
            }
            for (auto & clique : cliques_of_size(g, t[i])) {
                uint64_t set = 0;
                if (mode == Mode::vertex)
                    for (int v : clique)
                        set |= uint64_t{1} << v;
                else
                    for (std::size_t x = 0 ; x < clique.size() ; ++x)
                        for (std::size_t y = x + 1 ; y < clique.size() ; ++y)
                            set |= uint64_t{1} << edge_index[clique[x] * max_order + clique[y]];
                forbidden[i].push_back(set);
            }
        }

        ArrowVerdict verdict;
        verdict.outcome = Outcome::arrows;
        vector<int> digits(elements, 0);
        for (uint64_t n = 0 ; n < total ; ++n) {
            if (n > 0)
                for (int i = 0 ; i < elements ; ++i) {
                    if (++digits[i] < r)
                        break;
                    digits[i] = 0;
                }

            vector<uint64_t> classes(r, 0);
            for (int i = 0 ; i < elements ; ++i)
                classes[digits[i]] |= uint64_t{1} << i;

            bool free = true;
            for (int i = 0 ; i < r && free ; ++i)
                for (uint64_t set : forbidden[i])
                    if ((set & classes[i]) == set) {
                        free = false;
                        break;
                    }

            ++verdict.stats.nodes;
            if (free) {
                verdict.outcome = Outcome::free;
                vector<int> colours(elements);
                for (int i = 0 ; i < elements ; ++i)
                    colours[i] = digits[i] + 1;
                if (mode == Mode::vertex)
                    verdict.witness = VertexColouring{std::move(colours)};
                else
                    verdict.witness = EdgeColouring{edges, std::move(colours)};
                break;
            }
        }

        verdict.stats.subtrees = 1;
        verdict.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return verdict;
    }
}
