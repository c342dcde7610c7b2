#include <folklab/graph.hh>

#include <algorithm>
#include <string>

using std::string;
using std::vector;

namespace folklab
{
    ParseError::ParseError(const string & message, std::size_t offset) :
        std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        _offset(offset)
    {
    }

    auto VertexSet::of(std::initializer_list<int> vertices) -> VertexSet
    {
        Mask m = 0;
        for (int v : vertices)
            m |= bit(v);
        return VertexSet{m};
    }

    auto VertexSet::members() const -> vector<int>
    {
        vector<int> result;
        result.reserve(size());
        for (Mask m = _bits; m; m &= m - 1)
            result.push_back(lowest(m));
        return result;
    }

    namespace
    {
        auto check_order(int n) -> void
        {
            if (n < 0)
                throw DomainError("negative vertex count " + std::to_string(n));
            if (n > max_order)
                throw CapacityError("order " + std::to_string(n) + " exceeds capacity of 64 vertices");
        }
    }

    Graph::Graph(int order, std::span<const Mask> rows) :
        _order(order)
    {
        check_order(order);
        if (rows.size() != static_cast<std::size_t>(order))
            throw DomainError("expected " + std::to_string(order) + " adjacency rows, got " + std::to_string(rows.size()));

        std::copy(rows.begin(), rows.end(), _adj.begin());
        Mask in_range = low_mask(order);
        for (int v = 0 ; v < order ; ++v) {
            if (_adj[v] & ~in_range)
                throw DomainError("adjacency row " + std::to_string(v) + " references vertices beyond the order");
            if (_adj[v] & bit(v))
                throw DomainError("loop at vertex " + std::to_string(v));
            for (Mask m = _adj[v]; m; m &= m - 1)
                if (! (_adj[lowest(m)] & bit(v)))
                    throw DomainError("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(lowest(m)));
        }
    }

    auto Graph::from_edges(int order, std::span<const Edge> edges) -> Graph
    {
        GraphBuilder b(order);
        for (auto & e : edges)
            b.add_edge(e.u, e.v);
        return b.build();
    }

    auto Graph::from_edges(int order, std::initializer_list<Edge> edges) -> Graph
    {
        return from_edges(order, std::span<const Edge>{edges.begin(), edges.size()});
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0 ; v < _order ; ++v)
            twice += popcount(_adj[v]);
        return twice / 2;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(edge_count());
        for (int u = 0 ; u < _order ; ++u)
            for (Mask m = _adj[u] & ~low_mask(u + 1); m; m &= m - 1)
                result.push_back(Edge{u, lowest(m)});
        return result;
    }

    GraphBuilder::GraphBuilder(int order) :
        _order(order)
    {
        check_order(order);
    }

    auto GraphBuilder::add_edge(int u, int v) -> GraphBuilder &
    {
        if (u < 0 || v < 0 || u >= _order || v >= _order)
            throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside order " + std::to_string(_order));
        if (u == v)
            throw DomainError("loop at vertex " + std::to_string(u));
        _adj[u] |= bit(v);
        _adj[v] |= bit(u);
        return *this;
    }

    auto GraphBuilder::build() const -> Graph
    {
        return Graph{_order, std::span<const Mask>{_adj.data(), static_cast<std::size_t>(_order)}};
    }

    auto complete(int n) -> Graph
    {
        check_order(n);
        vector<Mask> rows(n);
        for (int v = 0 ; v < n ; ++v)
            rows[v] = low_mask(n) & ~bit(v);
        return Graph{n, rows};
    }

    auto edgeless(int n) -> Graph
    {
        check_order(n);
        return Graph{n, vector<Mask>(n, 0)};
    }

    auto cycle(int n) -> Graph
    {
        if (n < 3)
            throw DomainError("cycle needs at least 3 vertices, got " + std::to_string(n));
        return circulant(n, {1});
    }

    auto circulant(int n, std::span<const int> distances) -> Graph
    {
        check_order(n);
        GraphBuilder b(n);
        for (int d : distances) {
            if (d < 1 || 2 * d > n)
                throw DomainError("circulant distance " + std::to_string(d) + " outside 1.." + std::to_string(n / 2));
            for (int i = 0 ; i < n ; ++i)
                b.add_edge(i, (i + d) % n);
        }
        return b.build();
    }

    auto circulant(int n, std::initializer_list<int> distances) -> Graph
    {
        return circulant(n, std::span<const int>{distances.begin(), distances.size()});
    }

    auto complement(const Graph & g) -> Graph
    {
        int n = g.order();
        vector<Mask> rows(n);
        for (int v = 0 ; v < n ; ++v)
            rows[v] = ~g.neighbours(v) & low_mask(n) & ~bit(v);
        return Graph{n, rows};
    }

    auto join(const Graph & g1, const Graph & g2) -> Graph
    {
        int n1 = g1.order(), n2 = g2.order();
        if (n1 + n2 > max_order)
            throw CapacityError("join of orders " + std::to_string(n1) + " and " + std::to_string(n2) + " exceeds capacity of 64 vertices");

        Mask first = low_mask(n1), second = low_mask(n1 + n2) & ~first;
        vector<Mask> rows(n1 + n2);
        for (int v = 0 ; v < n1 ; ++v)
            rows[v] = g1.neighbours(v) | second;
        for (int v = 0 ; v < n2 ; ++v)
            rows[n1 + v] = (g2.neighbours(v) << n1) | first;
        return Graph{n1 + n2, rows};
    }

    auto induced(const Graph & g, VertexSet s) -> InducedSubgraph
    {
        if (s.bits() & ~low_mask(g.order()))
            throw DomainError("vertex set exceeds host order");

        InducedSubgraph result;
        result.labels = s.members();
        int k = static_cast<int>(result.labels.size());
        vector<Mask> rows(k, 0);
        for (int i = 0 ; i < k ; ++i)
            for (int j = 0 ; j < k ; ++j)
                if (g.adjacent(result.labels[i], result.labels[j]))
                    rows[i] |= bit(j);
        result.graph = Graph{k, rows};
        return result;
    }

    auto is_spanning_subgraph(const Graph & sub, const Graph & super) -> bool
    {
        if (sub.order() != super.order())
            return false;
        for (int v = 0 ; v < sub.order() ; ++v)
            if (sub.neighbours(v) & ~super.neighbours(v))
                return false;
        return true;
    }

    auto q_candidate() -> Graph
    {
        return complement(circulant(13, {1, 5}));
    }
}
