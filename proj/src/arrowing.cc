#include <folklab/arrowing.hh>
#include <folklab/clique.hh>

#include <algorithm>
#include <array>
#include <charconv>

using std::string;
using std::vector;

namespace folklab
{
    ArrowTuple::ArrowTuple(vector<int> entries) :
        _entries(std::move(entries))
    {
        if (_entries.empty())
            throw DomainError("arrow tuple needs at least one entry");
        if (_entries.size() > max_colours)
            throw DomainError("arrow tuple has " + std::to_string(_entries.size()) + " entries, at most 8 supported");
        for (int a : _entries)
            if (a < 1 || a > max_order)
                throw DomainError("arrow tuple entry " + std::to_string(a) + " outside 1..64");
    }

    ArrowTuple::ArrowTuple(std::initializer_list<int> entries) :
        ArrowTuple(vector<int>(entries))
    {
    }

    auto ArrowTuple::parse(std::string_view text) -> ArrowTuple
    {
        vector<int> entries;
        std::size_t pos = 0;
        while (true) {
            std::size_t end = text.find(',', pos);
            auto piece = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
            while (! piece.empty() && piece.front() == ' ')
                piece.remove_prefix(1), ++pos;
            while (! piece.empty() && piece.back() == ' ')
                piece.remove_suffix(1);
            int value = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() || value < 1)
                throw ParseError("tuple entry '" + string(piece) + "' is not a positive integer", pos);
            entries.push_back(value);
            if (end == std::string_view::npos)
                break;
            pos = end + 1;
        }
        return ArrowTuple{std::move(entries)};
    }

    auto ArrowTuple::max_entry() const -> int
    {
        return *std::max_element(_entries.begin(), _entries.end());
    }

    auto ArrowTuple::all_equal() const -> bool
    {
        return std::adjacent_find(_entries.begin(), _entries.end(), std::not_equal_to<>{}) == _entries.end();
    }

    auto ArrowTuple::to_string() const -> string
    {
        string result;
        for (std::size_t i = 0 ; i < _entries.size() ; ++i) {
            if (i)
                result += ',';
            result += std::to_string(_entries[i]);
        }
        return result;
    }

    auto to_string(Mode m) -> string
    {
        return m == Mode::vertex ? "vertex" : "edge";
    }

    auto to_string(Outcome o) -> string
    {
        switch (o) {
            case Outcome::arrows: return "arrows";
            case Outcome::free: return "free";
            case Outcome::unknown: return "unknown";
        }
        return "unknown";
    }

    auto SearchBudget::with_workers(int w) const -> SearchBudget
    {
        auto copy = *this;
        copy.workers = w;
        return copy;
    }

    auto EdgeColouring::split(const Graph & host, const Graph & first_class) -> EdgeColouring
    {
        if (! is_spanning_subgraph(first_class, host))
            throw ArityError("first colour class is not a spanning subgraph of the host");
        EdgeColouring result;
        result.edges = host.edges();
        for (auto & e : result.edges)
            result.colours.push_back(first_class.adjacent(e.u, e.v) ? 1 : 2);
        return result;
    }

    auto check_vertex_colouring_free(const Graph & g, const ArrowTuple & t, const VertexColouring & c) -> bool
    {
        if (c.colours.size() != static_cast<std::size_t>(g.order()))
            throw ArityError("vertex colouring covers " + std::to_string(c.colours.size()) + " vertices, graph has " + std::to_string(g.order()));

        std::array<Mask, max_colours> classes{};
        for (int v = 0 ; v < g.order() ; ++v) {
            int colour = c.colours[v];
            if (colour < 1 || colour > t.size())
                throw ArityError("vertex " + std::to_string(v) + " has colour " + std::to_string(colour) + " outside 1.." + std::to_string(t.size()));
            classes[colour - 1] |= bit(v);
        }

        for (int i = 0 ; i < t.size() ; ++i)
            if (kernel::find_clique(g.adjacency().data(), classes[i], t[i]))
                return false;
        return true;
    }

    auto check_edge_colouring_free(const Graph & g, const ArrowTuple & t, const EdgeColouring & c) -> bool
    {
        if (c.edges.size() != c.colours.size())
            throw ArityError("edge colouring has " + std::to_string(c.edges.size()) + " edges but " + std::to_string(c.colours.size()) + " colours");

        auto sorted = c.edges;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.edges())
            throw ArityError("edge colouring does not cover exactly the edges of the graph");

        vector<std::array<Mask, max_order>> classes(t.size(), std::array<Mask, max_order>{});
        vector<int> class_size(t.size(), 0);
        for (std::size_t i = 0 ; i < c.edges.size() ; ++i) {
            int colour = c.colours[i];
            if (colour < 1 || colour > t.size())
                throw ArityError("edge colour " + std::to_string(colour) + " outside 1.." + std::to_string(t.size()));
            auto [u, v] = c.edges[i];
            classes[colour - 1][u] |= bit(v);
            classes[colour - 1][v] |= bit(u);
            ++class_size[colour - 1];
        }

        for (int i = 0 ; i < t.size() ; ++i) {
            // a 1- or 2-clique in colour i is any edge of that colour
            if (t[i] <= 2) {
                if (class_size[i] > 0)
                    return false;
            }
            else if (kernel::find_clique(classes[i].data(), low_mask(g.order()), t[i]))
                return false;
        }
        return true;
    }

    auto decide(Mode mode, const Graph & g, const ArrowTuple & t, const SearchBudget & budget) -> ArrowVerdict
    {
        return mode == Mode::vertex ? vertex_arrows(g, t, budget) : edge_arrows(g, t, budget);
    }
}
