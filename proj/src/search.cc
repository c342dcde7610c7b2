#include <folklab/arrowing.hh>
#include <folklab/clique.hh>

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>

using std::array;
using std::uint64_t;
using std::vector;

// Backtracking search for a free colouring. Arrows is certified by exhausting the tree.
//
// Every node runs forward checking to a fixed point: an uncoloured element with no colour
// that avoids completing a forbidden clique kills the node, an element with exactly one such
// colour is assigned. The search then branches on the first uncoloured element of a static
// order. Interchangeable colours (equal tuple entries) are only opened in index order.
//
// The top levels of the tree are split into an ordered list of subtrees. The split depends
// only on the instance, never on the worker count, and the outcome is read off the per-subtree
// results in order, so verdicts, witnesses and node counts are the same for any worker count.

namespace folklab
{
    namespace
    {
        constexpr uint64_t check_interval = 1 << 12;
        constexpr int target_subtrees = 64;

        struct Decision
        {
            int element;
            int colour;     // 0-based
        };

        using Prefix = vector<Decision>;

        struct Problem
        {
            Mode mode;
            const Graph * graph;
            int colours;
            array<int, max_colours> target{};
            vector<Edge> edges;         // edge mode elements
            vector<int> order;          // static branching order over element indices
            int split_depth = 0;

            auto element_count() const -> int
            {
                return mode == Mode::vertex ? graph->order() : static_cast<int>(edges.size());
            }
        };

        auto make_problem(Mode mode, const Graph & g, const ArrowTuple & t) -> Problem
        {
            for (int a : t.entries())
                if (a < 2)
                    throw DomainError("arrowing deciders need tuple entries >= 2, got " + t.to_string());

            Problem p;
            p.mode = mode;
            p.graph = &g;
            p.colours = t.size();
            for (int i = 0 ; i < t.size() ; ++i)
                p.target[i] = t[i];

            if (mode == Mode::vertex)
                p.order = degeneracy_order(g);
            else {
                p.edges = g.edges();
                p.order.resize(p.edges.size());
                vector<int> triangles(p.edges.size());
                for (std::size_t i = 0 ; i < p.edges.size() ; ++i) {
                    p.order[i] = static_cast<int>(i);
                    triangles[i] = popcount(g.neighbours(p.edges[i].u) & g.neighbours(p.edges[i].v));
                }
                std::stable_sort(p.order.begin(), p.order.end(), [&] (int x, int y) {
                    if (triangles[x] != triangles[y])
                        return triangles[x] > triangles[y];
                    auto & a = p.edges[x];
                    auto & b = p.edges[y];
                    return std::pair{a.v, a.u} < std::pair{b.v, b.u};
                });
            }

            int width = 1;
            while (p.colours > 1 && width < target_subtrees) {
                width *= p.colours;
                ++p.split_depth;
            }
            return p;
        }

        enum class Stop { none, capped, cancelled, timed_out };

        class Searcher
        {
            public:
                explicit Searcher(const Problem & p) :
                    _p(p),
                    _colour(p.element_count(), -1)
                {
                    _trail.reserve(p.element_count());
                }

                auto reset() -> void
                {
                    undo(0);
                    nodes = 0;
                    stop = Stop::none;
                }

                // Applies a decision prefix recorded by split(); each step propagates first.
                auto replay(const Prefix & prefix) -> bool
                {
                    for (auto & d : prefix) {
                        if (! propagate())
                            return false;
                        assign(d.element, d.colour);
                    }
                    return true;
                }

                template <typename Poll_>
                auto dfs(uint64_t cap, const Poll_ & poll) -> bool
                {
                    if (++nodes > cap) {
                        stop = Stop::capped;
                        return false;
                    }
                    if (nodes % check_interval == 0) {
                        stop = poll();
                        if (stop != Stop::none)
                            return false;
                    }

                    std::size_t mark = _trail.size();
                    if (! propagate()) {
                        undo(mark);
                        return false;
                    }
                    int e = pick();
                    if (e < 0)
                        return true;

                    std::size_t after = _trail.size();
                    for (int c : branch_colours(e)) {
                        assign(e, c);
                        if (dfs(cap, poll))
                            return true;
                        undo(after);
                        if (stop != Stop::none)
                            break;
                    }
                    undo(mark);
                    return false;
                }

                auto split(int depth, Prefix & prefix, vector<Prefix> & tasks) -> void
                {
                    if (depth == _p.split_depth) {
                        tasks.push_back(prefix);
                        return;
                    }
                    ++nodes;
                    std::size_t mark = _trail.size();
                    if (! propagate()) {
                        undo(mark);
                        return;
                    }
                    int e = pick();
                    if (e < 0)
                        tasks.push_back(prefix);
                    else {
                        std::size_t after = _trail.size();
                        for (int c : branch_colours(e)) {
                            assign(e, c);
                            prefix.push_back({e, c});
                            split(depth + 1, prefix, tasks);
                            prefix.pop_back();
                            undo(after);
                        }
                    }
                    undo(mark);
                }

                auto witness() const -> std::variant<std::monostate, VertexColouring, EdgeColouring>
                {
                    vector<int> colours(_colour.size());
                    for (std::size_t i = 0 ; i < colours.size() ; ++i)
                        colours[i] = _colour[i] + 1;
                    if (_p.mode == Mode::vertex)
                        return VertexColouring{std::move(colours)};
                    return EdgeColouring{_p.edges, std::move(colours)};
                }

                uint64_t nodes = 0;
                Stop stop = Stop::none;

            private:
                auto allowed(int e, int c) const -> bool
                {
                    int a = _p.target[c];
                    if (_p.mode == Mode::vertex)
                        return ! kernel::find_clique(_p.graph->adjacency().data(),
                                _p.graph->neighbours(e) & _members[c], a - 1);
                    if (a <= 2)
                        return false;
                    auto & cls = _classes[c];
                    auto [u, v] = _p.edges[e];
                    return ! kernel::find_clique(cls.data(), cls[u] & cls[v], a - 2);
                }

                auto assign(int e, int c) -> void
                {
                    _colour[e] = static_cast<std::int8_t>(c);
                    ++_used[c];
                    if (_p.mode == Mode::vertex)
                        _members[c] |= bit(e);
                    else {
                        auto [u, v] = _p.edges[e];
                        _classes[c][u] |= bit(v);
                        _classes[c][v] |= bit(u);
                    }
                    _trail.push_back(e);
                }

                auto undo(std::size_t mark) -> void
                {
                    while (_trail.size() > mark) {
                        int e = _trail.back();
                        _trail.pop_back();
                        int c = _colour[e];
                        _colour[e] = -1;
                        --_used[c];
                        if (_p.mode == Mode::vertex)
                            _members[c] &= ~bit(e);
                        else {
                            auto [u, v] = _p.edges[e];
                            _classes[c][u] &= ~bit(v);
                            _classes[c][v] &= ~bit(u);
                        }
                    }
                }

                auto propagate() -> bool
                {
                    bool changed = true;
                    while (changed) {
                        changed = false;
                        for (int e : _p.order) {
                            if (_colour[e] >= 0)
                                continue;
                            int options = 0, only = -1;
                            for (int c = 0 ; c < _p.colours && options < 2 ; ++c)
                                if (allowed(e, c)) {
                                    ++options;
                                    only = c;
                                }
                            if (options == 0)
                                return false;
                            if (options == 1) {
                                assign(e, only);
                                changed = true;
                            }
                        }
                    }
                    return true;
                }

                auto pick() const -> int
                {
                    for (int e : _p.order)
                        if (_colour[e] < 0)
                            return e;
                    return -1;
                }

                // Allowed colours for e; among unused colours with the same target only the
                // lowest-numbered one is tried.
                auto branch_colours(int e) const -> vector<int>
                {
                    vector<int> result;
                    array<bool, max_order + 1> opened{};
                    for (int c = 0 ; c < _p.colours ; ++c) {
                        int a = _p.target[c];
                        if (_used[c] == 0) {
                            if (opened[a])
                                continue;
                            opened[a] = true;
                        }
                        if (allowed(e, c))
                            result.push_back(c);
                    }
                    return result;
                }

                const Problem & _p;
                vector<std::int8_t> _colour;
                vector<int> _trail;
                array<int, max_colours> _used{};
                array<Mask, max_colours> _members{};
                array<array<Mask, max_order>, max_colours> _classes{};
        };

        struct TaskResult
        {
            bool found = false;
            bool ran = false;
            Stop stop = Stop::none;
            uint64_t nodes = 0;
            std::variant<std::monostate, VertexColouring, EdgeColouring> witness;
        };

        auto run(const Problem & p, const SearchBudget & budget) -> ArrowVerdict
        {
            if (budget.workers < 1)
                throw DomainError("worker count must be positive");

            using clock = std::chrono::steady_clock;
            auto start = clock::now();
            std::optional<clock::time_point> deadline;
            if (budget.max_time)
                deadline = start + *budget.max_time;

            vector<Prefix> tasks;
            uint64_t split_nodes = 0;
            {
                Searcher s(p);
                Prefix prefix;
                s.split(0, prefix, tasks);
                split_nodes = s.nodes;
            }

            uint64_t cap = std::numeric_limits<uint64_t>::max();
            if (budget.max_nodes)
                cap = *budget.max_nodes > split_nodes ? *budget.max_nodes - split_nodes : 0;

            vector<TaskResult> results(tasks.size());
            std::atomic<std::size_t> next{0};
            std::atomic<std::size_t> first_found{tasks.size()};
            std::atomic<bool> timed_out{false};

            auto worker = [&] {
                Searcher s(p);
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size())
                        return;
                    if (i > first_found.load())
                        continue;
                    if (deadline && clock::now() >= *deadline)
                        timed_out.store(true);
                    if (timed_out.load())
                        continue;

                    auto poll = [&] {
                        if (i > first_found.load())
                            return Stop::cancelled;
                        if (timed_out.load() || (deadline && clock::now() >= *deadline)) {
                            timed_out.store(true);
                            return Stop::timed_out;
                        }
                        return Stop::none;
                    };

                    s.reset();
                    auto & r = results[i];
                    r.ran = true;
                    bool found = s.replay(tasks[i]) && s.dfs(cap, poll);
                    r.nodes = s.nodes;
                    r.stop = s.stop;
                    if (found) {
                        r.found = true;
                        r.witness = s.witness();
                        std::size_t seen = first_found.load();
                        while (i < seen && ! first_found.compare_exchange_weak(seen, i))
                            ;
                    }
                }
            };

            std::size_t workers = std::min<std::size_t>(budget.workers, std::max<std::size_t>(tasks.size(), 1));
            if (workers <= 1)
                worker();
            else {
                vector<std::jthread> pool;
                for (std::size_t w = 0 ; w < workers ; ++w)
                    pool.emplace_back(worker);
            }

            ArrowVerdict verdict;
            verdict.stats.subtrees = tasks.size();
            verdict.stats.timed_out = timed_out.load();

            uint64_t consumed = split_nodes;
            bool decided = false;
            if (budget.max_nodes && consumed > *budget.max_nodes) {
                verdict.outcome = Outcome::unknown;
                verdict.stats.frontier = tasks.size();
                decided = true;
            }
            for (std::size_t i = 0 ; i < results.size() && ! decided ; ++i) {
                auto & r = results[i];
                if (! r.ran || r.stop == Stop::cancelled || r.stop == Stop::timed_out) {
                    verdict.outcome = Outcome::unknown;
                    verdict.stats.frontier = tasks.size() - i;
                    decided = true;
                    break;
                }
                consumed += r.nodes;
                if (r.stop == Stop::capped || (budget.max_nodes && consumed > *budget.max_nodes)) {
                    verdict.outcome = Outcome::unknown;
                    verdict.stats.frontier = tasks.size() - i;
                    decided = true;
                }
                else if (r.found) {
                    verdict.outcome = Outcome::free;
                    verdict.witness = std::move(r.witness);
                    decided = true;
                }
            }
            if (! decided)
                verdict.outcome = Outcome::arrows;

            verdict.stats.nodes = consumed;
            verdict.stats.explored = split_nodes;
            for (auto & r : results)
                verdict.stats.explored += r.nodes;
            verdict.stats.seconds = std::chrono::duration<double>(clock::now() - start).count();
            return verdict;
        }
    }

    auto vertex_arrows(const Graph & g, const ArrowTuple & t, const SearchBudget & budget) -> ArrowVerdict
    {
        return run(make_problem(Mode::vertex, g, t), budget);
    }

    auto edge_arrows(const Graph & g, const ArrowTuple & t, const SearchBudget & budget) -> ArrowVerdict
    {
        return run(make_problem(Mode::edge, g, t), budget);
    }
}
