#include <folklab/arrowing.hh>
#include <folklab/clique.hh>

#include <sstream>

using std::string;
using std::vector;

namespace folklab
{
    auto CnfDocument::to_dimacs() const -> string
    {
        std::ostringstream out;
        for (auto & c : comments)
            out << "c " << c << '\n';
        out << "p cnf " << variables << ' ' << clauses.size() << '\n';
        for (auto & clause : clauses) {
            for (int literal : clause)
                out << literal << ' ';
            out << "0\n";
        }
        return out.str();
    }

    auto export_cnf(const Graph & g, const ArrowTuple & t, Mode mode) -> CnfDocument
    {
        if (t.size() != 2)
            throw ArityError("CNF export supports two-colour tuples only, got " + t.to_string());

        CnfDocument doc;
        auto edges = g.edges();
        vector<int> edge_var(max_order * max_order, 0);

        doc.comments.push_back("folklab free-colouring instance: mode=" + to_string(mode) + " tuple=" + t.to_string()
                + " graph6=" + emit_graph6(g));
        doc.comments.push_back("variable true = colour 1, false = colour 2; satisfiable iff a free colouring exists");
        if (mode == Mode::vertex) {
            doc.variables = g.order();
            for (int v = 0 ; v < g.order() ; ++v)
                doc.comments.push_back("var " + std::to_string(v + 1) + " = vertex " + std::to_string(v));
        }
        else {
            doc.variables = static_cast<int>(edges.size());
            for (std::size_t i = 0 ; i < edges.size() ; ++i) {
                int var = static_cast<int>(i) + 1;
                edge_var[edges[i].u * max_order + edges[i].v] = var;
                edge_var[edges[i].v * max_order + edges[i].u] = var;
                doc.comments.push_back("var " + std::to_string(var) + " = edge " + std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v));
            }
        }

        for (int i = 0 ; i < 2 ; ++i) {
            int sign = i == 0 ? -1 : 1;
            // in edge mode any single edge of colour i already is a 2-clique
            if (mode == Mode::edge && t[i] <= 2) {
                for (std::size_t e = 0 ; e < edges.size() ; ++e)
                    doc.clauses.push_back({sign * static_cast<int>(e + 1)});
                continue;
            }
            for_each_clique(g, t[i], [&] (VertexSet clique) {
                vector<int> clause;
                auto members = clique.members();
                if (mode == Mode::vertex)
                    for (int v : members)
                        clause.push_back(sign * (v + 1));
                else
                    for (std::size_t x = 0 ; x < members.size() ; ++x)
                        for (std::size_t y = x + 1 ; y < members.size() ; ++y)
                            clause.push_back(sign * edge_var[members[x] * max_order + members[y]]);
                doc.clauses.push_back(std::move(clause));
            });
        }
        return doc;
    }
}
