#include <folklab/expr.hh>

#include <cctype>
#include <string>
#include <vector>

using std::string;
using std::string_view;

namespace folklab
{
    namespace
    {
        class Parser
        {
            public:
                Parser(string_view text, const QResolver & q) :
                    _text(text),
                    _q(q)
                {
                }

                auto parse() -> Graph
                {
                    Graph g = expression();
                    skip_space();
                    if (_pos != _text.size())
                        throw ParseError("unexpected trailing input '" + string(_text.substr(_pos)) + "'", _pos);
                    return g;
                }

            private:
                auto skip_space() -> void
                {
                    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                        ++_pos;
                }

                auto expect(char c) -> void
                {
                    skip_space();
                    if (_pos >= _text.size() || _text[_pos] != c)
                        throw ParseError(string("expected '") + c + "'", _pos);
                    ++_pos;
                }

                auto integer() -> int
                {
                    skip_space();
                    std::size_t start = _pos;
                    long value = 0;
                    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
                        value = value * 10 + (_text[_pos] - '0');
                        if (value > 1'000'000)
                            throw ParseError("integer too large", start);
                        ++_pos;
                    }
                    if (_pos == start)
                        throw ParseError("expected an integer", start);
                    return static_cast<int>(value);
                }

                auto word() -> string
                {
                    skip_space();
                    std::size_t start = _pos;
                    while (_pos < _text.size() && std::isalpha(static_cast<unsigned char>(_text[_pos])))
                        ++_pos;
                    return string(_text.substr(start, _pos - start));
                }

                auto expression() -> Graph
                {
                    skip_space();
                    std::size_t start = _pos;
                    string name = word();

                    if (name == "K" || name == "C" || name == "E") {
                        int n = integer();
                        if (name == "K")
                            return complete(n);
                        if (name == "C")
                            return cycle(n);
                        return edgeless(n);
                    }
                    if (name == "Q")
                        return _q();
                    if (name == "circulant") {
                        expect('(');
                        int n = integer();
                        std::vector<int> distances;
                        skip_space();
                        while (_pos < _text.size() && _text[_pos] == ',') {
                            ++_pos;
                            distances.push_back(integer());
                            skip_space();
                        }
                        expect(')');
                        return circulant(n, distances);
                    }
                    if (name == "complement") {
                        expect('(');
                        Graph g = expression();
                        expect(')');
                        return complement(g);
                    }
                    if (name == "join") {
                        expect('(');
                        Graph left = expression();
                        expect(',');
                        Graph right = expression();
                        expect(')');
                        return join(left, right);
                    }
                    if (name.empty())
                        throw ParseError("expected a graph expression", start);
                    throw ParseError("unknown construction '" + name + "'", start);
                }

                string_view _text;
                const QResolver & _q;
                std::size_t _pos = 0;
        };
    }

    auto parse_expression(string_view text, const QResolver & q) -> Graph
    {
        return Parser{text, q}.parse();
    }

    auto mentions_q(string_view text) -> bool
    {
        for (std::size_t i = 0 ; i < text.size() ; ++i)
            if (text[i] == 'Q' && (i == 0 || ! std::isalpha(static_cast<unsigned char>(text[i - 1])))
                    && (i + 1 == text.size() || ! std::isalnum(static_cast<unsigned char>(text[i + 1]))))
                return true;
        return false;
    }
}
