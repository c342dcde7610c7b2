#include <folklab/graph.hh>

#include <string>

using std::string;
using std::string_view;

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed
// big-endian into 6-bit groups, each group offset by 63, zero padded.

namespace folklab
{
    namespace
    {
        constexpr string_view header = ">>graph6<<";

        auto sextet(string_view text, std::size_t pos, std::size_t base) -> int
        {
            unsigned char c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw ParseError("graph6 byte " + std::to_string(c) + " outside 63..126", base + pos);
            return c - 63;
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        std::size_t base = 0;
        if (text.starts_with(header)) {
            text.remove_prefix(header.size());
            base = header.size();
        }
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError("empty graph6 string", base);

        std::size_t pos = 0;
        long n = sextet(text, pos++, base);
        if (n == 63) {
            if (text.size() < 4)
                throw ParseError("truncated graph6 order field", base + text.size());
            if (sextet(text, 1, base) == 63)
                throw ParseError("graph6 orders beyond 258047 are not supported", base + 1);
            n = 0;
            for (int i = 0 ; i < 3 ; ++i)
                n = (n << 6) | sextet(text, pos++, base);
            if (n < 63)
                throw ParseError("non-canonical graph6 order field", base + 1);
        }
        if (n > max_order)
            throw CapacityError("graph6 order " + std::to_string(n) + " exceeds capacity of 64 vertices");

        std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
        std::size_t groups = (bits + 5) / 6;
        if (text.size() - pos != groups)
            throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(groups),
                    base + std::min(text.size(), pos + groups));

        GraphBuilder b(static_cast<int>(n));
        std::size_t k = 0;
        for (std::size_t g = 0 ; g < groups ; ++g) {
            int value = sextet(text, pos + g, base);
            for (int shift = 5 ; shift >= 0 ; --shift, ++k) {
                bool set = (value >> shift) & 1;
                if (k >= bits) {
                    if (set)
                        throw ParseError("non-zero graph6 padding bit", base + pos + g);
                    continue;
                }
                if (set) {
                    // k enumerates (i, j) column by column: j = 1.., i = 0..j-1
                    int j = 1;
                    std::size_t start = 0;
                    while (start + j <= k) {
                        start += j;
                        ++j;
                    }
                    b.add_edge(static_cast<int>(k - start), j);
                }
            }
        }
        return b.build();
    }

    auto emit_graph6(const Graph & g) -> string
    {
        int n = g.order();
        string out;
        if (n <= 62)
            out.push_back(static_cast<char>(n + 63));
        else {
            out.push_back(static_cast<char>(126));
            for (int shift = 12 ; shift >= 0 ; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }

        int value = 0, filled = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(value + 63));
                    value = filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((value << (6 - filled)) + 63));
        return out;
    }
}
