/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/errors.hh>
#include <ordsub/og_format.hh>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

using std::string;
using std::string_view;
using std::vector;

namespace ordsub
{
    using std::to_string;

    namespace
    {
        struct Line
        {
            int number;
            vector<string_view> words;
        };

        auto split_lines(string_view text) -> vector<Line>
        {
            vector<Line> result;
            int number = 0;
            while (! text.empty()) {
                auto end = text.find('\n');
                auto line = text.substr(0, end);
                text = end == string_view::npos ? string_view{ } : text.substr(end + 1);
                ++number;
                if (auto hash = line.find('#') ; hash != string_view::npos)
                    line = line.substr(0, hash);

                Line parsed{ number, { } };
                for (std::size_t p = 0 ; p < line.size() ; ) {
                    auto is_space = [] (char c) { return c == ' ' || c == '\t' || c == '\r'; };
                    if (is_space(line[p])) {
                        ++p;
                        continue;
                    }
                    auto q = p;
                    while (q < line.size() && ! is_space(line[q]))
                        ++q;
                    parsed.words.push_back(line.substr(p, q - p));
                    p = q;
                }
                if (! parsed.words.empty())
                    result.push_back(std::move(parsed));
            }
            return result;
        }

        [[noreturn]] auto fail(int line, const string & what) -> void
        {
            throw ParseError("line " + std::to_string(line) + ": " + what);
        }

        auto number(const Line & line, string_view word) -> long
        {
            long value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{ } || ptr != word.data() + word.size())
                fail(line.number, "expected an integer, got '" + string(word) + "'");
            return value;
        }

        auto expect(const vector<Line> & lines, std::size_t at, string_view keyword, std::size_t arity) -> const Line &
        {
            if (at >= lines.size())
                fail(lines.empty() ? 0 : lines.back().number, "missing '" + string(keyword) + "' line");
            auto & line = lines[at];
            if (line.words[0] != keyword || line.words.size() != arity + 1)
                fail(line.number, "expected '" + string(keyword) + "' with " + std::to_string(arity) + " argument(s)");
            return line;
        }
    }

    auto parse_og(string_view text) -> OrderedGraph
    {
        auto lines = split_lines(text);
        std::size_t at = 0;

        auto & header = expect(lines, at++, "og", 1);
        if (header.words[1] != "1")
            fail(header.number, "unsupported version '" + string(header.words[1]) + "'");

        auto & kind_line = expect(lines, at++, "kind", 1);
        GraphKind kind;
        if (kind_line.words[1] == "undirected")
            kind = GraphKind::undirected;
        else if (kind_line.words[1] == "directed")
            kind = GraphKind::directed;
        else if (kind_line.words[1] == "bipartite")
            kind = GraphKind::bipartite;
        else
            fail(kind_line.number, "unknown kind '" + string(kind_line.words[1]) + "'");

        auto & n_line = expect(lines, at++, "n", 1);
        long n = number(n_line, n_line.words[1]);
        if (n < 0 || n > 1'000'000)
            fail(n_line.number, "vertex count out of range");

        std::optional<vector<Side>> sides;
        if (at < lines.size() && lines[at].words[0] == "side") {
            auto & side_line = expect(lines, at++, "side", 1);
            auto s = side_line.words[1];
            if (static_cast<long>(s.size()) != n)
                fail(side_line.number, "side string must have length n");
            if (kind == GraphKind::directed)
                fail(side_line.number, "digraphs take no side line");
            sides.emplace();
            for (char c : s) {
                if (c != '0' && c != '1')
                    fail(side_line.number, "side string must be 0/1");
                sides->push_back(c == '0' ? Side::x : Side::y);
            }
        }
        else if (n == 0 && kind == GraphKind::bipartite)
            sides.emplace();
        if (kind == GraphKind::bipartite && ! sides)
            fail(n_line.number, "bipartite graphs need a side line");

        auto & m_line = expect(lines, at++, "m", 1);
        long m = number(m_line, m_line.words[1]);
        if (m < 0)
            fail(m_line.number, "edge count out of range");

        vector<Edge> edges;
        std::set<Edge> seen;
        for (long t = 0 ; t < m ; ++t) {
            auto & e = expect(lines, at++, "e", 2);
            long i = number(e, e.words[1]), j = number(e, e.words[2]);
            if (i < 1 || i > n || j < 1 || j > n)
                fail(e.number, "endpoint out of range");
            if (kind != GraphKind::directed && i >= j)
                fail(e.number, i == j ? "loops need a digraph" : "undirected edges need i < j");
            if (! seen.emplace(i, j).second)
                fail(e.number, "repeated edge");
            edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
        }
        if (at != lines.size())
            fail(lines[at].number, "trailing content");

        try {
            return OrderedGraph(kind, static_cast<int>(n), edges, std::move(sides));
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(e.what());
        }
    }

    auto print_og(const OrderedGraph & g) -> string
    {
        std::ostringstream out;
        out << "og 1\nkind " << to_string(g.kind()) << "\nn " << g.size() << '\n';
        if (g.has_sides() && g.size() > 0) {
            out << "side ";
            for (int v = 0 ; v < g.size() ; ++v)
                out << (g.side(v) == Side::x ? '0' : '1');
            out << '\n';
        }
        auto edges = g.edges();
        out << "m " << edges.size() << '\n';
        for (auto [i, j] : edges)
            out << "e " << i + 1 << ' ' << j + 1 << '\n';
        return out.str();
    }

    auto read_og_file(const string & path) -> OrderedGraph
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw ParseError("cannot read '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        try {
            return parse_og(buffer.str());
        }
        catch (const ParseError & e) {
            throw ParseError(path + ": " + e.what());
        }
    }

    auto write_og_file(const string & path, const OrderedGraph & g) -> void
    {
        std::ofstream out(path, std::ios::binary);
        out << print_og(g);
        if (! out)
            throw std::runtime_error("cannot write '" + path + "'");
    }
}
