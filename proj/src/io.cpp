#include <domlab/io.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>
#include <vector>

namespace domlab {

namespace {
    constexpr std::string_view graph6_header = ">>graph6<<";
    constexpr int bias = 63;

    auto is_graph6_char(char c) -> bool
    {
        return c >= 63 && c <= 126;
    }
}

auto parse_graph6(std::string_view line) -> Graph
{
    std::size_t base = 0;
    if (line.starts_with(graph6_header)) {
        line.remove_prefix(graph6_header.size());
        base = graph6_header.size();
    }
    while (! line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);

    if (line.empty())
        throw ParseError("empty graph6 string", base);

    for (std::size_t i = 0; i < line.size(); ++i)
        if (! is_graph6_char(line[i]))
            throw ParseError("non-graph6 character (code " + std::to_string(static_cast<unsigned char>(line[i])) + ")", base + i);

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != 126) {
        n = line[0] - bias;
        pos = 1;
    }
    else {
        if (line.size() >= 2 && line[1] == 126)
            throw ParseError("eight-byte length header unsupported", base + 1);
        if (line.size() < 4)
            throw ParseError("truncated length header", base + line.size());
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | (line[i] - bias);
        if (n <= 62)
            throw ParseError("non-canonical four-byte length header for n = " + std::to_string(n), base);
        pos = 4;
    }

    if (n > max_vertices)
        throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds supported " + std::to_string(max_vertices), base);

    std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t byte_count = (bit_count + 5) / 6;
    if (line.size() - pos < byte_count)
        throw ParseError("truncated adjacency data: expected " + std::to_string(byte_count) + " bytes", base + line.size());
    if (line.size() - pos > byte_count)
        throw ParseError("trailing garbage after adjacency data", base + pos + byte_count);

    GraphBuilder b{ static_cast<int>(n) };
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = line[pos + k / 6] - bias;
            if ((byte >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    return std::move(b).build(std::string{ line });
}

auto to_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    std::string out;
    if (n <= 62)
        out += static_cast<char>(n + bias);
    else {
        // 63 <= n <= 64 here; four-byte form
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 63) + bias);
        out += static_cast<char>(((n >> 6) & 63) + bias);
        out += static_cast<char>((n & 63) + bias);
    }

    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out += static_cast<char>(acc + bias);
                acc = used = 0;
            }
        }
    if (used > 0)
        out += static_cast<char>((acc << (6 - used)) + bias);
    return out;
}

namespace {
    auto parse_id(std::string_view tok, std::size_t line_no) -> long
    {
        long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec == std::errc::result_out_of_range)
            throw ParseError("id overflow '" + std::string{ tok } + "'", line_no);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
            throw ParseError("unparsable token '" + std::string{ tok } + "'", line_no);
        if (value >= max_vertices)
            throw ParseError("id " + std::string{ tok } + " exceeds supported range", line_no);
        return value;
    }

    auto tokens(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }
}

auto parse_edge_list(std::string_view text) -> Graph
{
    long declared = -1;
    long max_id = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t line_no = 0;
    bool seen_content = false;

    while (! text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        auto toks = tokens(line);
        if (toks.empty() || toks[0].starts_with('#'))
            continue;

        if (toks[0] == "n") {
            if (seen_content)
                throw ParseError("vertex count declaration must come first", line_no);
            if (toks.size() != 2)
                throw ParseError("expected 'n <count>'", line_no);
            long value = 0;
            auto [ptr, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), value);
            if (ec != std::errc{} || ptr != toks[1].data() + toks[1].size() || value < 0)
                throw ParseError("unparsable vertex count '" + std::string{ toks[1] } + "'", line_no);
            if (value > max_vertices)
                throw ParseError("vertex count exceeds supported " + std::to_string(max_vertices), line_no);
            declared = value;
            seen_content = true;
            continue;
        }
        seen_content = true;

        if (toks.size() != 2)
            throw ParseError("expected 'u v'", line_no);
        auto u = parse_id(toks[0], line_no);
        auto v = parse_id(toks[1], line_no);
        if (u == v)
            throw ParseError("self-loop on vertex " + std::to_string(u), line_no);
        if (declared >= 0 && (u >= declared || v >= declared))
            throw ParseError("id beyond declared vertex count", line_no);
        max_id = std::max({ max_id, u, v });
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    int n = static_cast<int>(declared >= 0 ? declared : max_id + 1);
    return Graph{ n, edges };
}

auto to_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}
