#ifndef DOMLAB_IO_HPP
#define DOMLAB_IO_HPP

#include <domlab/graph.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace domlab {

/// Parse failure; offset is the byte (graph6) or line (edge list) at fault.
class ParseError : public std::runtime_error
{
    public:
        ParseError(const std::string & what, std::size_t offset) :
            std::runtime_error(what + " at offset " + std::to_string(offset)),
            _offset(offset)
        {
        }

        auto offset() const -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
};

/**
 * Decodes one graph6 line. A leading ">>graph6<<" header and a trailing CR/LF
 * are tolerated; anything else outside the encoded length is an error. Both
 * the one-byte (n <= 62) and four-byte (n <= 258047) length headers are
 * understood, but only n <= 64 is representable.
 */
auto parse_graph6(std::string_view line) -> Graph;

/// Canonical graph6 encoding (zero padding bits, shortest length header).
auto to_graph6(const Graph & g) -> std::string;

/**
 * Lines of "u v"; an optional first line "n <count>" fixes the vertex count,
 * otherwise n = max id + 1. Blank lines and lines starting with '#' are
 * skipped; duplicate edges are merged.
 */
auto parse_edge_list(std::string_view text) -> Graph;

auto to_edge_list(const Graph & g) -> std::string;

}

#endif
