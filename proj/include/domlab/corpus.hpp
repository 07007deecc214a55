#ifndef DOMLAB_CORPUS_HPP
#define DOMLAB_CORPUS_HPP

#include <domlab/graph.hpp>

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace domlab {

enum class CorpusFormat { Graph6, Edges };

/// Corpus I/O or parse failure. Line is 1-based, 0 when not applicable.
class CorpusError : public std::runtime_error
{
    public:
        CorpusError(const std::string & what, std::size_t line = 0) :
            std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
            _line(line)
        {
        }

        auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
};

struct CorpusEntry
{
    Graph graph;
    /// First line of the record in the source.
    std::size_t line = 0;
};

/**
 * Lazily reads graphs from a stream. graph6 sources hold one graph per
 * line; edge-list sources hold blocks in parse_edge_list() syntax separated
 * by blank lines. With skip_bad a malformed record becomes a warning
 * instead of an exception.
 */
class CorpusReader
{
    public:
        CorpusReader(std::istream & in, CorpusFormat format, bool skip_bad = false);

        /// Opens a file; "-" means standard input.
        static auto open(const std::string & path, CorpusFormat format, bool skip_bad = false) -> CorpusReader;

        auto next() -> std::optional<CorpusEntry>;
        auto warnings() const -> const std::vector<std::string> & { return _warnings; }

    private:
        std::unique_ptr<std::ifstream> _owned;
        std::istream * _in;
        CorpusFormat _format;
        bool _skip_bad;
        std::size_t _line = 0;
        std::vector<std::string> _warnings;

        auto next_graph6() -> std::optional<CorpusEntry>;
        auto next_edges() -> std::optional<CorpusEntry>;
};

/// Reads a whole source into memory.
auto read_corpus(const std::string & path, CorpusFormat format, bool skip_bad = false,
        std::vector<std::string> * warnings = nullptr) -> std::vector<CorpusEntry>;

/// Directory holding the bundled corpus files; DOMLAB_CORPUS_DIR overrides.
auto corpus_directory() -> std::filesystem::path;

/// Names accepted after "bundled:".
auto bundled_corpus_names() -> std::vector<std::string>;

/**
 * Generates a bundled corpus in memory:
 *   n5, n6     every graph on 1..5 / 1..6 vertices
 *   n6c, n7c   every connected graph on 1..6 / 1..7 vertices
 *   paths      P_1 .. P_14        cycles  C_3 .. C_14
 *   named      stars K_{1,1..6}, three stars on a triangle (p = 2..4), K_{3,3,3}
 */
auto generate_bundled(const std::string & name) -> std::vector<Graph>;

/**
 * Resolves a corpus source: "bundled:<name>", "g6:<file>", "edges:<file>",
 * or a bare path (graph6). Bundled names are read from corpus_directory().
 */
auto load_corpus(const std::string & spec, bool skip_bad = false,
        std::vector<std::string> * warnings = nullptr) -> std::vector<Graph>;

/// Writes every bundled corpus as <dir>/<name>.g6.
auto write_bundled_corpora(const std::filesystem::path & dir) -> void;

}

#endif
