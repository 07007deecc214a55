#include <domlab/corpus.hpp>
#include <domlab/enumerate.hpp>
#include <domlab/generators.hpp>
#include <domlab/io.hpp>

#include <cstdlib>
#include <iostream>

#ifndef DOMLAB_DEFAULT_CORPUS_DIR
#define DOMLAB_DEFAULT_CORPUS_DIR "data/corpus"
#endif

namespace domlab {

CorpusReader::CorpusReader(std::istream & in, CorpusFormat format, bool skip_bad) :
    _in(&in),
    _format(format),
    _skip_bad(skip_bad)
{
}

auto CorpusReader::open(const std::string & path, CorpusFormat format, bool skip_bad) -> CorpusReader
{
    if (path == "-")
        return CorpusReader{ std::cin, format, skip_bad };
    auto file = std::make_unique<std::ifstream>(path);
    if (! *file)
        throw CorpusError("cannot open corpus file '" + path + "'");
    CorpusReader reader{ *file, format, skip_bad };
    reader._owned = std::move(file);
    return reader;
}

auto CorpusReader::next() -> std::optional<CorpusEntry>
{
    return _format == CorpusFormat::Graph6 ? next_graph6() : next_edges();
}

auto CorpusReader::next_graph6() -> std::optional<CorpusEntry>
{
    std::string text;
    while (std::getline(*_in, text)) {
        ++_line;
        if (! text.empty() && text.back() == '\r')
            text.pop_back();
        if (text.empty())
            continue;
        try {
            return CorpusEntry{ parse_graph6(text), _line };
        }
        catch (const ParseError & e) {
            if (! _skip_bad)
                throw CorpusError(e.what(), _line);
            _warnings.push_back("line " + std::to_string(_line) + ": " + e.what());
        }
    }
    if (_in->bad())
        throw CorpusError("read error", _line);
    return std::nullopt;
}

auto CorpusReader::next_edges() -> std::optional<CorpusEntry>
{
    std::string text, block;
    std::size_t start = 0;
    while (true) {
        bool got = static_cast<bool>(std::getline(*_in, text));
        if (got) {
            ++_line;
            if (! text.empty() && text.back() == '\r')
                text.pop_back();
        }
        bool blank = text.find_first_not_of(" \t") == std::string::npos;
        if (got && ! blank) {
            if (block.empty())
                start = _line;
            block += text;
            block += '\n';
            continue;
        }
        if (! block.empty()) {
            try {
                return CorpusEntry{ parse_edge_list(block).with_label("line " + std::to_string(start)), start };
            }
            catch (const std::exception & e) {
                if (! _skip_bad)
                    throw CorpusError(e.what(), start);
                _warnings.push_back("block at line " + std::to_string(start) + ": " + e.what());
                block.clear();
            }
        }
        if (! got)
            break;
    }
    if (_in->bad())
        throw CorpusError("read error", _line);
    return std::nullopt;
}

auto read_corpus(const std::string & path, CorpusFormat format, bool skip_bad, std::vector<std::string> * warnings) -> std::vector<CorpusEntry>
{
    auto reader = CorpusReader::open(path, format, skip_bad);
    std::vector<CorpusEntry> out;
    while (auto entry = reader.next())
        out.push_back(std::move(*entry));
    if (warnings)
        warnings->insert(warnings->end(), reader.warnings().begin(), reader.warnings().end());
    return out;
}

auto corpus_directory() -> std::filesystem::path
{
    if (auto env = std::getenv("DOMLAB_CORPUS_DIR"); env && *env)
        return env;
    return DOMLAB_DEFAULT_CORPUS_DIR;
}

auto bundled_corpus_names() -> std::vector<std::string>
{
    return { "n5", "n6", "n6c", "n7c", "paths", "cycles", "named" };
}

auto generate_bundled(const std::string & name) -> std::vector<Graph>
{
    std::vector<Graph> out;
    auto append = [&] (std::vector<Graph> gs) {
        out.insert(out.end(), gs.begin(), gs.end());
    };

    if (name == "n5" || name == "n6")
        for (int n = 1; n <= (name == "n5" ? 5 : 6); ++n)
            append(all_graphs(n));
    else if (name == "n6c" || name == "n7c")
        for (int n = 1; n <= (name == "n6c" ? 6 : 7); ++n)
            append(connected_graphs(n));
    else if (name == "paths")
        for (int n = 1; n <= 14; ++n)
            out.push_back(path(n));
    else if (name == "cycles")
        for (int n = 3; n <= 14; ++n)
            out.push_back(cycle(n));
    else if (name == "named") {
        for (int p = 1; p <= 6; ++p)
            out.push_back(star(p));
        for (int p = 2; p <= 4; ++p)
            out.push_back(three_stars_triangle(p));
        out.push_back(complete_multipartite({ 3, 3, 3 }));
    }
    else
        throw CorpusError("unknown bundled corpus '" + name + "'");
    return out;
}

auto load_corpus(const std::string & spec, bool skip_bad, std::vector<std::string> * warnings) -> std::vector<Graph>
{
    auto strip = [&] (std::string_view prefix) -> std::optional<std::string> {
        if (spec.starts_with(prefix))
            return spec.substr(prefix.size());
        return std::nullopt;
    };

    std::vector<CorpusEntry> entries;
    if (auto name = strip("bundled:")) {
        bool known = false;
        for (auto & n : bundled_corpus_names())
            known = known || n == *name;
        if (! known)
            throw CorpusError("unknown bundled corpus '" + *name + "'");
        auto file = corpus_directory() / (*name + ".g6");
        if (! std::filesystem::exists(file))
            throw CorpusError("bundled corpus file '" + file.string() + "' missing; set DOMLAB_CORPUS_DIR or run 'domlab corpus --write <dir>'");
        entries = read_corpus(file.string(), CorpusFormat::Graph6, skip_bad, warnings);
    }
    else if (auto file = strip("g6:"))
        entries = read_corpus(*file, CorpusFormat::Graph6, skip_bad, warnings);
    else if (auto file = strip("edges:"))
        entries = read_corpus(*file, CorpusFormat::Edges, skip_bad, warnings);
    else
        entries = read_corpus(spec, CorpusFormat::Graph6, skip_bad, warnings);

    std::vector<Graph> out;
    out.reserve(entries.size());
    for (auto & e : entries)
        out.push_back(std::move(e.graph));
    return out;
}

auto write_bundled_corpora(const std::filesystem::path & dir) -> void
{
    std::filesystem::create_directories(dir);
    for (auto & name : bundled_corpus_names()) {
        std::ofstream out{ dir / (name + ".g6") };
        if (! out)
            throw CorpusError("cannot write corpus file in '" + dir.string() + "'");
        for (auto & g : generate_bundled(name))
            out << to_graph6(g) << '\n';
    }
}

}
