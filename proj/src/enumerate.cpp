#include <domlab/enumerate.hpp>
#include <domlab/io.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace domlab {

namespace {
    using Code = std::uint32_t;

    /// Upper-triangle bits in graph6 column order, first bit most significant.
    auto encode(int n, const std::array<std::uint8_t, max_enumeration_order> & rows) -> Code
    {
        Code code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) | ((rows[i] >> j) & 1);
        return code;
    }

    auto decode(int n, Code code) -> Graph
    {
        int bits = n * (n - 1) / 2;
        GraphBuilder b{ n };
        int k = bits - 1;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, --k)
                if ((code >> k) & 1)
                    b.add_edge(i, j);
        return std::move(b).build();
    }

    auto rows_of(const Graph & g) -> std::array<std::uint8_t, max_enumeration_order>
    {
        std::array<std::uint8_t, max_enumeration_order> rows{};
        for (Vertex v = 0; v < g.order(); ++v)
            rows[v] = static_cast<std::uint8_t>(g.row(v).bits());
        return rows;
    }

    auto canonical_code(int n, const std::array<std::uint8_t, max_enumeration_order> & rows) -> Code
    {
        std::array<int, max_enumeration_order> perm{};
        std::iota(perm.begin(), perm.begin() + n, 0);
        Code best = 0;
        do {
            std::array<std::uint8_t, max_enumeration_order> permuted{};
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if ((rows[a] >> b) & 1)
                        permuted[perm[a]] |= static_cast<std::uint8_t>(1u << perm[b]);
            best = std::max(best, encode(n, permuted));
        } while (std::next_permutation(perm.begin(), perm.begin() + n));
        return best;
    }

    auto check_order(int n) -> void
    {
        if (n < 1 || n > max_enumeration_order)
            throw GraphError("enumeration supports 1 <= n <= " + std::to_string(max_enumeration_order));
    }

    auto class_codes(int n) -> std::set<Code>
    {
        static std::map<int, std::set<Code>> cache;
        static std::recursive_mutex lock;
        std::lock_guard guard{ lock };
        if (auto it = cache.find(n); it != cache.end())
            return it->second;

        std::set<Code> out;
        if (n == 1)
            out.insert(0);
        else
            for (auto code : class_codes(n - 1)) {
                auto smaller = decode(n - 1, code);
                auto rows = rows_of(smaller);
                for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                    auto extended = rows;
                    extended[n - 1] = static_cast<std::uint8_t>(mask);
                    for (int v = 0; v < n - 1; ++v)
                        if ((mask >> v) & 1)
                            extended[v] |= static_cast<std::uint8_t>(1u << (n - 1));
                    out.insert(canonical_code(n, extended));
                }
            }
        cache.emplace(n, out);
        return out;
    }
}

auto canonical_form(const Graph & g) -> Graph
{
    check_order(g.order());
    return decode(g.order(), canonical_code(g.order(), rows_of(g)));
}

auto all_graphs(int n) -> std::vector<Graph>
{
    check_order(n);
    std::vector<std::pair<int, Code>> keyed;
    for (auto code : class_codes(n))
        keyed.emplace_back(std::popcount(code), code);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto & [edges, code] : keyed) {
        auto g = decode(n, code);
        out.push_back(g.with_label(to_graph6(g)));
    }
    return out;
}

auto connected_graphs(int n) -> std::vector<Graph>
{
    auto all = all_graphs(n);
    std::erase_if(all, [] (const Graph & g) { return ! is_connected(g); });
    return all;
}

}
