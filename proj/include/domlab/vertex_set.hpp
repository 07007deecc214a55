#ifndef DOMLAB_VERTEX_SET_HPP
#define DOMLAB_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace domlab {

/// Vertex ids are dense in 0..n-1.
using Vertex = int;

/// Largest vertex count supported by the bit-packed representation.
inline constexpr int max_vertices = 64;

/**
 * A subset of 0..63 packed into one machine word. This is the currency of
 * every solver answer and witness; it is interpreted against whichever graph
 * it came from.
 */
class VertexSet
{
    public:
        using Word = std::uint64_t;

        constexpr VertexSet() = default;
        constexpr explicit VertexSet(Word bits) : _bits(bits) {}

        static constexpr auto of(std::initializer_list<Vertex> vs) -> VertexSet
        {
            VertexSet s;
            for (auto v : vs)
                s.insert(v);
            return s;
        }

        /// {0, 1, ..., n-1}.
        static constexpr auto full(int n) -> VertexSet
        {
            return VertexSet{ n >= 64 ? ~Word{ 0 } : ((Word{ 1 } << n) - 1) };
        }

        static constexpr auto singleton(Vertex v) -> VertexSet
        {
            return VertexSet{ Word{ 1 } << v };
        }

        constexpr auto bits() const -> Word { return _bits; }
        constexpr auto contains(Vertex v) const -> bool { return (_bits >> v) & 1; }
        constexpr auto empty() const -> bool { return _bits == 0; }
        constexpr auto size() const -> int { return std::popcount(_bits); }

        constexpr auto insert(Vertex v) -> void { _bits |= Word{ 1 } << v; }
        constexpr auto erase(Vertex v) -> void { _bits &= ~(Word{ 1 } << v); }

        /// Lowest member; undefined on the empty set.
        constexpr auto first() const -> Vertex { return std::countr_zero(_bits); }

        /// Highest member + 1, or 0 for the empty set.
        constexpr auto bound() const -> int { return 64 - std::countl_zero(_bits); }

        constexpr auto with(Vertex v) const -> VertexSet { return VertexSet{ _bits | (Word{ 1 } << v) }; }
        constexpr auto without(Vertex v) const -> VertexSet { return VertexSet{ _bits & ~(Word{ 1 } << v) }; }

        constexpr auto is_subset_of(VertexSet o) const -> bool { return (_bits & ~o._bits) == 0; }
        constexpr auto intersects(VertexSet o) const -> bool { return (_bits & o._bits) != 0; }

        friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{ a._bits | b._bits }; }
        friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{ a._bits & b._bits }; }
        friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{ a._bits & ~b._bits }; }
        constexpr auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
        constexpr auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
        constexpr auto operator-=(VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }

        friend constexpr auto operator==(VertexSet, VertexSet) -> bool = default;

        /// Members in increasing order.
        auto members() const -> std::vector<Vertex>
        {
            std::vector<Vertex> out;
            out.reserve(size());
            for (Word w = _bits; w != 0; w &= w - 1)
                out.push_back(std::countr_zero(w));
            return out;
        }

        /// "{0,2,5}"
        auto to_string() const -> std::string;

        /// Iteration in increasing vertex order.
        class iterator
        {
            public:
                using value_type = Vertex;
                using difference_type = std::ptrdiff_t;

                constexpr iterator() = default;
                constexpr explicit iterator(Word w) : _w(w) {}
                constexpr auto operator*() const -> Vertex { return std::countr_zero(_w); }
                constexpr auto operator++() -> iterator & { _w &= _w - 1; return *this; }
                constexpr auto operator++(int) -> iterator { auto t = *this; ++*this; return t; }
                friend constexpr auto operator==(iterator, iterator) -> bool = default;

            private:
                Word _w = 0;
        };

        constexpr auto begin() const -> iterator { return iterator{ _bits }; }
        constexpr auto end() const -> iterator { return iterator{}; }

    private:
        Word _bits = 0;
};

/**
 * Orders equal-size sets by their sorted member lists, so {0,1,5} < {0,2,3}.
 * Smaller sets sort first. This is the tie-breaking order for witnesses and
 * enumeration output.
 */
auto lex_less(VertexSet a, VertexSet b) -> bool;

}

#endif
