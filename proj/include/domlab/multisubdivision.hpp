#ifndef DOMLAB_MULTISUBDIVISION_HPP
#define DOMLAB_MULTISUBDIVISION_HPP

#include <domlab/criticality.hpp>
#include <domlab/graph.hpp>
#include <domlab/properties.hpp>
#include <domlab/solver.hpp>

#include <optional>
#include <string>
#include <vector>

namespace domlab {

/// Deepest subdivision count any stated chain reaches.
inline constexpr int default_msd_cap = 6;

/**
 * A multisubdivision number. "Beyond cap" means no qualifying t was seen
 * up to the cap and nothing rules one out; "proven infinite" is reserved
 * for cases where theory forbids any t (msd- under plain domination).
 */
class MsdValue
{
    public:
        enum class Kind { Finite, BeyondCap, ProvenInfinite };

        static auto finite(int t) -> MsdValue { return MsdValue{ Kind::Finite, t }; }
        static auto beyond_cap(int cap) -> MsdValue { return MsdValue{ Kind::BeyondCap, cap }; }
        static auto proven_infinite() -> MsdValue { return MsdValue{ Kind::ProvenInfinite, 0 }; }

        auto kind() const -> Kind { return _kind; }
        auto is_finite() const -> bool { return _kind == Kind::Finite; }
        /// The t for Finite, the cap for BeyondCap.
        auto value() const -> int { return _value; }

        /// "3", ">6" or "inf".
        auto to_string() const -> std::string;

        /// Finite (by value) < BeyondCap < ProvenInfinite.
        friend auto min(const MsdValue & a, const MsdValue & b) -> MsdValue;

        friend auto operator==(const MsdValue &, const MsdValue &) -> bool = default;

    private:
        MsdValue(Kind kind, int value) : _kind(kind), _value(value) {}

        Kind _kind;
        int _value;
};

struct MsdProfile
{
    Edge edge;
    int cap = default_msd_cap;
    /// gamma(G_{e,t}) for t = 0..cap; t = 0 is G itself.
    std::vector<Gamma> values;
    MsdValue msd = MsdValue::beyond_cap(0);
    MsdValue msd_plus = MsdValue::beyond_cap(0);
    MsdValue msd_minus = MsdValue::beyond_cap(0);
    /// False when some value is undefined; msd fields are then meaningless.
    bool in_scope = true;
};

/// Throws GraphError if e is absent or cap < 1.
auto profile(const Graph & g, const Edge & e, const PropertyDescriptor & p, int cap = default_msd_cap) -> MsdProfile;

struct MsdNumbers
{
    MsdValue msd = MsdValue::beyond_cap(0);
    MsdValue msd_plus = MsdValue::beyond_cap(0);
    MsdValue msd_minus = MsdValue::beyond_cap(0);
    bool in_scope = true;
};

/// Edge-wise minima. Throws GraphError on edgeless g.
auto msd_graph(const Graph & g, const PropertyDescriptor & p, int cap = default_msd_cap) -> MsdNumbers;

struct SClass
{
    int class_index = 0;
};

struct SClassResult
{
    std::optional<SClass> sclass;
    /// Set instead of sclass when msd(G) > 3 was observed or a value was undefined.
    std::string counterexample;
};

/// Requires a hereditary property closed under union with K1 and an edge.
auto s_class(const Graph & g, const PropertyDescriptor & p) -> SClassResult;

struct Multi1Check
{
    Gamma gamma_g = Gamma::undefined();
    Gamma gamma_deleted = Gamma::undefined();
    Gamma gamma_three = Gamma::undefined();
    /// gamma(G-e) <= gamma(G_{e,3}) <= gamma(G-e) + 1
    bool sandwich = false;
    /// gamma(G-e) = gamma(G_{e,3})
    bool a1 = false;
    /// a deletion-critical end of e whose partner lies in a minimum set of G minus that end
    bool a2 = false;
    /// gamma(G-e) = gamma(G) + 1; present only for hereditary properties
    std::optional<bool> a3;
};

/// Requires an induced-hereditary property closed under union with K1.
auto check_multi1(const Graph & g, const Edge & e, const PropertyDescriptor & p) -> Multi1Check;

/**
 * At least one of: u in V-(G-e) and v in some gamma-set of G-u; or the
 * same with u and v exchanged. Shared by the triple-subdivision and
 * edge-addition checks.
 */
auto deletion_pair_condition(const Graph & g, const Edge & e, const PropertyDescriptor & p) -> bool;

struct Multi4Check
{
    /// gamma(G) = gamma(G_{e,3})  <=>  gamma(G) = gamma(G-e) + 1
    bool iff_holds = false;
    /// Evaluated only when gamma(G) = gamma(G-e) + 1.
    std::optional<bool> chain;
    bool msd_le_3 = false;
    MsdProfile profile;
};

/// Requires a hereditary property closed under union with K1.
auto check_multi4(const Graph & g, const Edge & e, const PropertyDescriptor & p) -> Multi4Check;

/**
 * The seven-term chain for an edge whose deletion lowers gamma by one:
 * g0 = g1+1 = g2+1 = g3 = g4 = g5 = g6-1, msd = msd- = 1, msd+ = 6.
 * The profile must reach t = 6.
 */
auto chain_holds(const MsdProfile & prof) -> bool;

}

#endif
