#pragma once

#include <tclose/closure.hh>
#include <tclose/enumerate.hh>
#include <tclose/temporal_graph.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace tclose
{
    using BigInt = boost::multiprecision::cpp_int;

    enum class BoundKind
    {
        Clique,     ///< 3 * 2^(c - 1 + 2 eta (delta + 1 - d1)) * n^2 * lifetime
        CliqueWeak, ///< as Clique, with the weak closure number gamma in place of c
        Plex,       ///< 4 * 2^(gamma - 1 + 2 eta (delta + 1 - d1)) * n^max(2k, k + 2) * lifetime
        Defective   ///< 4 * 2^(gamma - 1 + 2 eta (delta + 1 - d1)) * n^(k + 2) * lifetime
    };

    auto to_string(BoundKind kind) -> std::string;

    struct BoundParams
    {
        std::size_t c_or_gamma = 1;
        std::size_t eta = 0;
        ClosureParams closure;
        TimeStep delta = 0;
        std::size_t k = 0;
        std::size_t n = 0;
        TimeStep lifetime = 1;
    };

    /// Throws PreconditionError unless delta >= d0 + d1 + d2 and c_or_gamma >= 1.
    auto theorem_bound(BoundKind kind, const BoundParams & params) -> BigInt;

    struct BoundCheck
    {
        std::string theorem;       ///< "theorem1", "theorem2" or "theorem4"
        BoundKind kind;
        std::string instability;   ///< "local" or "pairwise"
        std::size_t observed_count;
        BigInt bound_value;
        BoundParams params;
        bool satisfied;
    };

    /**
     * Measure c, gamma and the instabilities of g, count its maximal
     * delta-cliques, (delta, k)-plexes and (delta, k)-defective cliques, and
     * compare each count with the matching theorem-side value. Every bound is
     * evaluated twice: with the local instability, and with half the
     * pairwise instability (rounded up) in its place.
     */
    auto verify_bounds(const TemporalGraph & g, const ClosureParams & p, TimeStep delta, std::size_t k)
        -> std::vector<BoundCheck>;
}
