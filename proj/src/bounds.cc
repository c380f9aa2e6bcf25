#include <tclose/bounds.hh>
#include <tclose/errors.hh>
#include <tclose/instability.hh>

#include <algorithm>

using std::size_t;
using std::string;
using std::vector;

namespace tclose
{
    auto to_string(BoundKind kind) -> string
    {
        switch (kind) {
            case BoundKind::Clique:     return "clique";
            case BoundKind::CliqueWeak: return "clique-weak";
            case BoundKind::Plex:       return "plex";
            case BoundKind::Defective:  return "defective";
        }
        return "?";
    }

    namespace
    {
        auto check_window_sum(const ClosureParams & p, TimeStep delta) -> void
        {
            p.validate();
            if (delta < p.d0 + p.d1 + p.d2)
                throw PreconditionError("delta >= d0 + d1 + d2 violated: " + std::to_string(delta) + " < "
                        + std::to_string(p.d0 + p.d1 + p.d2));
        }
    }

    auto theorem_bound(BoundKind kind, const BoundParams & params) -> BigInt
    {
        check_window_sum(params.closure, params.delta);
        if (params.c_or_gamma < 1)
            throw PreconditionError("c >= 1 violated");

        // delta >= d1 here, so the factor is at least 1
        auto exponent = BigInt(params.c_or_gamma - 1)
            + 2 * BigInt(params.eta) * BigInt(params.delta + 1 - params.closure.d1);
        if (exponent > 1'000'000'000)
            throw SizeGuardError("bound exponent too large to materialise");
        BigInt power = BigInt(1) << static_cast<unsigned>(exponent);

        BigInt n = params.n;
        BigInt lifetime = params.lifetime;
        switch (kind) {
            case BoundKind::Clique:
            case BoundKind::CliqueWeak:
                return 3 * power * n * n * lifetime;
            case BoundKind::Plex:
                return 4 * power * boost::multiprecision::pow(n, unsigned(std::max(2 * params.k, params.k + 2))) * lifetime;
            case BoundKind::Defective:
                return 4 * power * boost::multiprecision::pow(n, unsigned(params.k + 2)) * lifetime;
        }
        return 0;
    }

    auto verify_bounds(const TemporalGraph & g, const ClosureParams & p, TimeStep delta, size_t k) -> vector<BoundCheck>
    {
        check_window_sum(p, delta);

        size_t c = closure_number(g, p);
        size_t gamma = weak_closure_number(g, p).value + 1;
        size_t local_eta = local_instability(g);
        size_t pairwise_eta = pairwise_instability(g, p.d1, PairwiseMode::ExactLength);
        // pairwise 2 eta-instability stands in for local eta-instability
        size_t substituted_eta = (pairwise_eta + 1) / 2;

        size_t cliques = enumerate_maximal_cliques(g, delta).size();
        size_t plexes = enumerate_maximal_plexes(g, delta, k).size();
        size_t defective = enumerate_maximal_defective(g, delta, k).size();

        struct Row
        {
            const char * theorem;
            BoundKind kind;
            size_t closure;
            size_t count;
        };
        const Row rows[] = {
            { "theorem1", BoundKind::Clique, c, cliques },
            { "theorem2", BoundKind::CliqueWeak, gamma, cliques },
            { "theorem4", BoundKind::Plex, gamma, plexes },
            { "theorem4", BoundKind::Defective, gamma, defective }
        };

        vector<BoundCheck> result;
        for (auto & row : rows)
            for (auto [form, eta] : { std::pair{"local", local_eta}, std::pair{"pairwise", substituted_eta} }) {
                BoundParams params{row.closure, eta, p, delta,
                    (row.kind == BoundKind::Plex || row.kind == BoundKind::Defective) ? k : 0,
                    g.size(), g.lifetime()};
                auto bound = theorem_bound(row.kind, params);
                result.push_back(BoundCheck{row.theorem, row.kind, form, row.count, bound, params, row.count <= bound});
            }
        return result;
    }
}
