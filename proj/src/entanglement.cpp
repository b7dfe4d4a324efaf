#include "stabspace/entanglement.hpp"

namespace stabspace {

std::optional<CommutationWitness> entangled_witness(const GeneratorSet &s, const Bipartition &q) {
    if (q.sites() != s.sites()) throw std::invalid_argument("bipartition site count mismatch");
    if (q.is_trivial()) throw std::invalid_argument("entanglement is undefined for trivial bipartitions");
    for (int i = 0; i < s.size(); ++i) {
        for (int j = i + 1; j < s.size(); ++j) {
            const int tau = commutation_phase(s.generator(i), s.generator(j), q.mask());
            if (tau != 0) return CommutationWitness{i, j, tau};
        }
    }
    return std::nullopt;
}

bool is_entangled_wrt(const GeneratorSet &s, const Bipartition &q) {
    return entangled_witness(s, q).has_value();
}

GeVerdict is_genuinely_entangled(const GeneratorSet &s) {
    const int n = s.sites();
    if (n == 1) return {true, std::nullopt}; // no nontrivial cuts to fail

    // Precompute the per-site exponent vectors of all pairs once; the cut
    // scan then reduces to masked sums.
    const int d = s.dim();
    std::vector<std::vector<int>> pair_taus;
    for (int i = 0; i < s.size(); ++i) {
        for (int j = i + 1; j < s.size(); ++j) {
            std::vector<int> taus(static_cast<std::size_t>(n));
            for (int site = 0; site < n; ++site) {
                taus[site] = commutation_phase(s.generator(i), s.generator(j), 1ull << site);
            }
            pair_taus.push_back(std::move(taus));
        }
    }

    const std::uint64_t cuts = Bipartition::canonical_cut_count(n);
    for (std::uint64_t index = 1; index <= cuts; ++index) {
        const Bipartition cut = Bipartition::canonical_cut(n, index);
        const std::uint64_t mask = cut.mask();
        bool entangled = false;
        for (const auto &taus : pair_taus) {
            long long total = 0;
            for (int site = 0; site < n; ++site) {
                if ((mask >> site) & 1ull) total += taus[site];
            }
            if (total % d != 0) {
                entangled = true;
                break;
            }
        }
        if (!entangled) return {false, cut};
    }
    return {true, std::nullopt};
}

} // namespace stabspace
