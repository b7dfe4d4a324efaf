#pragma once

#include <optional>

#include "stabspace/bipartition.hpp"
#include "stabspace/stabilizer.hpp"

namespace stabspace {

// Witnessing pair for an entangled cut: the restrictions of G_i and G_j to
// the Q side fail to commute, with exponent tau. Indices are 0-based; add
// one for presentation.
struct CommutationWitness {
    int i = 0;
    int j = 0;
    int tau = 0;
};

// A nonzero stabilizer subspace is entangled across Q|Q̄ iff some pair of
// generator restrictions to Q fails to commute. Returns the first such
// pair in lexicographic order, or nullopt when the cut is separable.
// The verdict is invariant under complementing Q, since the restricted
// exponents over Q and Q̄ sum to zero for commuting generators.
std::optional<CommutationWitness> entangled_witness(const GeneratorSet &s, const Bipartition &q);
bool is_entangled_wrt(const GeneratorSet &s, const Bipartition &q);

struct GeVerdict {
    bool genuinely_entangled = false;
    std::optional<Bipartition> counterexample; // first separable cut in lexicographic order
};

// Scans every canonical nontrivial bipartition; genuinely entangled iff
// all of them are entangled.
GeVerdict is_genuinely_entangled(const GeneratorSet &s);

} // namespace stabspace
