#pragma once

#include <cstdint>
#include <vector>

#include "stabspace/bipartition.hpp"
#include "stabspace/stabilizer.hpp"
#include "stabspace/zd_linalg.hpp"

// The commutation-vector formalism over Z_d (prime d). Each generator pair
// (i, j) yields the vector v_{i,j} whose n-th entry is the commutation
// exponent of G_i and G_j restricted to site n; commuting generators force
// the entries to sum to zero mod d. K(S) is the span of all v_{i,j} and
// its dimension is therefore at most N-1.

namespace stabspace {

struct KSpace {
    int d = 2;
    int n = 1;
    ZdMatrix basis; // row-reduced, zero rows dropped

    int dim() const { return static_cast<int>(basis.rows()); }
};

// v_{i,j}; i, j are 0-based and must differ. Swapping i and j scales the
// vector by d-1 and leaves the span unchanged.
ZdVector commutation_vector(const GeneratorSet &s, int i, int j);

KSpace build_kspace(const GeneratorSet &s);

// Pairing h(v, phi) = sum_n v_n phi_n mod d between a Z_d vector and a
// bipartition mask. It is linear in v, and zero-sum vectors pair to
// opposite values on complementary masks.
int pairing(const ZdVector &v, const Bipartition &phi);

// Genuine entanglement via the K(S) route: every canonical nontrivial mask
// must pair nontrivially with some basis vector. By linearity of the
// pairing, searching the basis is equivalent to searching all v_{i,j}.
bool ge_from_kspace(const KSpace &k);
bool ge_via_lemma1(const GeneratorSet &s);

struct Theorem2Result {
    bool genuinely_entangled = false;
    int dim_k = 0;
    // d = 2: GE <=> dim K = N-1 must hold; d > 2: dim K = N-1 => GE.
    bool iff_consistent = false;
};

Theorem2Result theorem2_check(const GeneratorSet &s);

// With dim K(S) = N-1, the zero-digit-sum subset of F_{N,d} coincides with
// K(S). Verified by full enumeration when d^(N-1) <= 1e6, otherwise by
// membership of 1e4 sampled zero-sum vectors. Throws when the dimension
// hypothesis fails.
bool lemma2_check(const GeneratorSet &s);

// ceil((N-1)/(d-1)), the conjectured lower bound on dim K(S) for genuinely
// entangled subspaces (proven for k = 2).
int conjecture1_bound(int n, int d);

// Number of masks phi in F_{N,2} with sum_n u_n phi_n = beta mod d,
// computed by the recurrence sigma(n+1, b) = sigma(n, b) + sigma(n, b - u_{n+1})
// in O(N d) instead of 2^N enumeration.
std::uint64_t sigma_count(const ZdVector &u, int beta);
std::vector<std::uint64_t> sigma_counts(const ZdVector &u);

// Checks the counting bound: the minimum over attainable beta of
// sigma(N, beta) is at least 2^(N-(d-1)), trivially 1 when N <= d-1.
bool sigma_min_bound_check(const ZdVector &u);

} // namespace stabspace
