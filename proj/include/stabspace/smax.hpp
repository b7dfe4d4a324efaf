#pragma once

#include <vector>

#include "stabspace/stabilizer.hpp"
#include "stabspace/zd_linalg.hpp"

// Recursive family of genuinely entangled stabilizers of conjecturally
// maximal subspace dimension d^(N - k_min). The two-site base is
// G_1 = X (x) X^(d-1), G_2 = Z (x) Z, and each added site either appends a
// fresh generator (when k_min grows) or feeds a chosen generator l with a
// matched pair of single-site factors whose commutation exponents keep the
// row sums at zero. P_i denotes X for odd i and Z for even i (1-based).

namespace stabspace::smax {

// Smallest k with k(k-1)/2 >= ceil((N-1)/(d-1)); also evaluated through
// the closed ceiling-of-square-root form in exact integer arithmetic, and
// the two are cross-checked.
int k_min(int n, int d);

// Largest s >= 0 with ceil((N-1-s)/(d-1)) = ceil((N-1)/(d-1)); lies in
// [0, d-2].
int m_of(int n, int d);

// l(N) = k(k-1)/2 + 1 - ceil((N-1)/(d-1)), the generator updated on a
// same-k step; sweeps k-1 down to 1 across a constant-k window.
int l_of(int n, int d);

enum class Branch { base, k_increase, same_k };

struct Params {
    int n = 2;
    int d = 2;
    int k = 2;
    Branch branch = Branch::base;
    int l = 0; // meaningful on same_k steps
    int m = 0; // meaningful on same_k steps
};

Params params(int n, int d);

// The k_min(N, d) generators on N sites, all phases zero. The result
// validates as a stabilizer, is genuinely entangled, and its K-space
// dimension equals ceil((N-1)/(d-1)).
GeneratorSet construct(int n, int d);

// The expected K(S) basis u_i: consecutive windows of d ones overlapping
// by one position, the last window padded at position N with
// a = ceil((N-1)/(d-1))(d-1) - (N-1) + 1. Spans the same row space as the
// commutation vectors of construct(n, d).
std::vector<ZdVector> expected_basis(int n, int d);

} // namespace stabspace::smax
