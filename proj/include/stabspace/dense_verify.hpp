#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabspace/dense.hpp"
#include "stabspace/entanglement.hpp"
#include "stabspace/stabilizer.hpp"

// Desk-scale numerical checks that entangled cuts of a stabilizer
// subspace are NPT: every sampled state supported on the subspace gets a
// strictly negative partial-transpose eigenvalue, while the witness
// B = G_i + G_i^dag + G_j + G_j^dag has expectation 4 on the subspace but
// at most 2 sqrt(3 + cos(2 pi tau / d)) < 4 on PPT states.

namespace stabspace {

// An entangled cut must dip below this on every sampled state; the PPT
// side uses the looser value so the two verdicts cannot flap.
inline constexpr double kNptEigenTolerance = -1e-8;
inline constexpr double kPptEigenTolerance = -1e-9;
inline constexpr double kWitnessTraceTolerance = 1e-9;
inline constexpr double kProductOverlapGap = 1e-6;

// rho = P W W^dag P / tr, W a seeded complex Gaussian with `rank` columns;
// supported on the stabilized subspace by construction.
DenseOperator random_state_on(const GeneratorSet &s, std::uint64_t seed, int rank, long long dense_cap = kDefaultDenseCap);

struct BWitness {
    DenseOperator op;
    int tau = 0;
    double bound = 0.0; // 2 sqrt(3 + cos(2 pi tau / d))
};

// Requires a noncommuting restriction pair: tau != 0 across q.
BWitness b_witness(const GeneratorSet &s, int i, int j, const Bipartition &q, long long dense_cap = kDefaultDenseCap);

struct NptCutReport {
    std::string bipartition; // canonical bit string
    bool entangled = false;
    std::optional<CommutationWitness> witness;
    double bound = 0.0;
    std::vector<double> min_eigenvalues; // per sample, or the product example
    std::vector<double> witness_traces;  // tr(B rho) per sample
    double product_overlap = 0.0;        // separable cuts only
    std::string verdict;                 // "npt" | "ppt" | "violation"
};

struct NptReport {
    int d = 2;
    int n = 1;
    int samples = 0;
    std::uint64_t seed = 0;
    bool ge = false;        // all cuts entangled
    bool fully_npt = false; // all cuts entangled and every sample NPT
    std::vector<NptCutReport> cuts;
};

// Scans every canonical nontrivial cut with `samples` seeded states whose
// ranks cycle 1..dim V. Entangled cuts assert the NPT eigenvalue and the
// witness trace; separable cuts search for an explicit product state in
// the subspace and record its (positive) partial-transpose spectrum.
NptReport verify_npt(const GeneratorSet &s, int samples, std::uint64_t seed, long long dense_cap = kDefaultDenseCap);

std::string to_json_string(const NptReport &report);

} // namespace stabspace
