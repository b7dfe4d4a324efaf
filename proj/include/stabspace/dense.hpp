#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "stabspace/bipartition.hpp"
#include "stabspace/pauli.hpp"

// Dense-matrix escape hatch. Site ordering in tensor products is
// big-endian: site 1 is the most significant digit of a basis index.
// Partial-transpose indexing relies on this convention.

namespace stabspace {

inline constexpr long long kDefaultDenseCap = 1024;

// d^n with an overflow guard.
long long checked_pow(int base, int exponent);

struct DenseOperator {
    int d = 2;
    int sites = 1;
    Eigen::MatrixXcd mat;

    long long dim() const { return mat.rows(); }
};

// Largest |M - M^dagger| entry.
double hermiticity_defect(const DenseOperator &op);

// Explicit d^N x d^N matrix of a word, built from the shift matrix
// X|i> = |i+1 mod d> and the clock matrix Z|i> = w^i |i>.
DenseOperator dense_matrix(const PauliWord &w, long long dense_cap = kDefaultDenseCap);

// Transposes the tensor factors belonging to Q. Trace and hermiticity are
// preserved; applying the same transpose twice is the identity.
DenseOperator partial_transpose(const DenseOperator &op, const Bipartition &q);

// Smallest eigenvalue of a Hermitian operator; throws when the input fails
// the hermiticity check at tolerance 1e-10.
double min_eigenvalue(const DenseOperator &op);

// Alternating maximization of <a(x)b| P |a(x)b> over product vectors across
// the cut Q|Q̄. The overlap is monotone in each half-step, so every restart
// converges to a local maximum; the best restart is returned. An overlap
// within 1e-6 of 1 certifies a product state inside the projector's range.
struct ProductStateSearch {
    double overlap = 0.0;
    Eigen::VectorXcd q_state;
    Eigen::VectorXcd qbar_state;
    int iterations = 0;
};

ProductStateSearch find_product_state(const DenseOperator &projector, const Bipartition &q, int restarts = 4, int max_iterations = 500,
                                      std::uint64_t seed = 0);

// The full vector a(x)b on the joint space, interleaved per the cut.
Eigen::VectorXcd assemble_product_state(const ProductStateSearch &s, int d, const Bipartition &q);

} // namespace stabspace
