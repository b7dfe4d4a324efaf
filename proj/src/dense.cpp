#include "stabspace/dense.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace stabspace {

long long checked_pow(int base, int exponent) {
    if (base < 2 || exponent < 0) throw std::invalid_argument("checked_pow expects base >= 2 and exponent >= 0");
    long long out = 1;
    for (int i = 0; i < exponent; ++i) {
        if (out > (1ll << 62) / base) throw std::overflow_error("d^n does not fit in 63 bits");
        out *= base;
    }
    return out;
}

double hermiticity_defect(const DenseOperator &op) {
    return (op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

std::complex<double> root_of_unity(int d, long long e) {
    const double angle = 2.0 * M_PI * static_cast<double>(((e % d) + d) % d) / d;
    return {std::cos(angle), std::sin(angle)};
}

Eigen::MatrixXcd site_matrix(int d, const SitePauli &s) {
    // X^x Z^z |i> = w^{z i} |i + x mod d>.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        m((i + s.x) % d, i) = root_of_unity(d, static_cast<long long>(s.z) * i);
    }
    return m;
}

// Index helpers for the big-endian site layout. digit_factors[n] is the
// stride of site n's digit (0-based site index).
std::vector<long long> digit_strides(int d, int n_sites) {
    std::vector<long long> strides(static_cast<std::size_t>(n_sites));
    long long f = 1;
    for (int n = n_sites - 1; n >= 0; --n) {
        strides[n] = f;
        f *= d;
    }
    return strides;
}

} // namespace

DenseOperator dense_matrix(const PauliWord &w, long long dense_cap) {
    const long long dim = checked_pow(w.dim(), w.sites());
    if (dim > dense_cap) throw std::invalid_argument("dense dimension " + std::to_string(dim) + " exceeds the dense cap " + std::to_string(dense_cap));
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Constant(1, 1, root_of_unity(w.dim(), w.phase()));
    for (int n = 0; n < w.sites(); ++n) {
        const Eigen::MatrixXcd site = site_matrix(w.dim(), w.site(n));
        Eigen::MatrixXcd next(acc.rows() * w.dim(), acc.cols() * w.dim());
        for (Eigen::Index r = 0; r < acc.rows(); ++r) {
            for (Eigen::Index c = 0; c < acc.cols(); ++c) {
                next.block(r * w.dim(), c * w.dim(), w.dim(), w.dim()) = acc(r, c) * site;
            }
        }
        acc = std::move(next);
    }
    return DenseOperator{w.dim(), w.sites(), std::move(acc)};
}

DenseOperator partial_transpose(const DenseOperator &op, const Bipartition &q) {
    if (q.sites() != op.sites) throw std::invalid_argument("bipartition site count mismatch");
    const long long dim = op.dim();
    if (checked_pow(op.d, op.sites) != dim) throw std::invalid_argument("operator dimension is not d^sites");

    const auto strides = digit_strides(op.d, op.sites);
    // For each index, split into the Q digits and the rest; swapping the Q
    // parts of (row, col) implements the transpose on Q's factors.
    std::vector<long long> q_part(static_cast<std::size_t>(dim)), rest_part(static_cast<std::size_t>(dim));
    for (long long g = 0; g < dim; ++g) {
        long long qp = 0, rp = 0;
        for (int n = 0; n < op.sites; ++n) {
            const long long digit = g / strides[n] % op.d;
            if (q.contains(n + 1)) {
                qp += digit * strides[n];
            } else {
                rp += digit * strides[n];
            }
        }
        q_part[g] = qp;
        rest_part[g] = rp;
    }

    DenseOperator out{op.d, op.sites, Eigen::MatrixXcd(dim, dim)};
    for (long long r = 0; r < dim; ++r) {
        for (long long c = 0; c < dim; ++c) {
            out.mat(q_part[c] + rest_part[r], q_part[r] + rest_part[c]) = op.mat(r, c);
        }
    }
    return out;
}

double min_eigenvalue(const DenseOperator &op) {
    if (hermiticity_defect(op) > 1e-10) throw std::invalid_argument("min_eigenvalue requires a Hermitian operator");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.mat, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue computation failed");
    return solver.eigenvalues().minCoeff();
}

namespace {

// Maps between joint indices and (q_index, rest_index) pairs for a cut.
struct CutIndexing {
    long long q_dim = 1;
    long long rest_dim = 1;
    std::vector<long long> q_of;    // joint -> q part
    std::vector<long long> rest_of; // joint -> rest part
    std::vector<long long> joint_of; // q * rest_dim + rest -> joint

    CutIndexing(int d, int n_sites, const Bipartition &q) {
        const long long dim = checked_pow(d, n_sites);
        const auto strides = digit_strides(d, n_sites);
        std::vector<long long> q_stride(static_cast<std::size_t>(n_sites), 0), rest_stride(static_cast<std::size_t>(n_sites), 0);
        long long qf = 1, rf = 1;
        for (int n = n_sites - 1; n >= 0; --n) {
            if (q.contains(n + 1)) {
                q_stride[n] = qf;
                qf *= d;
            } else {
                rest_stride[n] = rf;
                rf *= d;
            }
        }
        q_dim = qf;
        rest_dim = rf;
        q_of.resize(static_cast<std::size_t>(dim));
        rest_of.resize(static_cast<std::size_t>(dim));
        joint_of.resize(static_cast<std::size_t>(dim));
        for (long long g = 0; g < dim; ++g) {
            long long qi = 0, ri = 0;
            for (int n = 0; n < n_sites; ++n) {
                const long long digit = g / strides[n] % d;
                qi += digit * q_stride[n];
                ri += digit * rest_stride[n];
            }
            q_of[g] = qi;
            rest_of[g] = ri;
            joint_of[static_cast<std::size_t>(qi * rest_dim + ri)] = g;
        }
    }
};

} // namespace

ProductStateSearch find_product_state(const DenseOperator &projector, const Bipartition &q, int restarts, int max_iterations, std::uint64_t seed) {
    if (q.is_trivial()) throw std::invalid_argument("product-state search needs a nontrivial bipartition");
    const CutIndexing idx(projector.d, projector.sites, q);
    const long long dim = projector.dim();

    // Reorder the projector into (q, rest) x (q, rest) blocks once.
    Eigen::MatrixXcd p(dim, dim);
    for (long long r = 0; r < dim; ++r) {
        for (long long c = 0; c < dim; ++c) {
            p(idx.q_of[r] * idx.rest_dim + idx.rest_of[r], idx.q_of[c] * idx.rest_dim + idx.rest_of[c]) = projector.mat(r, c);
        }
    }

    ProductStateSearch best;
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(attempt) + 1);
        std::normal_distribution<double> gauss;
        Eigen::VectorXcd b(idx.rest_dim);
        for (long long i = 0; i < idx.rest_dim; ++i) b(i) = std::complex<double>(gauss(rng), gauss(rng));
        b.normalize();
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(idx.q_dim);

        double value = 0.0;
        int iters = 0;
        for (; iters < max_iterations; ++iters) {
            // Contract the rest side, maximize over a, then the reverse.
            Eigen::MatrixXcd ma = Eigen::MatrixXcd::Zero(idx.q_dim, idx.q_dim);
            for (long long qa = 0; qa < idx.q_dim; ++qa) {
                for (long long qb = 0; qb < idx.q_dim; ++qb) {
                    std::complex<double> acc = 0;
                    for (long long ra = 0; ra < idx.rest_dim; ++ra) {
                        for (long long rb = 0; rb < idx.rest_dim; ++rb) {
                            acc += std::conj(b(ra)) * b(rb) * p(qa * idx.rest_dim + ra, qb * idx.rest_dim + rb);
                        }
                    }
                    ma(qa, qb) = acc;
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sa(ma);
            a = sa.eigenvectors().col(idx.q_dim - 1);

            Eigen::MatrixXcd mb = Eigen::MatrixXcd::Zero(idx.rest_dim, idx.rest_dim);
            for (long long ra = 0; ra < idx.rest_dim; ++ra) {
                for (long long rb = 0; rb < idx.rest_dim; ++rb) {
                    std::complex<double> acc = 0;
                    for (long long qa = 0; qa < idx.q_dim; ++qa) {
                        for (long long qb = 0; qb < idx.q_dim; ++qb) {
                            acc += std::conj(a(qa)) * a(qb) * p(qa * idx.rest_dim + ra, qb * idx.rest_dim + rb);
                        }
                    }
                    mb(ra, rb) = acc;
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sb(mb);
            b = sb.eigenvectors().col(idx.rest_dim - 1);
            const double next = sb.eigenvalues()(idx.rest_dim - 1);
            if (next - value < 1e-13) {
                value = next;
                ++iters;
                break;
            }
            value = next;
        }
        if (value > best.overlap) {
            best.overlap = value;
            best.q_state = a;
            best.qbar_state = b;
            best.iterations = iters;
        }
    }
    return best;
}

Eigen::VectorXcd assemble_product_state(const ProductStateSearch &s, int d, const Bipartition &q) {
    const CutIndexing idx(d, q.sites(), q);
    Eigen::VectorXcd psi(idx.q_dim * idx.rest_dim);
    for (long long qi = 0; qi < idx.q_dim; ++qi) {
        for (long long ri = 0; ri < idx.rest_dim; ++ri) {
            psi(idx.joint_of[static_cast<std::size_t>(qi * idx.rest_dim + ri)]) = s.q_state(qi) * s.qbar_state(ri);
        }
    }
    return psi;
}

} // namespace stabspace
