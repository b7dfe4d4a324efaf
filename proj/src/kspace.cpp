#include "stabspace/kspace.hpp"

#include <random>

namespace stabspace {

ZdVector commutation_vector(const GeneratorSet &s, int i, int j) {
    if (!is_prime(s.dim())) throw std::invalid_argument("commutation vectors require a prime d");
    if (i == j) throw std::invalid_argument("commutation vector needs two distinct generators");
    if (i < 0 || j < 0 || i >= s.size() || j >= s.size()) throw std::invalid_argument("generator index out of range");
    ZdVector v(s.dim(), static_cast<std::size_t>(s.sites()));
    for (int site = 0; site < s.sites(); ++site) {
        v.set(site, commutation_phase(s.generator(i), s.generator(j), 1ull << site));
    }
    return v;
}

KSpace build_kspace(const GeneratorSet &s) {
    if (!is_prime(s.dim())) throw std::invalid_argument("K(S) requires a prime d");
    ZdMatrix stacked(s.dim(), static_cast<std::size_t>(s.sites()));
    for (int i = 0; i < s.size(); ++i) {
        for (int j = i + 1; j < s.size(); ++j) {
            stacked.append_row(commutation_vector(s, i, j));
        }
    }
    return KSpace{s.dim(), s.sites(), row_reduce(stacked)};
}

int pairing(const ZdVector &v, const Bipartition &phi) {
    if (static_cast<int>(v.size()) != phi.sites()) throw std::invalid_argument("pairing length mismatch");
    long long acc = 0;
    for (std::size_t n = 0; n < v.size(); ++n) {
        if ((phi.mask() >> n) & 1ull) acc += v[n];
    }
    return mod_reduce(acc, v.modulus());
}

bool ge_from_kspace(const KSpace &k) {
    if (k.n == 1) return true;
    const std::uint64_t cuts = Bipartition::canonical_cut_count(k.n);
    for (std::uint64_t index = 1; index <= cuts; ++index) {
        const Bipartition cut = Bipartition::canonical_cut(k.n, index);
        bool hit = false;
        for (std::size_t r = 0; r < k.basis.rows(); ++r) {
            if (pairing(k.basis.row(r), cut) != 0) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

bool ge_via_lemma1(const GeneratorSet &s) {
    return ge_from_kspace(build_kspace(s));
}

Theorem2Result theorem2_check(const GeneratorSet &s) {
    const KSpace k = build_kspace(s);
    Theorem2Result out;
    out.dim_k = k.dim();
    out.genuinely_entangled = ge_via_lemma1(s);
    const bool full = out.dim_k == s.sites() - 1;
    out.iff_consistent = s.dim() == 2 ? out.genuinely_entangled == full : (!full || out.genuinely_entangled);
    return out;
}

bool lemma2_check(const GeneratorSet &s) {
    const int d = s.dim();
    const int n = s.sites();
    const KSpace k = build_kspace(s);
    if (k.dim() != n - 1) {
        throw std::invalid_argument("lemma 2 hypothesis needs dim K = N-1, got " + std::to_string(k.dim()));
    }
    // Basis rows are zero-sum, so K(S) sits inside the zero-sum set; with
    // dim K = N-1 the two have equal cardinality d^(N-1), hence equality
    // follows from membership of zero-sum vectors in K(S).
    for (std::size_t r = 0; r < k.basis.rows(); ++r) {
        if (k.basis.row(r).digit_sum() != 0) return false;
    }

    const double full_count = std::pow(static_cast<double>(d), n - 1);
    if (full_count <= 1e6) {
        std::vector<int> digits(static_cast<std::size_t>(n), 0);
        const long long total = checked_pow(d, n - 1);
        for (long long code = 0; code < total; ++code) {
            long long rest = code;
            long long sum = 0;
            for (int i = 0; i < n - 1; ++i) {
                digits[i] = static_cast<int>(rest % d);
                sum += digits[i];
                rest /= d;
            }
            digits[n - 1] = mod_reduce(-sum, d);
            if (!in_span(ZdVector(d, digits), k.basis)) return false;
        }
        return true;
    }

    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, d - 1);
    for (int trial = 0; trial < 10'000; ++trial) {
        std::vector<int> digits(static_cast<std::size_t>(n), 0);
        long long sum = 0;
        for (int i = 0; i < n - 1; ++i) {
            digits[i] = pick(rng);
            sum += digits[i];
        }
        digits[n - 1] = mod_reduce(-sum, d);
        if (!in_span(ZdVector(d, digits), k.basis)) return false;
    }
    return true;
}

int conjecture1_bound(int n, int d) {
    if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
    if (n < 1) throw std::invalid_argument("site count must be positive");
    return static_cast<int>((static_cast<long long>(n) - 1 + d - 2) / (d - 1));
}

std::vector<std::uint64_t> sigma_counts(const ZdVector &u) {
    const int d = u.modulus();
    const int n = static_cast<int>(u.size());
    if (n > 30) throw std::invalid_argument("sigma counting supports up to 30 sites");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(d), 0);
    counts[0] = 1; // the empty mask
    for (int site = 0; site < n; ++site) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(d), 0);
        for (int beta = 0; beta < d; ++beta) {
            next[beta] = counts[beta] + counts[mod_reduce(beta - u[site], d)];
        }
        counts = std::move(next);
    }
    return counts;
}

std::uint64_t sigma_count(const ZdVector &u, int beta) {
    return sigma_counts(u)[static_cast<std::size_t>(mod_reduce(beta, u.modulus()))];
}

bool sigma_min_bound_check(const ZdVector &u) {
    const int d = u.modulus();
    const int n = static_cast<int>(u.size());
    const auto counts = sigma_counts(u);
    std::uint64_t min_nonzero = 0;
    for (auto c : counts) {
        if (c > 0 && (min_nonzero == 0 || c < min_nonzero)) min_nonzero = c;
    }
    const std::uint64_t bound = n <= d - 1 ? 1ull : 1ull << (n - (d - 1));
    return min_nonzero >= bound;
}

} // namespace stabspace
