#include "stabspace/smax.hpp"

#include <stdexcept>

#include "stabspace/kspace.hpp"

namespace stabspace::smax {

namespace {

long long isqrt(long long x) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

void check_args(int n, int d) {
    if (n < 2) throw std::invalid_argument("the construction starts at two sites");
    if (!is_prime(d)) throw std::invalid_argument("the construction requires a prime local dimension");
}

// Single-site factor P_i^e placed at a site: X^e for odd i, Z^e for even i.
SitePauli p_factor(int i, int e, int d) {
    e = mod_reduce(e, d);
    return i % 2 == 1 ? SitePauli{e, 0} : SitePauli{0, e};
}

PauliWord extend(const PauliWord &g, const SitePauli &suffix) {
    auto sites = g.site_list();
    sites.push_back(suffix);
    return PauliWord(g.dim(), g.phase(), std::move(sites));
}

} // namespace

int k_min(int n, int d) {
    if (n < 2 || d < 2) throw std::invalid_argument("k_min needs n >= 2 and d >= 2");
    const long long c = conjecture1_bound(n, d);

    int by_search = 1;
    while (static_cast<long long>(by_search) * (by_search - 1) / 2 < c) ++by_search;

    // ceil((1 + sqrt(1+8c))/2) == smallest k with (2k-1)^2 >= 1+8c.
    const long long x = 1 + 8 * c;
    long long s = isqrt(x);
    const long long ceil_sqrt = s * s == x ? s : s + 1;
    const int by_formula = static_cast<int>((ceil_sqrt + 2) / 2);

    if (by_search != by_formula) throw std::logic_error("k_min routes disagree");
    return by_search;
}

int m_of(int n, int d) {
    check_args(n, d);
    const int c = conjecture1_bound(n, d);
    int m = 0;
    while (conjecture1_bound(n - 1 - (m + 1) + 1, d) == c) ++m; // ceil((n-1-(m+1))/(d-1)) == c
    return m;
}

int l_of(int n, int d) {
    check_args(n, d);
    const int k = k_min(n, d);
    return k * (k - 1) / 2 + 1 - conjecture1_bound(n, d);
}

Params params(int n, int d) {
    check_args(n, d);
    Params p;
    p.n = n;
    p.d = d;
    p.k = k_min(n, d);
    if (n == 2) {
        p.branch = Branch::base;
        return p;
    }
    const int k_prev = k_min(n - 1, d);
    if (k_prev == p.k - 1) {
        p.branch = Branch::k_increase;
    } else if (k_prev == p.k) {
        p.branch = Branch::same_k;
        p.l = l_of(n, d);
        p.m = m_of(n, d);
    } else {
        throw std::logic_error("k_min changed by more than one between consecutive sizes");
    }
    return p;
}

GeneratorSet construct(int n, int d) {
    check_args(n, d);

    // Base case on two sites.
    std::vector<PauliWord> gens = {
        PauliWord(d, 0, {SitePauli{1, 0}, SitePauli{d - 1, 0}}), // X (x) X^(d-1)
        PauliWord(d, 0, {SitePauli{0, 1}, SitePauli{0, 1}}),     // Z (x) Z
    };

    for (int size = 3; size <= n; ++size) {
        const Params p = params(size, d);
        const int k = p.k;
        std::vector<PauliWord> next;
        next.reserve(static_cast<std::size_t>(k));

        if (p.branch == Branch::k_increase) {
            for (int i = 1; i <= k - 2; ++i) next.push_back(extend(gens[i - 1], SitePauli{}));
            next.push_back(extend(gens[k - 2], p_factor(k - 1, d - 1, d)));
            // Fresh generator supported on the last two sites only.
            std::vector<SitePauli> fresh(static_cast<std::size_t>(size));
            fresh[size - 2] = p_factor(k, 1, d);
            fresh[size - 1] = p_factor(k, 1, d);
            next.push_back(PauliWord(d, 0, std::move(fresh)));
        } else {
            for (int i = 1; i <= k; ++i) {
                if (i == p.l) {
                    // Multiply in P_{k-1}^{m+1} on the previous last site,
                    // then append P_{k-1}^{d-1-m}; the two factors carry
                    // matching letters, so no phase appears.
                    std::vector<SitePauli> shift(static_cast<std::size_t>(size - 1));
                    shift[size - 2] = p_factor(k - 1, p.m + 1, d);
                    const PauliWord adjusted = multiply(gens[i - 1], PauliWord(d, 0, std::move(shift)));
                    next.push_back(extend(adjusted, p_factor(k - 1, d - 1 - p.m, d)));
                } else if (i == k) {
                    next.push_back(extend(gens[i - 1], p_factor(k, 1, d)));
                } else {
                    next.push_back(extend(gens[i - 1], SitePauli{}));
                }
            }
        }
        gens = std::move(next);
        for (const auto &g : gens) {
            if (g.phase() != 0) throw std::logic_error("construction produced a nonzero phase");
        }
    }
    return GeneratorSet(d, std::move(gens));
}

std::vector<ZdVector> expected_basis(int n, int d) {
    check_args(n, d);
    const int c = conjecture1_bound(n, d);
    const int a = c * (d - 1) - (n - 1) + 1;
    std::vector<ZdVector> basis;
    basis.reserve(static_cast<std::size_t>(c));
    for (int i = 1; i <= c; ++i) {
        ZdVector u(d, static_cast<std::size_t>(n));
        if (i < c) {
            for (int j = (i - 1) * (d - 1) + 1; j <= i * (d - 1) + 1; ++j) u.set(j - 1, 1);
        } else {
            for (int j = (i - 1) * (d - 1) + 1; j <= n - 1; ++j) u.set(j - 1, 1);
            u.set(n - 1, a);
        }
        basis.push_back(std::move(u));
    }
    return basis;
}

} // namespace stabspace::smax
