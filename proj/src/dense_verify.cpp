#include "stabspace/dense_verify.hpp"

#include <cmath>
#include <random>

#include "json.hpp"

namespace stabspace {

DenseOperator random_state_on(const GeneratorSet &s, std::uint64_t seed, int rank_cols, long long dense_cap) {
    const long long dim_v = subspace_dimension(s);
    if (rank_cols < 1 || rank_cols > dim_v) throw std::invalid_argument("state rank must lie in [1, dim V]");
    const DenseOperator p = projector(s, dense_cap);
    const long long dim = p.dim();

    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed + attempt * 0x9e3779b97f4a7c15ull);
        std::normal_distribution<double> gauss;
        Eigen::MatrixXcd w(dim, rank_cols);
        for (long long r = 0; r < dim; ++r) {
            for (int c = 0; c < rank_cols; ++c) w(r, c) = std::complex<double>(gauss(rng), gauss(rng));
        }
        Eigen::MatrixXcd pw = p.mat * w;
        Eigen::MatrixXcd rho = pw * pw.adjoint();
        const double tr = rho.trace().real();
        if (tr > 1e-12) {
            rho /= tr;
            return DenseOperator{s.dim(), s.sites(), std::move(rho)};
        }
        // Astronomically unlikely; draw again deterministically.
    }
}

BWitness b_witness(const GeneratorSet &s, int i, int j, const Bipartition &q, long long dense_cap) {
    if (i < 0 || j < 0 || i >= s.size() || j >= s.size() || i == j) throw std::invalid_argument("witness needs two distinct generator indices");
    const int tau = commutation_phase(s.generator(i), s.generator(j), q);
    if (tau == 0) throw std::invalid_argument("witness inapplicable: restrictions commute across the cut");
    const Eigen::MatrixXcd gi = dense_matrix(s.generator(i), dense_cap).mat;
    const Eigen::MatrixXcd gj = dense_matrix(s.generator(j), dense_cap).mat;
    BWitness out;
    out.tau = tau;
    out.op = DenseOperator{s.dim(), s.sites(), gi + gi.adjoint() + gj + gj.adjoint()};
    out.bound = 2.0 * std::sqrt(3.0 + std::cos(2.0 * M_PI * tau / s.dim()));
    return out;
}

NptReport verify_npt(const GeneratorSet &s, int samples, std::uint64_t seed, long long dense_cap) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    NptReport report;
    report.d = s.dim();
    report.n = s.sites();
    report.samples = samples;
    report.seed = seed;

    const DenseOperator p = projector(s, dense_cap);
    const long long dim_v = subspace_dimension(s);

    std::vector<DenseOperator> states;
    states.reserve(static_cast<std::size_t>(samples));
    for (int t = 0; t < samples; ++t) {
        const int rank_cols = static_cast<int>(t % dim_v) + 1;
        states.push_back(random_state_on(s, seed * 1000003ull + static_cast<std::uint64_t>(t), rank_cols, dense_cap));
    }

    report.ge = true;
    report.fully_npt = true;
    const std::uint64_t cuts = Bipartition::canonical_cut_count(s.sites());
    for (std::uint64_t index = 1; index <= cuts; ++index) {
        const Bipartition cut = Bipartition::canonical_cut(s.sites(), index);
        NptCutReport cr;
        cr.bipartition = cut.to_string();

        const auto witness = entangled_witness(s, cut);
        cr.entangled = witness.has_value();
        if (witness) {
            cr.witness = witness;
            const BWitness b = b_witness(s, witness->i, witness->j, cut, dense_cap);
            cr.bound = b.bound;
            bool all_npt = true;
            for (const auto &rho : states) {
                const double low = min_eigenvalue(partial_transpose(rho, cut));
                const double trace_b = (b.op.mat * rho.mat).trace().real();
                cr.min_eigenvalues.push_back(low);
                cr.witness_traces.push_back(trace_b);
                if (low >= kNptEigenTolerance || std::abs(trace_b - 4.0) > kWitnessTraceTolerance) all_npt = false;
            }
            cr.verdict = all_npt ? "npt" : "violation";
            if (!all_npt) report.fully_npt = false;
        } else {
            report.ge = false;
            report.fully_npt = false;
            const auto found = find_product_state(p, cut, 4, 500, seed * 7919ull + index);
            cr.product_overlap = found.overlap;
            const Eigen::VectorXcd psi = assemble_product_state(found, s.dim(), cut);
            DenseOperator pure{s.dim(), s.sites(), psi * psi.adjoint()};
            const double low = min_eigenvalue(partial_transpose(pure, cut));
            cr.min_eigenvalues.push_back(low);
            const bool ok = found.overlap > 1.0 - kProductOverlapGap && low >= kPptEigenTolerance;
            cr.verdict = ok ? "ppt" : "violation";
        }
        report.cuts.push_back(std::move(cr));
    }
    return report;
}

namespace {

double round_sig(double x) {
    // Reports print floating values with 12 significant digits.
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double scale = std::pow(10.0, 11 - std::floor(std::log10(std::abs(x))));
    return std::round(x * scale) / scale;
}

nlohmann::json rounded(const std::vector<double> &values) {
    nlohmann::json arr = nlohmann::json::array();
    for (double v : values) arr.push_back(round_sig(v));
    return arr;
}

} // namespace

std::string to_json_string(const NptReport &report) {
    nlohmann::json j;
    j["d"] = report.d;
    j["n"] = report.n;
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    j["ge"] = report.ge;
    j["fullyNpt"] = report.fully_npt;
    j["cuts"] = nlohmann::json::array();
    for (const auto &c : report.cuts) {
        nlohmann::json jc;
        jc["bipartition"] = c.bipartition;
        jc["entangled"] = c.entangled;
        if (c.witness) {
            jc["witness"] = {{"i", c.witness->i + 1}, {"j", c.witness->j + 1}, {"tau", c.witness->tau}};
            jc["bound"] = round_sig(c.bound);
        } else {
            jc["productOverlap"] = round_sig(c.product_overlap);
        }
        jc["minEig"] = rounded(c.min_eigenvalues);
        jc["trB"] = rounded(c.witness_traces);
        jc["verdict"] = c.verdict;
        j["cuts"].push_back(std::move(jc));
    }
    return j.dump(2);
}

} // namespace stabspace
