#include "stabspace/stabilizer.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace stabspace {

GeneratorSet::GeneratorSet(int d, std::vector<PauliWord> generators) : d_(d), generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("generator set needs at least one word");
    n_ = generators_.front().sites();
    for (const auto &g : generators_) {
        if (g.dim() != d_) throw std::invalid_argument("generator local dimension mismatch");
        if (g.sites() != n_) throw std::invalid_argument("generator site count mismatch");
    }
}

ZdMatrix GeneratorSet::symplectic_matrix() const {
    ZdMatrix m(d_, static_cast<std::size_t>(2 * n_));
    for (const auto &g : generators_) m.append_row(ZdVector(d_, g.symplectic_row()));
    return m;
}

namespace {

std::string pair_label(int i, int j) {
    return "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
}

long long word_order(const PauliWord &g) {
    // G^d = w^r 1 for some r; the actual order is d * ord(w^r).
    const PauliWord gd = power(g, g.dim());
    const int r = gd.phase();
    if (r == 0) return g.dim();
    return static_cast<long long>(g.dim()) * (g.dim() / std::gcd(r, g.dim()));
}

} // namespace

ValidationReport validate(const GeneratorSet &s) {
    ValidationReport rep;
    const int d = s.dim();
    const int k = s.size();

    rep.commuting = true;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const int tau = commutation_phase(s.generator(i), s.generator(j));
            if (tau != 0) {
                rep.commuting = false;
                rep.failures.push_back({"commuting", pair_label(i, j) + " do not commute (tau=" + std::to_string(tau) + ")"});
            }
        }
    }

    rep.orders_ok = true;
    for (int i = 0; i < k; ++i) {
        const PauliWord gd = power(s.generator(i), d);
        if (!gd.is_identity()) {
            rep.orders_ok = false;
            rep.failures.push_back({"orders", "generator " + std::to_string(i + 1) + " has order " + std::to_string(word_order(s.generator(i))) +
                                                  ", not " + std::to_string(d)});
        }
    }

    if (!is_prime(d)) {
        rep.failures.push_back({"independent", "unsupported for non-prime d=" + std::to_string(d)});
        rep.failures.push_back({"scalar-free", "unsupported for non-prime d=" + std::to_string(d)});
        return rep;
    }

    const ZdMatrix rows = s.symplectic_matrix();
    const int r = rank(rows);
    rep.independent = r == k;
    if (!rep.independent) {
        rep.failures.push_back({"independent", "symplectic rows have rank " + std::to_string(r) + " < k=" + std::to_string(k)});
    }

    // Scalar elements of the group correspond to the left kernel of the
    // symplectic rows; with full rank the kernel is trivial and the check
    // is vacuous. Phases compose additively on commuting elements, so the
    // kernel basis decides the whole kernel.
    rep.scalar_free = true;
    if (!rep.independent) {
        const ZdMatrix kernel = null_space(transpose(rows));
        for (std::size_t v = 0; v < kernel.rows(); ++v) {
            PauliWord prod = PauliWord::identity(d, s.sites());
            for (int i = 0; i < k; ++i) {
                prod = multiply(prod, power(s.generator(i), kernel.row(v)[i]));
            }
            if (prod.phase() != 0) {
                rep.scalar_free = false;
                std::string alpha;
                for (int i = 0; i < k; ++i) alpha += (i ? "," : "") + std::to_string(kernel.row(v)[i]);
                rep.failures.push_back({"scalar-free", "product with exponents (" + alpha + ") equals w^" + std::to_string(prod.phase()) + " * identity"});
            }
        }
    }
    return rep;
}

long long subspace_dimension(const GeneratorSet &s) {
    if (!is_prime(s.dim())) throw std::invalid_argument("subspace dimension is only defined here for prime d");
    return checked_pow(s.dim(), s.sites() - s.size());
}

DenseOperator projector(const GeneratorSet &s, long long dense_cap) {
    const long long dim = checked_pow(s.dim(), s.sites());
    if (dim > dense_cap) throw std::invalid_argument("dense dimension exceeds the dense cap");
    DenseOperator p{s.dim(), s.sites(), Eigen::MatrixXcd::Identity(dim, dim)};
    for (const auto &g : s.generators()) {
        Eigen::MatrixXcd factor = Eigen::MatrixXcd::Zero(dim, dim);
        for (int a = 0; a < s.dim(); ++a) {
            factor += dense_matrix(power(g, a), dense_cap).mat;
        }
        p.mat = p.mat * factor / static_cast<double>(s.dim());
    }
    return p;
}

namespace {

bool parse_header(const std::string &line, int &d, int &n) {
    std::istringstream in(line);
    std::string a, b;
    if (!(in >> a >> b)) return false;
    if (a.rfind("d=", 0) != 0 || b.rfind("n=", 0) != 0) return false;
    try {
        d = std::stoi(a.substr(2));
        n = std::stoi(b.substr(2));
    } catch (const std::exception &) {
        return false;
    }
    return true;
}

} // namespace

GeneratorSet parse_generator_set(std::istream &in) {
    std::string line;
    int line_no = 0;
    int d = 0, n = 0;
    bool have_header = false;
    std::vector<PauliWord> words;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!have_header) {
            if (!parse_header(line, d, n)) throw ParseError("expected header 'd=<int> n=<int>'", line_no, line);
            if (d < 2) throw ParseError("local dimension must be at least 2", line_no, line);
            if (n < 1) throw ParseError("site count must be positive", line_no, line);
            have_header = true;
            continue;
        }
        PauliWord w = [&] {
            try {
                return parse_pauli_word(line, d);
            } catch (const ParseError &e) {
                throw ParseError(e.what(), line_no, e.token);
            }
        }();
        if (w.sites() != n) {
            throw ParseError("word has " + std::to_string(w.sites()) + " sites, header says n=" + std::to_string(n), line_no, line);
        }
        words.push_back(std::move(w));
    }
    if (!have_header) throw ParseError("missing header 'd=<int> n=<int>'", line_no == 0 ? 1 : line_no, "");
    if (words.empty()) throw ParseError("no generators after the header", line_no, "");
    return GeneratorSet(d, std::move(words));
}

GeneratorSet parse_generator_set(const std::string &text) {
    std::istringstream in(text);
    return parse_generator_set(in);
}

GeneratorSet load_generator_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_generator_set(in);
}

std::string format_generator_set(const GeneratorSet &s) {
    std::string out = "d=" + std::to_string(s.dim()) + " n=" + std::to_string(s.sites()) + "\n";
    for (const auto &g : s.generators()) out += format_pauli_word(g) + "\n";
    return out;
}

} // namespace stabspace
