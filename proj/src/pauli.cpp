#include "stabspace/pauli.hpp"

#include <sstream>

#include "stabspace/zd_linalg.hpp"

namespace stabspace {

PauliWord::PauliWord(int d, int phase, std::vector<SitePauli> sites) : d_(d), phase_(mod_reduce(phase, d)), sites_(std::move(sites)) {
    if (d_ < 2) throw std::invalid_argument("local dimension must be at least 2");
    if (sites_.empty()) throw std::invalid_argument("a Pauli word needs at least one site");
    for (auto &s : sites_) {
        s.x = mod_reduce(s.x, d_);
        s.z = mod_reduce(s.z, d_);
    }
}

PauliWord PauliWord::identity(int d, int n_sites) {
    return PauliWord(d, 0, std::vector<SitePauli>(static_cast<std::size_t>(n_sites)));
}

bool PauliWord::is_identity() const {
    if (phase_ != 0) return false;
    for (const auto &s : sites_) {
        if (s.x != 0 || s.z != 0) return false;
    }
    return true;
}

std::vector<int> PauliWord::symplectic_row() const {
    std::vector<int> row;
    row.reserve(sites_.size() * 2);
    for (const auto &s : sites_) row.push_back(s.x);
    for (const auto &s : sites_) row.push_back(s.z);
    return row;
}

namespace {

void require_compatible(const PauliWord &a, const PauliWord &b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("mismatched local dimensions");
    if (a.sites() != b.sites()) throw std::invalid_argument("mismatched site counts");
}

} // namespace

PauliWord multiply(const PauliWord &a, const PauliWord &b) {
    require_compatible(a, b);
    const int d = a.dim();
    long long phase = a.phase() + b.phase();
    std::vector<SitePauli> sites(static_cast<std::size_t>(a.sites()));
    for (int n = 0; n < a.sites(); ++n) {
        const auto &sa = a.site(n);
        const auto &sb = b.site(n);
        phase += static_cast<long long>(sb.x) * sa.z;
        sites[n] = SitePauli{sa.x + sb.x, sa.z + sb.z};
    }
    return PauliWord(d, mod_reduce(phase, d), std::move(sites));
}

PauliWord power(const PauliWord &a, long long e) {
    if (e < 0) throw std::invalid_argument("exponent must be nonnegative");
    const int d = a.dim();
    long long q = 0;
    std::vector<SitePauli> sites(static_cast<std::size_t>(a.sites()));
    for (int n = 0; n < a.sites(); ++n) {
        const auto &s = a.site(n);
        q += static_cast<long long>(s.x) * s.z;
        sites[n] = SitePauli{mod_reduce(static_cast<long long>(s.x) * (e % d), d),
                             mod_reduce(static_cast<long long>(s.z) * (e % d), d)};
    }
    // e(e-1)/2 is exact; only then reduce.
    const long long half = e % 2 == 0 ? (e / 2) % d * ((e - 1) % d) : e % d * (((e - 1) / 2) % d);
    const long long phase = e % d * a.phase() + q % d * half;
    return PauliWord(d, mod_reduce(phase, d), std::move(sites));
}

int commutation_phase(const PauliWord &a, const PauliWord &b) {
    const std::uint64_t full = a.sites() == 64 ? ~0ull : (1ull << a.sites()) - 1;
    return commutation_phase(a, b, full);
}

int commutation_phase(const PauliWord &a, const PauliWord &b, std::uint64_t site_mask) {
    require_compatible(a, b);
    long long tau = 0;
    for (int n = 0; n < a.sites(); ++n) {
        if (!((site_mask >> n) & 1ull)) continue;
        const auto &sa = a.site(n);
        const auto &sb = b.site(n);
        tau += static_cast<long long>(sb.x) * sa.z - static_cast<long long>(sa.x) * sb.z;
    }
    return mod_reduce(tau, a.dim());
}

int commutation_phase(const PauliWord &a, const PauliWord &b, const Bipartition &q) {
    if (q.sites() != a.sites()) throw std::invalid_argument("bipartition site count mismatch");
    return commutation_phase(a, b, q.mask());
}

PauliWord restrict_to(const PauliWord &a, std::uint64_t site_mask) {
    std::vector<SitePauli> kept;
    for (int n = 0; n < a.sites(); ++n) {
        if ((site_mask >> n) & 1ull) kept.push_back(a.site(n));
    }
    if (kept.empty()) throw std::invalid_argument("cannot restrict a word to an empty site set");
    return PauliWord(a.dim(), a.phase(), std::move(kept));
}

PauliWord restrict_to(const PauliWord &a, const std::vector<int> &sites_1based) {
    std::uint64_t mask = 0;
    for (int s : sites_1based) {
        if (s < 1 || s > a.sites()) throw std::invalid_argument("site index out of range");
        mask |= 1ull << (s - 1);
    }
    return restrict_to(a, mask);
}

ParseError::ParseError(std::string message, int line_no, std::string tok)
    : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + message : message),
      line(line_no),
      token(std::move(tok)) {}

namespace {

bool parse_exponent(const std::string &tok, std::size_t &pos, int d, int &out) {
    if (pos >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[pos]))) {
        out = 1;
        return false;
    }
    long long v = 0;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
        v = v * 10 + (tok[pos] - '0');
        if (v > 1'000'000) throw ParseError("exponent out of range", 0, tok);
        ++pos;
    }
    out = mod_reduce(v, d);
    return true;
}

SitePauli parse_site_token(const std::string &tok, int d) {
    if (tok == "I") return SitePauli{};
    SitePauli s;
    std::size_t pos = 0;
    bool saw_any = false;
    if (pos < tok.size() && tok[pos] == 'X') {
        ++pos;
        parse_exponent(tok, pos, d, s.x);
        saw_any = true;
    }
    if (pos < tok.size() && tok[pos] == 'Z') {
        ++pos;
        parse_exponent(tok, pos, d, s.z);
        saw_any = true;
    }
    if (!saw_any || pos != tok.size()) {
        throw ParseError("unrecognized site token '" + tok + "' (expected I, X<a>, Z<b> or X<a>Z<b>)", 0, tok);
    }
    return s;
}

} // namespace

PauliWord parse_pauli_word(const std::string &text, int d) {
    std::istringstream in(text);
    std::string tok;
    int phase = 0;
    std::vector<SitePauli> sites;
    bool first = true;
    while (in >> tok) {
        if (first && tok.size() >= 2 && tok[0] == 'w') {
            std::size_t pos = 1;
            if (!parse_exponent(tok, pos, d, phase) || pos != tok.size()) {
                throw ParseError("malformed phase token '" + tok + "'", 0, tok);
            }
            first = false;
            continue;
        }
        first = false;
        sites.push_back(parse_site_token(tok, d));
    }
    if (sites.empty()) throw ParseError("word has no site tokens", 0, "");
    return PauliWord(d, phase, std::move(sites));
}

std::string format_pauli_word(const PauliWord &w) {
    std::string out;
    if (w.phase() != 0) out += "w" + std::to_string(w.phase()) + " ";
    for (int n = 0; n < w.sites(); ++n) {
        if (n > 0) out += " ";
        const auto &s = w.site(n);
        if (s.x == 0 && s.z == 0) {
            out += "I";
            continue;
        }
        if (s.x > 0) {
            out += "X";
            if (s.x > 1) out += std::to_string(s.x);
        }
        if (s.z > 0) {
            out += "Z";
            if (s.z > 1) out += std::to_string(s.z);
        }
    }
    return out;
}

} // namespace stabspace
