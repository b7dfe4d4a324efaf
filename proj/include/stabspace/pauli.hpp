#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabspace/bipartition.hpp"

// Symplectic representation of the generalized N-qudit Pauli group: a word
// is w^r X^{x_1}Z^{z_1} (x) ... (x) X^{x_N}Z^{z_N} with w = exp(2*pi*i/d) and
// all exponents in Z_d. The phase group is exactly <w>; no extra roots are
// introduced for d = 2, so a single-site XZ squares to -1 and is
// representable here (it fails the stabilizer order check downstream).
//
// The product rule follows from commuting an X power past a Z power:
//   X^i Z^j = w^{-ij} Z^j X^i.

namespace stabspace {

struct SitePauli {
    int x = 0;
    int z = 0;

    friend bool operator==(const SitePauli &a, const SitePauli &b) = default;
};

class PauliWord {
  public:
    PauliWord(int d, int phase, std::vector<SitePauli> sites);

    static PauliWord identity(int d, int n_sites);

    int dim() const { return d_; }
    int sites() const { return static_cast<int>(sites_.size()); }
    int phase() const { return phase_; }
    const SitePauli &site(int i) const { return sites_.at(i); } // 0-based
    const std::vector<SitePauli> &site_list() const { return sites_; }

    bool is_identity() const; // identity word with phase 0

    // Concatenation of x exponents then z exponents, the row used for
    // independence checks over Z_d.
    std::vector<int> symplectic_row() const;

    friend bool operator==(const PauliWord &a, const PauliWord &b) = default;

  private:
    int d_;
    int phase_;
    std::vector<SitePauli> sites_;
};

// Group product A*B. Per site X^{xa}Z^{za} * X^{xb}Z^{zb} = w^{xb*za} X^{xa+xb}Z^{za+zb}.
PauliWord multiply(const PauliWord &a, const PauliWord &b);

// A^e for e >= 0. The reordering phase accumulates to (sum_n x_n z_n) * e(e-1)/2,
// with e(e-1)/2 evaluated as an exact integer before reduction mod d.
PauliWord power(const PauliWord &a, long long e);

// Exponent tau with A|_Q B|_Q = w^tau B|_Q A|_Q, i.e. the symplectic form
// sum_{n in Q} (xb_n za_n - xa_n zb_n) mod d. tau = 0 iff the restrictions
// commute. The mask uses bit (i-1) for site i; overloads cover the full
// site set and a Bipartition's Q side.
int commutation_phase(const PauliWord &a, const PauliWord &b);
int commutation_phase(const PauliWord &a, const PauliWord &b, std::uint64_t site_mask);
int commutation_phase(const PauliWord &a, const PauliWord &b, const Bipartition &q);

// Tensor factor of a word on the masked sites, phase carried on the result.
PauliWord restrict_to(const PauliWord &a, std::uint64_t site_mask);
PauliWord restrict_to(const PauliWord &a, const std::vector<int> &sites_1based);

// Text grammar shared with the CLI: per-site tokens I | X | Z | X<a> | Z<b> |
// X<a>Z<b>, whitespace separated, with an optional leading w<r> for the
// global phase, e.g. "w1 X2Z1 I Z".
struct ParseError : std::runtime_error {
    ParseError(std::string message, int line, std::string token);

    int line;          // 1-based, 0 when parsing a bare word
    std::string token; // offending token, possibly empty
};

PauliWord parse_pauli_word(const std::string &text, int d);
std::string format_pauli_word(const PauliWord &w);

} // namespace stabspace
