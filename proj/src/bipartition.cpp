#include "stabspace/bipartition.hpp"

#include <bit>
#include <stdexcept>

namespace stabspace {

Bipartition::Bipartition(int n_sites, std::uint64_t mask) : n_(n_sites), mask_(mask) {
    if (n_sites < 1 || n_sites > 63) throw std::invalid_argument("bipartition supports 1..63 sites");
    if (n_sites < 64 && mask >> n_sites) throw std::invalid_argument("bipartition mask has bits beyond the site count");
}

Bipartition Bipartition::from_string(const std::string &bits) {
    if (bits.empty()) throw std::invalid_argument("empty bipartition string");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            mask |= 1ull << i;
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bipartition string must contain only '0' and '1'");
        }
    }
    return Bipartition(static_cast<int>(bits.size()), mask);
}

Bipartition Bipartition::canonical_cut(int n_sites, std::uint64_t index) {
    if (n_sites < 2) throw std::invalid_argument("no nontrivial bipartitions with fewer than 2 sites");
    if (index < 1 || index >= (1ull << (n_sites - 1))) throw std::invalid_argument("canonical cut index out of range");
    // Bit (n_sites - i) of the index holds site i, so increasing indices
    // enumerate the printed strings in lexicographic order.
    std::uint64_t mask = 0;
    for (int site = 2; site <= n_sites; ++site) {
        if ((index >> (n_sites - site)) & 1ull) mask |= 1ull << (site - 1);
    }
    return Bipartition(n_sites, mask);
}

std::uint64_t Bipartition::canonical_cut_count(int n_sites) {
    if (n_sites < 1) throw std::invalid_argument("site count must be positive");
    return (1ull << (n_sites - 1)) - 1;
}

bool Bipartition::contains(int site) const {
    if (site < 1 || site > n_) throw std::invalid_argument("site index out of range");
    return (mask_ >> (site - 1)) & 1ull;
}

int Bipartition::q_size() const {
    return std::popcount(mask_);
}

bool Bipartition::is_trivial() const {
    const std::uint64_t full = n_ == 64 ? ~0ull : (1ull << n_) - 1;
    return mask_ == 0 || mask_ == full;
}

Bipartition Bipartition::complement() const {
    const std::uint64_t full = n_ == 64 ? ~0ull : (1ull << n_) - 1;
    return Bipartition(n_, mask_ ^ full);
}

Bipartition Bipartition::canonical() const {
    return is_canonical() ? *this : complement();
}

std::string Bipartition::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i) {
        if ((mask_ >> i) & 1ull) s[i] = '1';
    }
    return s;
}

} // namespace stabspace
