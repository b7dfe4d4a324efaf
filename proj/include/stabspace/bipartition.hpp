#pragma once

#include <cstdint>
#include <string>

namespace stabspace {

// A bipartition Q|Q̄ of the site set {1,...,N}, stored as a bit mask with
// bit (i-1) set iff site i belongs to Q. Every cut has two mask
// representations (Q and its complement); the canonical one keeps site 1
// on the Q̄ side. Cut verdicts never depend on which representation is
// passed in, but enumeration and reporting stick to canonical masks.
class Bipartition {
  public:
    Bipartition(int n_sites, std::uint64_t mask);

    // Parses a bit string, site 1 leftmost, '1' marking membership in Q.
    static Bipartition from_string(const std::string &bits);

    // The index-th canonical nontrivial cut of n sites, in lexicographic
    // order of the printed bit string; index runs over [1, 2^(n-1) - 1].
    static Bipartition canonical_cut(int n_sites, std::uint64_t index);

    static std::uint64_t canonical_cut_count(int n_sites);

    int sites() const { return n_; }
    std::uint64_t mask() const { return mask_; }

    bool contains(int site) const; // site is 1-based
    int q_size() const;

    bool is_trivial() const;
    bool is_canonical() const { return (mask_ & 1ull) == 0; }

    Bipartition complement() const;
    Bipartition canonical() const;

    // Bit string, site 1 leftmost.
    std::string to_string() const;

    friend bool operator==(const Bipartition &a, const Bipartition &b) = default;

  private:
    int n_;
    std::uint64_t mask_;
};

} // namespace stabspace
