#pragma once

#include <cstdint>
#include <vector>

// Exact linear algebra over Z_d for prime d. Residues are stored
// canonically in [0, d) and every operation reduces eagerly, so all
// arithmetic is exact for moduli up to 2^16.

namespace stabspace {

bool is_prime(int m);

// Reduces any integer into the canonical residue range [0, d).
int mod_reduce(long long value, int d);

// Multiplicative inverse mod a prime p; throws for a == 0 mod p.
int mod_inverse(int a, int p);

class ZdVector {
  public:
    ZdVector(int modulus, std::vector<int> entries);

    // Zero vector of the given length.
    ZdVector(int modulus, std::size_t length);

    int modulus() const { return d_; }
    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }

    void set(std::size_t i, long long value);
    const std::vector<int> &entries() const { return entries_; }

    // Sum of all entries mod d.
    int digit_sum() const;

    bool is_zero() const;
    ZdVector scaled(long long factor) const;

    friend bool operator==(const ZdVector &a, const ZdVector &b) = default;

  private:
    int d_;
    std::vector<int> entries_;
};

class ZdMatrix {
  public:
    ZdMatrix(int modulus, std::size_t cols);
    ZdMatrix(int modulus, std::vector<std::vector<int>> rows);
    explicit ZdMatrix(const std::vector<ZdVector> &rows);

    int modulus() const { return d_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const ZdVector &row(std::size_t i) const { return rows_[i]; }

    void append_row(const ZdVector &v);

    friend bool operator==(const ZdMatrix &a, const ZdMatrix &b) = default;

  private:
    int d_;
    std::size_t cols_;
    std::vector<ZdVector> rows_;
};

// Row rank over the field Z_d (d must be prime).
int rank(const ZdMatrix &m);

// True iff v is a Z_d-linear combination of the rows of m.
bool in_span(const ZdVector &v, const ZdMatrix &m);

// Reduced row echelon form with zero rows dropped; the rows form a
// canonical basis of the row space.
ZdMatrix row_reduce(const ZdMatrix &m);

ZdMatrix transpose(const ZdMatrix &m);

// Basis of {x : m x = 0}, returned as rows.
ZdMatrix null_space(const ZdMatrix &m);

} // namespace stabspace
