#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stabspace/dense.hpp"
#include "stabspace/pauli.hpp"
#include "stabspace/zd_linalg.hpp"

namespace stabspace {

// A candidate generating set S = <G_1,...,G_k> on N sites with local
// dimension d. Construction only checks shape; validate() decides whether
// the set actually generates a stabilizer.
class GeneratorSet {
  public:
    GeneratorSet(int d, std::vector<PauliWord> generators);

    int dim() const { return d_; }
    int sites() const { return n_; }
    int size() const { return static_cast<int>(generators_.size()); }
    const PauliWord &generator(int i) const { return generators_.at(i); } // 0-based
    const std::vector<PauliWord> &generators() const { return generators_; }

    // k x 2N matrix of symplectic rows; defined for any d, a field only for
    // prime d.
    ZdMatrix symplectic_matrix() const;

    friend bool operator==(const GeneratorSet &a, const GeneratorSet &b) = default;

  private:
    int d_;
    int n_;
    std::vector<PauliWord> generators_;
};

struct ValidationFailure {
    std::string check;  // "commuting" | "orders" | "independent" | "scalar-free"
    std::string detail; // human-readable, generator indices 1-based
};

struct ValidationReport {
    bool commuting = false;
    bool orders_ok = false;
    bool independent = false;
    bool scalar_free = false;
    std::vector<ValidationFailure> failures;

    bool pass() const { return commuting && orders_ok && independent && scalar_free; }
};

// Stabilizer conditions: all pairs commute, G_i^d is the bare identity,
// the symplectic rows are independent over Z_d, and no nontrivial product
// of generators is a scalar. The order check is a genuine constraint at
// d = 2 (a site carrying both X and Z contributes a sign to G^2) even
// though it is automatic for odd d. Independence and scalar-freeness need
// a field, so for non-prime d they are reported as unsupported failures
// while commutation and orders are still checked.
ValidationReport validate(const GeneratorSet &s);

// d^(N-k); requires prime d.
long long subspace_dimension(const GeneratorSet &s);

// P = prod_i [(1/d) sum_a G_i^a], the projector onto the joint +1
// eigenspace. Hermitian, idempotent, trace d^(N-k), and absorbed by every
// generator: G_i P = P G_i = P.
DenseOperator projector(const GeneratorSet &s, long long dense_cap = kDefaultDenseCap);

// Text format: optional '#' comment lines, a header "d=<int> n=<int>",
// then one word per line in the Pauli grammar.
GeneratorSet parse_generator_set(std::istream &in);
GeneratorSet parse_generator_set(const std::string &text);
GeneratorSet load_generator_file(const std::string &path);
std::string format_generator_set(const GeneratorSet &s);

} // namespace stabspace
