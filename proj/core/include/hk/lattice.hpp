#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hk/matrix.hpp"

namespace hk {

// An integral lattice given by its Gram matrix in a fixed basis.
struct Lattice {
    std::string name;
    IntMat gram;

    int rank() const { return gram.rows(); }
};

struct Signature {
    int positive = 0;
    int negative = 0;

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.positive == b.positive && a.negative == b.negative;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

// Throws ValidationFailed unless gram is square and symmetric.
void check_symmetric(const Lattice& lat);

// Evaluates the bilinear form, x^T gram y. Symmetric in x and y.
Int pair(const Lattice& lat, const IntVec& x, const IntVec& y);

// x^T gram y for Gaussian-rational vectors (bilinear extension, no
// conjugation; pass conj(y) explicitly for the hermitian pairing).
GaussRat pair_c(const Lattice& lat, const GaussVec& x, const GaussVec& y);

// Sylvester signature via exact rational congruence diagonalization.
// Throws DegenerateForm when det(gram) = 0.
Signature signature(const Lattice& lat);

// (x/g, g) with g = gcd of the coordinates > 0. Throws ZeroVector.
std::pair<IntVec, Int> primitivize(const IntVec& x);

// Basis of the saturated sublattice {x : pair(x, s) = 0 for all s in S},
// canonicalized by row HNF.
std::vector<IntVec> orthogonal_complement(const Lattice& lat,
                                          const std::vector<IntVec>& s);

// The rank-(n-1) sublattice L-perp with its induced Gram and signature.
// Requires pair(L, L) > 0 and lat of signature (3, rank-3).
std::pair<Lattice, Signature> primitive_sublattice(const Lattice& lat, const IntVec& l);

// Validation wrapper: symmetry and nondegeneracy always; with `bb` also
// signature (3, rank-3). Throws ValidationFailed with the failing check.
void validate_lattice(const Lattice& lat, bool bb);

}  // namespace hk
