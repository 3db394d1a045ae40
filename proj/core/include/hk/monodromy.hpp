#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hk/lattice.hpp"

namespace hk {

// Integer matrix acting on a lattice with M^T G M = G, checked exactly.
struct Isometry {
    Lattice lattice;
    IntMat matrix;

    int rank() const { return matrix.rows(); }
};

// Weakly decreasing block sizes of a nilpotent operator, derived from the
// exact rank sequence: #blocks of size >= k equals rank(N^{k-1}) - rank(N^k).
struct JordanType {
    std::vector<int> partition;

    int multiplicity(int part) const {
        int c = 0;
        for (int p : partition) c += (p == part);
        return c;
    }
    friend bool operator==(const JordanType& a, const JordanType& b) {
        return a.partition == b.partition;
    }
};

struct WeightFiltration {
    std::vector<IntVec> w2_basis;  // Im(log T), saturated
    std::vector<IntVec> w1_basis;  // ker(log T), saturated
    int dim_w2 = 0;
    int dim_w1 = 0;
    int rank = 0;
};

// rank(T - id) is even whenever (T - id)^2 = 0 for an isometry of a
// nondegenerate form; this count equals the number of size-2 Jordan blocks.
struct ParityCertificate {
    int rank_t_minus_id = 0;
    bool even = false;
};

bool is_isometry(const Lattice& lat, const IntMat& m);

// Wraps m iff M^T G M = G; otherwise throws NotIsometry naming a basis pair
// whose pairing is not preserved.
Isometry check_isometry(const Lattice& lat, const IntMat& m);

Isometry compose(const Isometry& a, const Isometry& b);
Isometry isometry_inverse(const Isometry& a);

// T(x) = x + pair(x,v) delta - pair(x,delta) v - pair(v,v)/2 pair(x,delta) delta.
// Requires pair(delta,delta) = 0, pair(delta,v) = 0 and pair(v,v) even.
// Always (T-id)^3 = 0; (T-id)^2 != 0 iff pair(v,v) != 0.
Isometry eichler_transvection(const Lattice& lat, const IntVec& delta, const IntVec& v);

// Smallest k >= 1 with (T-id)^k = 0, or nullopt when (T-id)^rank != 0.
std::optional<int> unipotency_index(const Isometry& t);

// [rank(N^0), rank(N^1), ...] until the rank stabilizes (0 for nilpotents).
std::vector<int> rank_sequence(const RatMat& n);

// Jordan block partition of the eigenvalue-0 part of n. With
// require_nilpotent set, throws NotNilpotent unless n^rank = 0.
JordanType jordan_type(const RatMat& n, bool require_nilpotent);

// log T = sum (-1)^{i+1} (T-id)^i / i, a finite sum. Throws NotUnipotent.
RatMat log_unipotent(const Isometry& t);

// exp of a nilpotent matrix, sum n^i / i!. Exact inverse of log_unipotent.
RatMat exp_nilpotent(const RatMat& n);

// Weight filtration W2 = Im(log T) within W1 = ker(log T) for unipotent T
// of index exactly 2. Throws IndexTooHigh when (T-id)^2 != 0 and
// PreconditionViolated when T = id.
std::pair<WeightFiltration, ParityCertificate> weight_filtration_order2(const Isometry& t);

}  // namespace hk
