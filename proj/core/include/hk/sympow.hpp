#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hk/monodromy.hpp"

namespace hk {

Int binomial(long a, long b);

// Degree-n monomials in `vars` symbols, as sorted index multisets in
// lexicographic order. This fixed total order makes every symmetric-power
// matrix reproducible.
class MonomialBasis {
public:
    MonomialBasis(int vars, int degree);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    int size() const { return int(multisets_.size()); }
    const std::vector<int>& multiset(int i) const { return multisets_[i]; }
    int index_of(const std::vector<int>& sorted_multiset) const;

private:
    int vars_;
    int degree_;
    std::vector<std::vector<int>> multisets_;
    std::map<std::vector<int>, int> index_;
};

namespace detail {

inline std::vector<int> multiset_insert(const std::vector<int>& ms, int var) {
    std::vector<int> out;
    out.reserve(ms.size() + 1);
    size_t i = 0;
    while (i < ms.size() && ms[i] <= var) out.push_back(ms[i++]);
    out.push_back(var);
    while (i < ms.size()) out.push_back(ms[i++]);
    return out;
}

// Expands a product of linear forms into monomial coordinates.
template <typename T>
std::map<std::vector<int>, T> expand_product(const std::vector<std::vector<T>>& factors) {
    std::map<std::vector<int>, T> poly;
    poly[{}] = T(1);
    for (const auto& f : factors) {
        std::map<std::vector<int>, T> next;
        for (const auto& [ms, coef] : poly) {
            for (size_t r = 0; r < f.size(); ++r) {
                if (f[r] == T(0)) continue;
                next[multiset_insert(ms, int(r))] += coef * f[r];
            }
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace detail

// Matrix of the induced action of t on degree-n monomials. Functorial:
// sym_power_operator(A*B) = sym_power_operator(A) * sym_power_operator(B).
// Refuses bases larger than max_dim with DimensionTooLarge.
template <typename T>
Mat<T> sym_power_operator(const Mat<T>& t, int n, long max_dim = 100000) {
    if (!t.is_square()) throw DimensionMismatch("symmetric power of non-square matrix");
    if (n < 1) throw MalformedInput("symmetric power degree must be >= 1");
    if (binomial(t.rows() + n - 1, n) > max_dim)
        throw DimensionTooLarge("symmetric power dimension exceeds " +
                                std::to_string(max_dim));
    MonomialBasis basis(t.rows(), n);
    Mat<T> s(basis.size(), basis.size());
    for (int j = 0; j < basis.size(); ++j) {
        std::vector<std::vector<T>> factors;
        for (int var : basis.multiset(j)) factors.push_back(t.col(var));
        for (const auto& [ms, coef] : detail::expand_product(factors))
            s(basis.index_of(ms), j) = coef;
    }
    return s;
}

// Coordinates of a product of vectors in the monomial basis of the matching
// degree.
RatVec sym_product_coords(const MonomialBasis& basis, const std::vector<RatVec>& factors);

// End-to-end record for the symmetric-power Jordan block claim: for T1
// unipotent with a unique size-3 block, S^n(T1) - id has nilpotency index
// exactly 2n+1 and the part 2n+1 occurs exactly once.
struct Mon1Certificate {
    int n = 0;
    JordanType t1_type;
    IntMat sym_power;
    std::vector<int> rank_seq;  // ranks of (S^n T1 - id)^k, k = 0,1,...
    JordanType type;
    bool pow_2n_nonzero = false;
    bool pow_2n1_zero = false;
    int multiplicity_max_part = 0;

    bool valid() const {
        return pow_2n_nonzero && pow_2n1_zero && multiplicity_max_part == 1;
    }
};

// Throws WrongJordanProfile unless T1 is unipotent with exactly one Jordan
// block of size 3 and no larger block.
Mon1Certificate verify_mon1(const Isometry& t1, int n, long max_dim = 100000);

// The 2n+1 chain monomials v0^n, v0^{n-1}v1, ..., v1^n, v1^{n-1}v2, ..., v2^n
// together with an exact independence certificate and the nonvanishing
// N^{2n}(gamma_{2n}) = c * gamma_0, where N = S^n(T) - id for the standard
// operator T: v0 -> v0, v1 -> v0+v1, v2 -> v1+v2 (identity on a complement).
struct ChainCertificate {
    int n = 0;
    int sym_dim = 0;
    std::vector<RatVec> gammas;  // coordinates in the degree-n monomial basis
    bool independent = false;
    Rat c;                       // nonzero scalar with N^{2n}(gamma_{2n}) = c gamma_0
};

ChainCertificate chain_vectors(const IntVec& v0, const IntVec& v1, const IntVec& v2,
                               int n);

// Sampling transcript for the ideal of (n+1)-st powers of isotropic vectors.
struct ShellRecord {
    long height = 0;
    int sampled = 0;
    int dim_after = 0;
};

// Homogeneous element of the truncated symmetric algebra, as exact-rational
// coordinates over the degree's monomial basis.
struct RingElement {
    int degree = 0;
    RatVec coords;

    bool is_zero() const {
        for (const auto& x : coords)
            if (x != 0) return false;
        return true;
    }
};

// Sym(H^2) modulo the ideal generated in degree n+1 by (n+1)-st powers of
// isotropic vectors. The degree-(n+1) ideal span is sampled over max-norm
// shells of primitive isotropic vectors until three consecutive shells add
// no new dimension; exceeding `budget` shells throws SpanNotStabilized.
class VerbitskyRing {
public:
    static VerbitskyRing build(const Lattice& lat, int n, long budget);
    // additionally seeds the span with the powers of the given generators
    // (used when a specific isotropic class must be certified a member)
    static VerbitskyRing build_seeded(const Lattice& lat, int n, long budget,
                                      const std::vector<IntVec>& seeds);

    int n() const { return n_; }
    int sym_dim() const { return sym_dim_; }
    int ideal_dim() const { return int(ideal_.size()); }
    const std::vector<ShellRecord>& transcript() const { return transcript_; }

    // v^k as a ring element, k <= n+1
    RingElement power(const IntVec& v, int k) const;
    // identity in degrees <= n (the ideal starts in degree n+1); reduces
    // modulo the sampled ideal span in degree n+1
    RingElement reduce(RingElement e) const;
    bool is_zero_in_quotient(const RingElement& e) const {
        return reduce(e).is_zero();
    }

private:
    int vars_ = 0;
    int n_ = 0;
    int sym_dim_ = 0;
    std::vector<ShellRecord> transcript_;
    std::map<int, RatVec> ideal_;  // pivot column -> reduced row, degree n+1
};

struct PowerVanishingCertificate {
    int n = 0;
    IntVec l;
    int sym_dim = 0;    // dim Sym^{n+1}
    int ideal_dim = 0;  // dim of the span of sampled isotropic powers
    std::vector<ShellRecord> transcript;
    bool l_pow_n_nonzero = false;
    bool l_pow_n1_zero = false;
    std::optional<bool> x_pow_n1_nonzero;  // for a supplied non-isotropic x
};

// Certifies l^n != 0 and l^{n+1} = 0 in Sym(H^2) modulo the ideal generated
// in degree n+1 by (n+1)-st powers of isotropic vectors. The ideal span is
// sampled over max-norm shells until three consecutive shells add no new
// dimension; exceeding `budget` shells throws SpanNotStabilized.
PowerVanishingCertificate verbitsky_power_vanishing(
    const Lattice& lat, const IntVec& l, int n, long budget,
    const std::optional<IntVec>& x = std::nullopt);

}  // namespace hk
