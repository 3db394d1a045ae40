#include "hk/lattice.hpp"

#include <sstream>

namespace hk {

void check_symmetric(const Lattice& lat) {
    if (!lat.gram.is_square())
        throw ValidationFailed("gram matrix is not square");
    for (int i = 0; i < lat.rank(); ++i)
        for (int j = i + 1; j < lat.rank(); ++j)
            if (lat.gram(i, j) != lat.gram(j, i)) {
                std::ostringstream os;
                os << "gram not symmetric at (" << i << "," << j << ")";
                throw ValidationFailed(os.str());
            }
}

Int pair(const Lattice& lat, const IntVec& x, const IntVec& y) {
    const int n = lat.rank();
    if (x.size() != size_t(n) || y.size() != size_t(n))
        throw DimensionMismatch("vector length does not match lattice rank");
    Int acc = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < n; ++j) row += lat.gram(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

GaussRat pair_c(const Lattice& lat, const GaussVec& x, const GaussVec& y) {
    const int n = lat.rank();
    if (x.size() != size_t(n) || y.size() != size_t(n))
        throw DimensionMismatch("vector length does not match lattice rank");
    GaussRat acc;
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        GaussRat row;
        for (int j = 0; j < n; ++j) row += GaussRat(Rat(lat.gram(i, j))) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

Signature signature(const Lattice& lat) {
    check_symmetric(lat);
    const int n = lat.rank();
    RatMat a = to_rat(lat.gram);
    Signature sig;
    for (int i = 0; i < n; ++i) {
        if (a(i, i) == 0) {
            // bring a nonzero diagonal entry to position i, or create one
            int d = -1;
            for (int k = i + 1; k < n; ++k)
                if (a(k, k) != 0) { d = k; break; }
            if (d >= 0) {
                for (int j = 0; j < n; ++j) std::swap(a(i, j), a(d, j));
                for (int j = 0; j < n; ++j) std::swap(a(j, i), a(j, d));
            } else {
                int k = -1;
                for (int c = i + 1; c < n && k < 0; ++c)
                    if (a(i, c) != 0) k = c;
                if (k < 0) throw DegenerateForm("zero block in congruence diagonalization");
                // all remaining diagonal entries are zero, so this makes
                // a(i,i) = 2 a(i,k) != 0
                for (int j = 0; j < n; ++j) a(i, j) += a(k, j);
                for (int j = 0; j < n; ++j) a(j, i) += a(j, k);
            }
        }
        const Rat piv = a(i, i);
        for (int r = i + 1; r < n; ++r) {
            if (a(r, i) == 0) continue;
            Rat f = a(r, i) / piv;
            for (int j = 0; j < n; ++j) a(r, j) -= f * a(i, j);
            for (int j = 0; j < n; ++j) a(j, r) -= f * a(j, i);
        }
        if (piv > 0)
            ++sig.positive;
        else
            ++sig.negative;
    }
    return sig;
}

std::pair<IntVec, Int> primitivize(const IntVec& x) {
    if (is_zero_vec(x)) throw ZeroVector("primitivize of the zero vector");
    Int g = vec_gcd(x);
    IntVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), x[i].get_mpz_t(), g.get_mpz_t());
    return {out, g};
}

std::vector<IntVec> orthogonal_complement(const Lattice& lat,
                                          const std::vector<IntVec>& s) {
    const int n = lat.rank();
    IntMat a(int(s.size()), n);
    for (size_t r = 0; r < s.size(); ++r) {
        if (s[r].size() != size_t(n))
            throw DimensionMismatch("vector length does not match lattice rank");
        for (int j = 0; j < n; ++j) {
            Int acc = 0;
            for (int k = 0; k < n; ++k) acc += s[r][k] * lat.gram(k, j);
            a(int(r), j) = acc;
        }
    }
    // integer kernel of the pairing functionals; saturated by construction
    return integer_kernel(a);
}

std::pair<Lattice, Signature> primitive_sublattice(const Lattice& lat, const IntVec& l) {
    Int norm = pair(lat, l, l);
    if (norm <= 0)
        throw NonPositivePolarization("pair(L, L) = " + norm.get_str());
    Signature sig = signature(lat);
    if (sig.positive != 3 || sig.negative != lat.rank() - 3)
        throw WrongSignature("expected signature (3, rank-3)");
    std::vector<IntVec> basis = orthogonal_complement(lat, {l});
    const int m = int(basis.size());
    IntMat sub(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sub(i, j) = pair(lat, basis[i], basis[j]);
    Lattice out{lat.name + "-perp", sub};
    return {out, signature(out)};
}

void validate_lattice(const Lattice& lat, bool bb) {
    check_symmetric(lat);
    if (bareiss_det(lat.gram) == 0) throw ValidationFailed("gram matrix is degenerate");
    if (bb) {
        Signature sig = signature(lat);
        if (sig.positive != 3 || sig.negative != lat.rank() - 3) {
            std::ostringstream os;
            os << "signature (" << sig.positive << "," << sig.negative
               << ") is not (3," << lat.rank() - 3 << ")";
            throw ValidationFailed(os.str());
        }
    }
}

}  // namespace hk
