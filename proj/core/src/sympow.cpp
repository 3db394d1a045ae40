#include "hk/sympow.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hk/isotropy.hpp"

namespace hk {

Int binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)a, (unsigned long)b);
    return r;
}

MonomialBasis::MonomialBasis(int vars, int degree) : vars_(vars), degree_(degree) {
    if (vars < 1 || degree < 0) throw MalformedInput("bad monomial basis shape");
    std::vector<int> ms;
    // nondecreasing index tuples in lexicographic order
    std::function<void(int)> gen = [&](int lo) {
        if (int(ms.size()) == degree) {
            index_[ms] = int(multisets_.size());
            multisets_.push_back(ms);
            return;
        }
        for (int v = lo; v < vars; ++v) {
            ms.push_back(v);
            gen(v);
            ms.pop_back();
        }
    };
    gen(0);
}

int MonomialBasis::index_of(const std::vector<int>& sorted_multiset) const {
    auto it = index_.find(sorted_multiset);
    if (it == index_.end()) throw MalformedInput("monomial outside basis");
    return it->second;
}

RatVec sym_product_coords(const MonomialBasis& basis, const std::vector<RatVec>& factors) {
    if (int(factors.size()) != basis.degree())
        throw DimensionMismatch("factor count does not match basis degree");
    std::vector<RatVec> fs = factors;
    RatVec out(basis.size(), Rat(0));
    for (const auto& [ms, coef] : detail::expand_product(fs))
        out[basis.index_of(ms)] = coef;
    return out;
}

namespace {

RatVec to_rat_vec(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

// Incrementally row-reduced span with unit pivots.
class RowSpan {
public:
    // Returns true when the row enlarged the span.
    bool add(RatVec row) {
        reduce(row);
        int p = pivot_of(row);
        if (p < 0) return false;
        Rat inv = Rat(1) / row[p];
        for (auto& x : row) x *= inv;
        for (auto& [q, r] : rows_) {
            if (r[p] == 0) continue;
            Rat f = r[p];
            for (size_t j = 0; j < r.size(); ++j) r[j] -= f * row[j];
        }
        rows_[p] = std::move(row);
        return true;
    }

    void reduce(RatVec& row) const {
        for (const auto& [p, r] : rows_) {
            if (row[p] == 0) continue;
            Rat f = row[p];
            for (size_t j = 0; j < row.size(); ++j) row[j] -= f * r[j];
        }
    }

    bool contains(RatVec row) const {
        reduce(row);
        return pivot_of(row) < 0;
    }

    int dim() const { return int(rows_.size()); }

    std::map<int, RatVec> take_rows() { return std::move(rows_); }

private:
    static int pivot_of(const RatVec& row) {
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) return int(j);
        return -1;
    }

    std::map<int, RatVec> rows_;  // pivot column -> reduced row
};

}  // namespace

Mon1Certificate verify_mon1(const Isometry& t1, int n, long max_dim) {
    const int dim = t1.rank();
    RatMat p = to_rat(t1.matrix) - RatMat::identity(dim);
    JordanType jt1;
    try {
        jt1 = jordan_type(p, true);
    } catch (const NotNilpotent&) {
        throw WrongJordanProfile("T1 is not unipotent");
    }
    if (jt1.partition.empty() || jt1.partition.front() != 3 || jt1.multiplicity(3) != 1) {
        std::ostringstream os;
        os << "T1 must have exactly one Jordan block of size 3 and none larger";
        throw WrongJordanProfile(os.str());
    }

    Mon1Certificate cert;
    cert.n = n;
    cert.t1_type = jt1;
    cert.sym_power = sym_power_operator(t1.matrix, n, max_dim);
    RatMat big = to_rat(cert.sym_power) - RatMat::identity(cert.sym_power.rows());
    cert.rank_seq = rank_sequence(big);
    cert.type = jordan_type(big, true);
    const size_t k0 = cert.rank_seq.size() - 1;  // smallest k with rank(N^k) = 0
    cert.pow_2n_nonzero = k0 > size_t(2 * n);
    cert.pow_2n1_zero = k0 <= size_t(2 * n + 1);
    cert.multiplicity_max_part = cert.type.multiplicity(2 * n + 1);
    return cert;
}

ChainCertificate chain_vectors(const IntVec& v0, const IntVec& v1, const IntVec& v2,
                               int n) {
    const int d = int(v0.size());
    if (v1.size() != size_t(d) || v2.size() != size_t(d))
        throw DimensionMismatch("chain vectors of unequal length");
    if (n < 1) throw MalformedInput("chain degree must be >= 1");

    RatMat triple(3, d);
    for (int j = 0; j < d; ++j) {
        triple(0, j) = Rat(v0[j]);
        triple(1, j) = Rat(v1[j]);
        triple(2, j) = Rat(v2[j]);
    }
    if (rank_of(triple) != 3) throw DependentInputs("v0, v1, v2 are linearly dependent");

    MonomialBasis basis(d, n);
    ChainCertificate cert;
    cert.n = n;
    cert.sym_dim = basis.size();

    auto staircase = [&](const IntVec& a, const IntVec& b, int copies_b) {
        std::vector<RatVec> fs;
        for (int i = 0; i < n - copies_b; ++i) fs.push_back(to_rat_vec(a));
        for (int i = 0; i < copies_b; ++i) fs.push_back(to_rat_vec(b));
        return sym_product_coords(basis, fs);
    };
    for (int k = 0; k <= n; ++k) cert.gammas.push_back(staircase(v0, v1, k));
    for (int j = 1; j <= n; ++j) cert.gammas.push_back(staircase(v1, v2, j));

    RatMat gmat(int(cert.gammas.size()), basis.size());
    for (int i = 0; i < gmat.rows(); ++i)
        for (int j = 0; j < gmat.cols(); ++j) gmat(i, j) = cert.gammas[i][j];
    cert.independent = rank_of(gmat) == 2 * n + 1;

    // T = P J P^{-1} with J the standard chain on (v0, v1, v2) and identity
    // on a completion of the triple to a basis.
    RatMat pmat(d, d);
    for (int i = 0; i < d; ++i) {
        pmat(i, 0) = Rat(v0[i]);
        pmat(i, 1) = Rat(v1[i]);
        pmat(i, 2) = Rat(v2[i]);
    }
    int placed = 3;
    for (int e = 0; e < d && placed < d; ++e) {
        pmat(e, placed) = 1;
        RatMat head(d, placed + 1);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j <= placed; ++j) head(i, j) = pmat(i, j);
        if (rank_of(head) == placed + 1)
            ++placed;
        else
            pmat(e, placed) = 0;
    }
    RatMat jmat = RatMat::identity(d);
    jmat(0, 1) = 1;  // J(v1) = v0 + v1
    jmat(1, 2) = 1;  // J(v2) = v1 + v2
    auto pinv = inverse(pmat);
    if (!pinv) throw DependentInputs("could not complete the triple to a basis");
    RatMat t = pmat * jmat * *pinv;

    RatMat s = sym_power_operator(t, n);
    RatMat big_n = s - RatMat::identity(s.rows());
    RatVec w = big_n.pow(unsigned(2 * n)).mul(cert.gammas.back());

    const RatVec& g0 = cert.gammas.front();
    int idx = -1;
    for (int j = 0; j < int(g0.size()); ++j)
        if (g0[j] != 0) { idx = j; break; }
    Rat c = w[idx] / g0[idx];
    bool multiple = true;
    for (int j = 0; j < int(g0.size()); ++j)
        if (w[j] != c * g0[j]) { multiple = false; break; }
    cert.c = multiple ? c : Rat(0);
    return cert;
}

namespace {

RatVec power_coords(const MonomialBasis& basis, const IntVec& v) {
    std::vector<RatVec> fs(basis.degree(), to_rat_vec(v));
    return sym_product_coords(basis, fs);
}

// Samples (n+1)-st powers of primitive isotropic vectors shell by shell
// until the span holds still for three consecutive shells.
void sample_ideal_span(const Lattice& lat, int n, long budget,
                       const std::vector<IntVec>& seeds,
                       std::vector<ShellRecord>& transcript, RowSpan& span) {
    MonomialBasis high(lat.rank(), n + 1);
    if (!seeds.empty()) {
        for (const auto& s : seeds) span.add(power_coords(high, s));
        transcript.push_back({0, int(seeds.size()), span.dim()});
    }
    int stable = 0;
    long h = 0;
    while (stable < 3) {
        if (h >= budget)
            throw SpanNotStabilized("span still growing after " + std::to_string(budget) +
                                    " shells");
        ++h;
        std::vector<IntVec> shell = isotropic_shell(lat, Int(h));
        int before = span.dim();
        for (const auto& v : shell) span.add(power_coords(high, v));
        transcript.push_back({h, int(shell.size()), span.dim()});
        stable = span.dim() == before ? stable + 1 : 0;
    }
}

}  // namespace

VerbitskyRing VerbitskyRing::build(const Lattice& lat, int n, long budget) {
    return build_seeded(lat, n, budget, {});
}

VerbitskyRing VerbitskyRing::build_seeded(const Lattice& lat, int n, long budget,
                                          const std::vector<IntVec>& seeds) {
    if (n < 1) throw MalformedInput("n must be >= 1");
    VerbitskyRing ring;
    ring.vars_ = lat.rank();
    ring.n_ = n;
    ring.sym_dim_ = int(MonomialBasis(lat.rank(), n + 1).size());
    RowSpan span;
    sample_ideal_span(lat, n, budget, seeds, ring.transcript_, span);
    ring.ideal_ = span.take_rows();
    return ring;
}

RingElement VerbitskyRing::power(const IntVec& v, int k) const {
    if (v.size() != size_t(vars_))
        throw DimensionMismatch("vector length does not match the ring");
    if (k < 1 || k > n_ + 1)
        throw MalformedInput("power degree must be between 1 and n+1");
    MonomialBasis basis(vars_, k);
    return RingElement{k, power_coords(basis, v)};
}

RingElement VerbitskyRing::reduce(RingElement e) const {
    if (e.degree <= n_) return e;  // the ideal starts in degree n+1
    if (e.degree == n_ + 1) {
        for (const auto& [p, row] : ideal_) {
            if (e.coords[p] == 0) continue;
            Rat f = e.coords[p];
            for (size_t j = 0; j < e.coords.size(); ++j) e.coords[j] -= f * row[j];
        }
        return e;
    }
    // degree d > n+1: the ideal's degree-d piece is spanned by monomial
    // multiples of the degree-(n+1) basis
    MonomialBasis low(vars_, n_ + 1);
    MonomialBasis mult(vars_, e.degree - n_ - 1);
    MonomialBasis high(vars_, e.degree);
    RowSpan span;
    for (const auto& [p, row] : ideal_) {
        for (int m = 0; m < mult.size(); ++m) {
            RatVec lifted(high.size(), Rat(0));
            for (int j = 0; j < low.size(); ++j) {
                if (row[j] == 0) continue;
                std::vector<int> ms = low.multiset(j);
                for (int var : mult.multiset(m)) ms = detail::multiset_insert(ms, var);
                lifted[high.index_of(ms)] += row[j];
            }
            span.add(std::move(lifted));
        }
    }
    span.reduce(e.coords);
    return e;
}

PowerVanishingCertificate verbitsky_power_vanishing(const Lattice& lat, const IntVec& l,
                                                    int n, long budget,
                                                    const std::optional<IntVec>& x) {
    if (is_zero_vec(l)) throw ZeroVector("l is zero");
    Int ll = pair(lat, l, l);
    if (ll != 0) throw NotIsotropic("pair(l,l) = " + ll.get_str());

    // The given l is itself an ideal generator; seeding it makes membership
    // of l^{n+1} checkable against an explicit sample.
    VerbitskyRing ring = VerbitskyRing::build_seeded(lat, n, budget,
                                                     {primitivize(l).first});
    PowerVanishingCertificate cert;
    cert.n = n;
    cert.l = l;
    cert.sym_dim = ring.sym_dim();
    cert.ideal_dim = ring.ideal_dim();
    cert.transcript = ring.transcript();
    cert.l_pow_n_nonzero = !ring.reduce(ring.power(l, n)).is_zero();
    cert.l_pow_n1_zero = ring.is_zero_in_quotient(ring.power(l, n + 1));

    if (x) {
        if (x->size() != size_t(lat.rank()))
            throw DimensionMismatch("x length does not match lattice rank");
        Int xx = pair(lat, *x, *x);
        if (xx == 0) throw PreconditionViolated("x is isotropic; expected pair(x,x) != 0");
        cert.x_pow_n1_nonzero = !ring.is_zero_in_quotient(ring.power(*x, n + 1));
    }
    return cert;
}

}  // namespace hk
