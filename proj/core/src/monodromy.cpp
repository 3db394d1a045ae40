#include "hk/monodromy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hk {

bool is_isometry(const Lattice& lat, const IntMat& m) {
    if (!m.is_square() || m.rows() != lat.rank()) return false;
    return m.transpose() * lat.gram * m == lat.gram;
}

Isometry check_isometry(const Lattice& lat, const IntMat& m) {
    if (!m.is_square() || m.rows() != lat.rank())
        throw DimensionMismatch("matrix size does not match lattice rank");
    IntMat lhs = m.transpose() * lat.gram * m;
    for (int i = 0; i < lat.rank(); ++i)
        for (int j = 0; j < lat.rank(); ++j)
            if (lhs(i, j) != lat.gram(i, j)) {
                std::ostringstream os;
                os << "pairing of basis vectors e" << i << ", e" << j
                   << " maps to " << lhs(i, j).get_str() << ", expected "
                   << lat.gram(i, j).get_str();
                throw NotIsometry(os.str());
            }
    return Isometry{lat, m};
}

Isometry compose(const Isometry& a, const Isometry& b) {
    return Isometry{a.lattice, a.matrix * b.matrix};
}

Isometry isometry_inverse(const Isometry& a) {
    auto inv = inverse(to_rat(a.matrix));
    if (!inv) throw NotIsometry("matrix is singular");
    IntMat out(a.rank(), a.rank());
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) {
            if ((*inv)(i, j).get_den() != 1)
                throw NotIsometry("inverse is not integral");
            out(i, j) = (*inv)(i, j).get_num();
        }
    return Isometry{a.lattice, out};
}

Isometry eichler_transvection(const Lattice& lat, const IntVec& delta, const IntVec& v) {
    const int n = lat.rank();
    Int dd = pair(lat, delta, delta);
    if (dd != 0)
        throw PreconditionViolated("pair(delta,delta) = " + dd.get_str() + ", expected 0");
    Int dv = pair(lat, delta, v);
    if (dv != 0)
        throw PreconditionViolated("pair(delta,v) = " + dv.get_str() + ", expected 0");
    Int q = pair(lat, v, v);
    if (q % 2 != 0) throw OddNorm("pair(v,v) = " + q.get_str());
    Int half_q = q / 2;

    IntVec gd = lat.gram.mul(delta);
    IntVec gv = lat.gram.mul(v);
    IntMat m(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            Int entry = (i == j) ? Int(1) : Int(0);
            entry += gv[j] * delta[i];
            entry -= gd[j] * v[i];
            entry -= half_q * gd[j] * delta[i];
            m(i, j) = entry;
        }
    }
    return check_isometry(lat, m);
}

std::optional<int> unipotency_index(const Isometry& t) {
    const int n = t.rank();
    RatMat p = to_rat(t.matrix) - RatMat::identity(n);
    if (p.is_zero()) return 1;
    RatMat pk = p;
    for (int k = 1; k <= n; ++k) {
        if (pk.is_zero()) return k;
        pk = pk * p;
    }
    return std::nullopt;
}

std::vector<int> rank_sequence(const RatMat& n) {
    std::vector<int> seq{n.rows()};
    RatMat pk = n;
    while (true) {
        int r = rank_of(pk);
        seq.push_back(r);
        if (r == 0 || r == seq[seq.size() - 2]) break;
        pk = pk * n;
    }
    return seq;
}

JordanType jordan_type(const RatMat& n, bool require_nilpotent) {
    if (!n.is_square()) throw DimensionMismatch("jordan_type of non-square matrix");
    std::vector<int> seq = rank_sequence(n);
    if (require_nilpotent && seq.back() != 0)
        throw NotNilpotent("rank sequence stabilizes at " + std::to_string(seq.back()));
    // blocks_ge[k] = rank(N^{k-1}) - rank(N^k)
    std::vector<int> blocks_ge;
    for (size_t k = 1; k < seq.size(); ++k) blocks_ge.push_back(seq[k - 1] - seq[k]);
    blocks_ge.push_back(0);
    JordanType jt;
    for (int size = int(blocks_ge.size()) - 1; size >= 1; --size) {
        int count = blocks_ge[size - 1] - blocks_ge[size];
        for (int c = 0; c < count; ++c) jt.partition.push_back(size);
    }
    std::sort(jt.partition.begin(), jt.partition.end(), std::greater<int>());
    return jt;
}

RatMat log_unipotent(const Isometry& t) {
    const int n = t.rank();
    RatMat p = to_rat(t.matrix) - RatMat::identity(n);
    RatMat pk = p;
    RatMat acc(n, n);
    for (int i = 1; i <= n; ++i) {
        if (pk.is_zero()) return acc;
        Rat coeff = make_rat(i % 2 == 1 ? 1 : -1, i);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) acc(r, c) += coeff * pk(r, c);
        pk = pk * p;
    }
    throw NotUnipotent("(T-id)^rank != 0");
}

RatMat exp_nilpotent(const RatMat& n) {
    if (!n.is_square()) throw DimensionMismatch("exp of non-square matrix");
    const int dim = n.rows();
    RatMat acc = RatMat::identity(dim);
    RatMat nk = n;
    Int fact = 1;
    for (int i = 1; i <= dim + 1; ++i) {
        if (nk.is_zero()) return acc;
        fact *= i;
        Rat coeff = make_rat(1, fact);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) acc(r, c) += coeff * nk(r, c);
        nk = nk * n;
    }
    throw NotNilpotent("exp_nilpotent requires a nilpotent matrix");
}

std::pair<WeightFiltration, ParityCertificate> weight_filtration_order2(const Isometry& t) {
    const int n = t.rank();
    IntMat p = t.matrix - IntMat::identity(n);
    if (p.is_zero()) throw PreconditionViolated("T - id = 0");
    if (!(p * p).is_zero()) throw IndexTooHigh("(T-id)^2 != 0");
    // (T-id)^2 = 0, so log T = T - id exactly
    WeightFiltration wf;
    wf.rank = n;
    wf.w1_basis = integer_kernel(p);
    wf.w2_basis = saturated_image(p);
    wf.dim_w1 = int(wf.w1_basis.size());
    wf.dim_w2 = int(wf.w2_basis.size());
    int r = int_rank(p);
    ParityCertificate pc{r, r % 2 == 0};
    return {wf, pc};
}

}  // namespace hk
