#include "hk/matrix.hpp"

namespace hk {

Int bareiss_det(const IntMat& a) {
    if (!a.is_square()) throw DimensionMismatch("det of non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntMat w = a;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w(p, j), w(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                // exact by Sylvester's identity
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

int int_rank(const IntMat& a) { return rank_of(to_rat(a)); }

namespace {

// Row echelon over Z with unimodular row operations; also applies the same
// operations to `u` when given (for kernel extraction). Returns pivot count.
int z_row_echelon(IntMat& m, IntMat* u) {
    auto swap_rows = [&](int i, int j) {
        for (int c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
        if (u)
            for (int c = 0; c < u->cols(); ++c) std::swap((*u)(i, c), (*u)(j, c));
    };
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        // gcd-reduce the column below r onto row r
        while (true) {
            int p = -1;
            for (int i = r; i < m.rows(); ++i)
                if (m(i, c) != 0 &&
                    (p < 0 || mpz_cmpabs(m(i, c).get_mpz_t(), m(p, c).get_mpz_t()) < 0))
                    p = i;
            if (p < 0) break;
            if (p != r) swap_rows(p, r);
            bool done = true;
            for (int i = r + 1; i < m.rows(); ++i) {
                if (m(i, c) == 0) continue;
                Int q = m(i, c) / m(r, c);  // truncated quotient is fine here
                if (q != 0) {
                    for (int j = 0; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
                    if (u)
                        for (int j = 0; j < u->cols(); ++j) (*u)(i, j) -= q * (*u)(r, j);
                }
                if (m(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0) {
            for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
            if (u)
                for (int j = 0; j < u->cols(); ++j) (*u)(r, j) = -(*u)(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

IntMat row_hnf(const IntMat& a) {
    IntMat m = a;
    int r = z_row_echelon(m, nullptr);
    // reduce entries above each pivot into [0, pivot)
    std::vector<int> pivot_col(r);
    for (int i = 0, c = 0; i < r; ++i) {
        while (m(i, c) == 0) ++c;
        pivot_col[i] = c;
    }
    // left to right: each pivot row has zeros at all earlier pivot columns,
    // so later reductions never disturb columns already canonicalized
    for (int i = 0; i < r; ++i) {
        int c = pivot_col[i];
        for (int k = 0; k < i; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(k, c).get_mpz_t(), m(i, c).get_mpz_t());
            if (q != 0)
                for (int j = 0; j < m.cols(); ++j) m(k, j) -= q * m(i, j);
        }
    }
    IntMat out(r, a.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

std::vector<IntVec> integer_kernel(const IntMat& a) {
    // Row-reduce a^T with a transform: rows of U aligned with zero rows of
    // the echelon form give a Z-basis of {x : a x = 0}.
    IntMat b = a.transpose();
    IntMat u = IntMat::identity(b.rows());
    int r = z_row_echelon(b, &u);
    std::vector<IntVec> raw;
    for (int i = r; i < b.rows(); ++i) raw.push_back(u.row(i));
    if (raw.empty()) return raw;
    IntMat canon = row_hnf(mat_from_vec_rows(raw, u.cols()));
    std::vector<IntVec> out;
    for (int i = 0; i < canon.rows(); ++i) out.push_back(canon.row(i));
    return out;
}

std::vector<IntVec> saturated_image(const IntMat& a) {
    // span_Q(cols a) n Z^n  =  kernel of the stacked basis of ker(a^T).
    std::vector<IntVec> left = integer_kernel(a.transpose());
    if (left.empty()) {
        std::vector<IntVec> out;
        IntMat id = IntMat::identity(a.rows());
        for (int i = 0; i < a.rows(); ++i) out.push_back(id.row(i));
        return out;
    }
    return integer_kernel(mat_from_vec_rows(left, a.rows()));
}

}  // namespace hk
