#include "hk/hodge.hpp"

namespace hk {

namespace {

bool all_zero(const GaussVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

PeriodDiagnostics is_period_point(const Lattice& lat, const GaussVec& tau) {
    Signature sig = signature(lat);
    if (sig.positive != 3 || sig.negative != lat.rank() - 3)
        throw WrongSignature("expected signature (3, rank-3)");
    if (tau.size() != size_t(lat.rank()))
        throw DimensionMismatch("tau length does not match lattice rank");
    if (all_zero(tau)) throw ZeroVector("tau is zero");

    PeriodDiagnostics d;
    d.pair_tau_tau = pair_c(lat, tau, tau);
    GaussRat herm = pair_c(lat, tau, conj(tau));
    // symmetric form: pair(tau, conj tau) is its own conjugate, hence real
    d.pair_tau_conj = herm.re;
    d.is_period = d.pair_tau_tau.is_zero() && d.pair_tau_conj > 0;
    return d;
}

HodgeStructure hodge_decomposition(const Lattice& lat, const GaussVec& tau) {
    PeriodDiagnostics d = is_period_point(lat, tau);
    if (!d.is_period)
        throw NotPeriodPoint("pair(tau,tau) = " + gauss_to_string(d.pair_tau_tau) +
                             ", pair(tau,conj tau) = " + rat_to_string(d.pair_tau_conj));
    const int n = lat.rank();
    GaussMat rows(2, n);
    GaussVec tbar = conj(tau);
    for (int j = 0; j < n; ++j) {
        GaussRat a, b;
        for (int k = 0; k < n; ++k) {
            GaussRat g = GaussRat(Rat(lat.gram(j, k)));
            a += g * tau[k];
            b += g * tbar[k];
        }
        rows(0, j) = a;
        rows(1, j) = b;
    }
    HodgeStructure hs;
    hs.lattice = lat;
    hs.omega = tau;
    hs.h11_basis = kernel_basis(rows);
    return hs;
}

bool is_type_11(const Lattice& lat, const GaussVec& tau, const IntVec& alpha) {
    PeriodDiagnostics d = is_period_point(lat, tau);
    if (!d.is_period) throw NotPeriodPoint("tau is not a period point");
    if (alpha.size() != size_t(lat.rank()))
        throw DimensionMismatch("alpha length does not match lattice rank");
    return pair_c(lat, to_gauss(alpha), tau).is_zero();
}

bool polarized_slice_member(const Lattice& lat, const GaussVec& tau, const IntVec& l) {
    Int norm = pair(lat, l, l);
    if (norm <= 0) throw NonPositivePolarization("pair(L,L) = " + norm.get_str());
    PeriodDiagnostics d = is_period_point(lat, tau);
    if (!d.is_period) return false;
    return pair_c(lat, tau, to_gauss(l)).is_zero();
}

LimitMhsSummary limit_mhs_summary(const Isometry& t) {
    std::optional<int> idx = unipotency_index(t);
    if (!idx) throw NotUnipotent("(T-id)^rank != 0");
    if (*idx > 3) throw IndexTooHigh("unipotency index " + std::to_string(*idx));

    LimitMhsSummary s;
    s.index = *idx;
    if (*idx == 1) {
        s.dim_w2 = 0;
        s.dim_w1 = t.rank();
        return s;
    }
    if (*idx == 2) {
        auto [wf, pc] = weight_filtration_order2(t);
        s.dim_w2 = wf.dim_w2;
        s.dim_w1 = wf.dim_w1;
        s.parity_even = pc.even;
        return s;
    }
    RatMat lg = log_unipotent(t);
    s.log_rank_sequence = rank_sequence(lg);
    s.type = jordan_type(lg, true);
    s.dim_w2 = s.log_rank_sequence[1];
    s.dim_w1 = t.rank() - s.log_rank_sequence[1];
    return s;
}

GaussVec period_vector_of_marked(const GaussVec& tau, const std::vector<int>& marking) {
    const size_t n = tau.size();
    if (marking.size() != n) throw BadMarking("marking length does not match");
    std::vector<bool> hit(n, false);
    for (int m : marking) {
        if (m < 0 || size_t(m) >= n || hit[m]) throw BadMarking("not a bijection");
        hit[m] = true;
    }
    GaussVec out(n);
    for (size_t i = 0; i < n; ++i) out[i] = tau[marking[i]];
    return out;
}

}  // namespace hk
