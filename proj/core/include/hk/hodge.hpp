#pragma once

#include <optional>
#include <vector>

#include "hk/monodromy.hpp"

namespace hk {

// Weight-two Hodge structure determined by a period representative omega:
// H^{2,0} = span(omega), H^{0,2} its conjugate, H^{1,1} the common
// orthogonal. Dimensions are always (1, rank-2, 1).
struct HodgeStructure {
    Lattice lattice;
    GaussVec omega;
    std::vector<GaussVec> h11_basis;
};

struct PeriodDiagnostics {
    bool is_period = false;
    GaussRat pair_tau_tau;  // must be 0
    Rat pair_tau_conj;      // must be > 0 (always real)
};

// Checks pair(tau,tau) = 0 and pair(tau,conj tau) > 0 on a lattice of
// signature (3, rank-3). Exact values are reported either way.
PeriodDiagnostics is_period_point(const Lattice& lat, const GaussVec& tau);

HodgeStructure hodge_decomposition(const Lattice& lat, const GaussVec& tau);

// Integral alpha is of type (1,1) for tau iff pair(alpha, tau) = 0; the
// conjugate condition is automatic for real alpha.
bool is_type_11(const Lattice& lat, const GaussVec& tau, const IntVec& alpha);

// Membership in the polarized slice: period point and pair(tau, L) = 0.
// Requires pair(L,L) > 0.
bool polarized_slice_member(const Lattice& lat, const GaussVec& tau, const IntVec& l);

// Dimension summary of the limiting weight filtration data carried by a
// unipotent isometry of index <= 3. Never claims more than dimensions.
struct LimitMhsSummary {
    int index = 0;
    int dim_w2 = 0;
    int dim_w1 = 0;
    std::optional<bool> parity_even;        // index 2 only
    std::vector<int> log_rank_sequence;     // index 3 only
    std::optional<JordanType> type;         // index 3 only
};

LimitMhsSummary limit_mhs_summary(const Isometry& t);

// Relabels coordinates along a basis marking; out[i] = tau[marking[i]].
GaussVec period_vector_of_marked(const GaussVec& tau, const std::vector<int>& marking);

}  // namespace hk
