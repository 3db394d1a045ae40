#pragma once

#include <optional>
#include <string>

#include "hk/isotropy.hpp"
#include "hk/sympow.hpp"

namespace hk {

// End-to-end witness chain: an isotropic delta, an even orthogonal
// companion v, the transvection T1 they define (index 3), and the
// symmetric-power certificate for S^n(T1) with unipotency index 2n+1.
struct LrlCertificate {
    Lattice lattice;
    int n = 0;
    long height = 0;
    IntVec delta;
    IntVec v;
    Isometry t1;
    int t1_index = 0;
    Mon1Certificate mon1;

    bool valid() const { return t1_index == 3 && mon1.valid(); }
};

struct LrlOutcome {
    SearchStatus status = SearchStatus::NotFoundWithinBound;
    std::string missing;  // "delta" or "v" when a search came up empty
    std::optional<LrlCertificate> certificate;
};

// Requires rank >= 5 (RankTooSmall otherwise). Definite forms surface as
// NonexistenceProved from the delta search; an exhausted height bound
// surfaces as NotFoundWithinBound with the failing stage named.
LrlOutcome large_radius_certificate(const Lattice& lat, int n, long height,
                                    long max_dim = 100000);

// Re-derives every claim of the certificate from its recorded witnesses:
// isometry property, preconditions on delta and v, T1 delta = delta, the
// symmetric-power matrix, its rank sequence and Jordan type. Returns the
// failing check's name, or nullopt when everything holds.
std::optional<std::string> recheck_lrl(const LrlCertificate& cert);

}  // namespace hk
