#include "hk/lrl.hpp"

namespace hk {

LrlOutcome large_radius_certificate(const Lattice& lat, int n, long height,
                                    long max_dim) {
    if (lat.rank() < 5)
        throw RankTooSmall("rank " + std::to_string(lat.rank()) + " < 5");
    if (n < 1) throw MalformedInput("n must be >= 1");

    LrlOutcome out;
    SearchResult delta = find_isotropic(lat, height);
    if (delta.status != SearchStatus::Found) {
        out.status = delta.status;
        out.missing = "delta";
        return out;
    }
    SearchResult companion = find_transvection_companion(lat, *delta.vector, height);
    if (companion.status != SearchStatus::Found) {
        out.status = companion.status;
        out.missing = "v";
        return out;
    }

    LrlCertificate cert;
    cert.lattice = lat;
    cert.n = n;
    cert.height = height;
    cert.delta = *delta.vector;
    cert.v = *companion.vector;
    cert.t1 = eichler_transvection(lat, cert.delta, cert.v);
    cert.t1_index = unipotency_index(cert.t1).value_or(0);
    cert.mon1 = verify_mon1(cert.t1, n, max_dim);

    out.status = SearchStatus::Found;
    out.certificate = std::move(cert);
    return out;
}

std::optional<std::string> recheck_lrl(const LrlCertificate& cert) {
    const Lattice& lat = cert.lattice;
    if (!is_isometry(lat, cert.t1.matrix)) return "t1 is not an isometry";
    if (pair(lat, cert.delta, cert.delta) != 0) return "delta is not isotropic";
    if (vec_gcd(cert.delta) != 1) return "delta is not primitive";
    Int q = pair(lat, cert.v, cert.v);
    if (q == 0 || q % 2 != 0) return "pair(v,v) is not even and nonzero";
    if (pair(lat, cert.delta, cert.v) != 0) return "v is not orthogonal to delta";
    if (cert.t1.matrix.mul(cert.delta) != cert.delta) return "T1 does not fix delta";
    if (unipotency_index(cert.t1) != std::optional<int>(3)) return "T1 index is not 3";
    if (cert.t1_index != 3) return "recorded T1 index is not 3";

    IntMat s = sym_power_operator(cert.t1.matrix, cert.n);
    if (s != cert.mon1.sym_power) return "recorded symmetric power differs";
    RatMat big = to_rat(s) - RatMat::identity(s.rows());
    if (rank_sequence(big) != cert.mon1.rank_seq) return "recorded rank sequence differs";
    if (!(jordan_type(big, true) == cert.mon1.type)) return "recorded Jordan type differs";
    const size_t k0 = cert.mon1.rank_seq.size() - 1;
    if (!(k0 == size_t(2 * cert.n + 1))) return "unipotency index of S^n(T1) is not 2n+1";
    if (cert.mon1.type.multiplicity(2 * cert.n + 1) != 1)
        return "part 2n+1 does not have multiplicity one";
    if (!cert.valid()) return "certificate flags are inconsistent";
    return std::nullopt;
}

}  // namespace hk
