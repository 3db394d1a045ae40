#pragma once

#include <json.hpp>

#include <string>

#include "hk/hodge.hpp"
#include "hk/isotropy.hpp"
#include "hk/lrl.hpp"
#include "hk/rrh.hpp"

namespace hk {

using Json = nlohmann::ordered_json;

// Integers serialize as JSON numbers when they fit in 64 bits, as decimal
// strings otherwise; rationals always as "p/q"; complex entries as
// ["re", "im"] rational-string pairs.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j, const std::string& where);
Json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const Json& j, const std::string& where);
Json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const Json& j, const std::string& where);
Json ratmat_to_json(const RatMat& m);
RatMat ratmat_from_json(const Json& j, const std::string& where);
Json gaussvec_to_json(const GaussVec& v);
GaussVec gaussvec_from_json(const Json& j, const std::string& where);

// Lattice schema: {"name": str, "gram": [[int]]}. Throws ValidationFailed
// carrying the offending schema path.
Json lattice_to_json(const Lattice& lat);
Lattice lattice_from_json(const Json& j, const std::string& where);

Json lrl_certificate_to_json(const LrlCertificate& cert);
LrlCertificate lrl_certificate_from_json(const Json& j);

Json oracle_to_json(const IntersectionOracle& oracle);
IntersectionOracle oracle_from_json(const Json& j);

// FNV-1a digest used to pin inputs inside run manifests.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace hk
