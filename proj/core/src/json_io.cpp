#include "hk/json_io.hpp"

namespace hk {

Json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ValidationFailed(where + ": bad integer string");
        }
    }
    throw ValidationFailed(where + ": expected integer");
}

Json intvec_to_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(int_to_json(x));
    return out;
}

IntVec intvec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationFailed(where + ": expected array");
    IntVec v;
    for (size_t i = 0; i < j.size(); ++i)
        v.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Json intmat_to_json(const IntMat& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) out.push_back(intvec_to_json(m.row(i)));
    return out;
}

IntMat intmat_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ValidationFailed(where + ": expected non-empty array of rows");
    std::vector<IntVec> rows;
    for (size_t i = 0; i < j.size(); ++i)
        rows.push_back(intvec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw ValidationFailed(where + ": ragged rows");
    IntMat m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) m(i, c) = rows[i][c];
    return m;
}

namespace {

Rat rat_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const MalformedInput&) {
            throw ValidationFailed(where + ": bad rational");
        }
    }
    throw ValidationFailed(where + ": expected rational");
}

}  // namespace

Json ratmat_to_json(const RatMat& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m(i, c)));
        out.push_back(row);
    }
    return out;
}

RatMat ratmat_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ValidationFailed(where + ": expected non-empty array of rows");
    size_t cols = 0;
    std::vector<RatVec> rows;
    for (size_t i = 0; i < j.size(); ++i) {
        const Json& rj = j[i];
        if (!rj.is_array()) throw ValidationFailed(where + ": expected array rows");
        RatVec row;
        for (size_t c = 0; c < rj.size(); ++c)
            row.push_back(rat_from_json(rj[c], where + "[" + std::to_string(i) + "][" +
                                                    std::to_string(c) + "]"));
        if (i == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw ValidationFailed(where + ": ragged rows");
        rows.push_back(std::move(row));
    }
    RatMat m(int(rows.size()), int(cols));
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) m(i, c) = rows[i][c];
    return m;
}

Json gaussvec_to_json(const GaussVec& v) {
    Json out = Json::array();
    for (const auto& z : v)
        out.push_back(Json::array({rat_to_string(z.re), rat_to_string(z.im)}));
    return out;
}

GaussVec gaussvec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationFailed(where + ": expected array");
    GaussVec v;
    for (size_t i = 0; i < j.size(); ++i) {
        const Json& e = j[i];
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2)
            throw ValidationFailed(at + ": expected [re, im]");
        v.emplace_back(rat_from_json(e[0], at + "[0]"), rat_from_json(e[1], at + "[1]"));
    }
    return v;
}

Json lattice_to_json(const Lattice& lat) {
    Json j;
    j["name"] = lat.name;
    j["gram"] = intmat_to_json(lat.gram);
    return j;
}

Lattice lattice_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ValidationFailed(where + ": expected object");
    if (!j.contains("gram")) throw ValidationFailed(where + ".gram: missing");
    Lattice lat;
    lat.name = j.value("name", std::string("lattice"));
    lat.gram = intmat_from_json(j["gram"], where + ".gram");
    check_symmetric(lat);
    return lat;
}

Json lrl_certificate_to_json(const LrlCertificate& cert) {
    Json j;
    j["lattice"] = lattice_to_json(cert.lattice);
    j["n"] = cert.n;
    j["height"] = cert.height;
    j["delta"] = intvec_to_json(cert.delta);
    j["v"] = intvec_to_json(cert.v);
    j["t1"] = intmat_to_json(cert.t1.matrix);
    j["t1_index"] = cert.t1_index;
    j["t1_jordan_type"] = cert.mon1.t1_type.partition;
    j["sym_dim"] = cert.mon1.sym_power.rows();
    j["sym_power"] = intmat_to_json(cert.mon1.sym_power);
    j["rank_sequence"] = cert.mon1.rank_seq;
    j["jordan_type"] = cert.mon1.type.partition;
    j["pow_2n_nonzero"] = cert.mon1.pow_2n_nonzero;
    j["pow_2n_plus_1_zero"] = cert.mon1.pow_2n1_zero;
    j["max_part_multiplicity"] = cert.mon1.multiplicity_max_part;
    j["valid"] = cert.valid();
    return j;
}

LrlCertificate lrl_certificate_from_json(const Json& j) {
    LrlCertificate cert;
    cert.lattice = lattice_from_json(j.at("lattice"), "lattice");
    cert.n = j.at("n").get<int>();
    cert.height = j.at("height").get<long>();
    cert.delta = intvec_from_json(j.at("delta"), "delta");
    cert.v = intvec_from_json(j.at("v"), "v");
    cert.t1 = Isometry{cert.lattice, intmat_from_json(j.at("t1"), "t1")};
    cert.t1_index = j.at("t1_index").get<int>();
    cert.mon1.n = cert.n;
    cert.mon1.t1_type.partition = j.at("t1_jordan_type").get<std::vector<int>>();
    cert.mon1.sym_power = intmat_from_json(j.at("sym_power"), "sym_power");
    cert.mon1.rank_seq = j.at("rank_sequence").get<std::vector<int>>();
    cert.mon1.type.partition = j.at("jordan_type").get<std::vector<int>>();
    cert.mon1.pow_2n_nonzero = j.at("pow_2n_nonzero").get<bool>();
    cert.mon1.pow_2n1_zero = j.at("pow_2n_plus_1_zero").get<bool>();
    cert.mon1.multiplicity_max_part = j.at("max_part_multiplicity").get<int>();
    return cert;
}

Json oracle_to_json(const IntersectionOracle& oracle) {
    Json values = Json::object();
    for (const auto& [m, v] : oracle.values) values[m.to_string()] = rat_to_string(v);
    Json j;
    j["n"] = oracle.n;
    j["values"] = values;
    return j;
}

IntersectionOracle oracle_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("values"))
        throw ValidationFailed("oracle: expected {\"n\": int, \"values\": {...}}");
    IntersectionOracle oracle;
    oracle.n = j.at("n").get<int>();
    for (const auto& [key, val] : j.at("values").items()) {
        ChernMonomial m = ChernMonomial::parse(key);
        oracle.values[m] = rat_from_json(val, "values." + key);
    }
    oracle.validate();
    return oracle;
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string(buf);
}

}  // namespace hk
