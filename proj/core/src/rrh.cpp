#include "hk/rrh.hpp"

#include <sstream>

namespace hk {

int ChernMonomial::degree() const {
    int d = l_exp;
    for (size_t i = 0; i < c_exp.size(); ++i) d += int(i + 1) * c_exp[i];
    return d;
}

void ChernMonomial::trim() {
    while (!c_exp.empty() && c_exp.back() == 0) c_exp.pop_back();
}

std::string ChernMonomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_exp.size(); ++i) {
        if (c_exp[i] == 0) continue;
        if (!first) os << "*";
        os << "c" << i + 1;
        if (c_exp[i] > 1) os << "^" << c_exp[i];
        first = false;
    }
    if (l_exp > 0) {
        if (!first) os << "*";
        os << "l";
        if (l_exp > 1) os << "^" << l_exp;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

ChernMonomial ChernMonomial::parse(const std::string& s) {
    ChernMonomial m;
    if (s == "1") return m;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t star = s.find('*', pos);
        std::string tok = s.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? s.size() : star + 1;
        if (tok.empty()) throw MalformedInput("empty factor in monomial '" + s + "'");
        int exp = 1;
        size_t caret = tok.find('^');
        std::string base = tok;
        if (caret != std::string::npos) {
            base = tok.substr(0, caret);
            try {
                exp = std::stoi(tok.substr(caret + 1));
            } catch (...) {
                throw MalformedInput("bad exponent in '" + tok + "'");
            }
            if (exp < 1) throw MalformedInput("bad exponent in '" + tok + "'");
        }
        if (base == "l") {
            m.l_exp += exp;
        } else if (base.size() > 1 && base[0] == 'c') {
            int idx = 0;
            try {
                idx = std::stoi(base.substr(1));
            } catch (...) {
                throw MalformedInput("bad symbol '" + base + "'");
            }
            if (idx < 1) throw MalformedInput("bad symbol '" + base + "'");
            if (int(m.c_exp.size()) < idx) m.c_exp.resize(idx, 0);
            m.c_exp[idx - 1] += exp;
        } else {
            throw MalformedInput("bad symbol '" + base + "'");
        }
    }
    m.trim();
    return m;
}

ChernPoly ChernPoly::constant(const Rat& r) {
    ChernPoly p;
    p.add_term(ChernMonomial{}, r);
    return p;
}

ChernPoly ChernPoly::chern(int i) {
    if (i < 1) throw MalformedInput("chern symbol index must be >= 1");
    ChernMonomial m;
    m.c_exp.assign(i, 0);
    m.c_exp[i - 1] = 1;
    ChernPoly p;
    p.add_term(m, Rat(1));
    return p;
}

ChernPoly ChernPoly::line() {
    ChernMonomial m;
    m.l_exp = 1;
    ChernPoly p;
    p.add_term(m, Rat(1));
    return p;
}

void ChernPoly::add_term(const ChernMonomial& m, const Rat& coeff) {
    if (coeff == 0) return;
    ChernMonomial key = m;
    key.trim();
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ChernPoly ChernPoly::graded_part(int degree) const {
    ChernPoly out;
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.add_term(m, c);
    return out;
}

ChernPoly ChernPoly::scaled(const Rat& r) const {
    ChernPoly out;
    if (r == 0) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * r);
    return out;
}

ChernPoly ChernPoly::mul(const ChernPoly& a, const ChernPoly& b, int max_degree) {
    ChernPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            ChernMonomial m;
            m.l_exp = ma.l_exp + mb.l_exp;
            m.c_exp.assign(std::max(ma.c_exp.size(), mb.c_exp.size()), 0);
            for (size_t i = 0; i < ma.c_exp.size(); ++i) m.c_exp[i] += ma.c_exp[i];
            for (size_t i = 0; i < mb.c_exp.size(); ++i) m.c_exp[i] += mb.c_exp[i];
            if (max_degree >= 0 && m.degree() > max_degree) continue;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

ChernPoly operator+(const ChernPoly& a, const ChernPoly& b) {
    ChernPoly out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

ChernPoly operator-(const ChernPoly& a, const ChernPoly& b) {
    ChernPoly out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
    return out;
}

namespace {

// dense rational power series in one variable, coefficient vectors of a
// fixed length
using Series = std::vector<Rat>;

Series series_mul(const Series& a, const Series& b) {
    Series out(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series series_inverse(const Series& a) {
    // requires a[0] != 0
    Series out(a.size(), Rat(0));
    out[0] = Rat(1) / a[0];
    for (size_t k = 1; k < a.size(); ++k) {
        Rat acc(0);
        for (size_t i = 1; i <= k; ++i) acc += a[i] * out[k - i];
        out[k] = -acc / a[0];
    }
    return out;
}

Series series_log1p(const Series& u) {
    // log(1 + u) with u[0] = 0
    Series out(u.size(), Rat(0));
    Series upow = u;
    for (size_t m = 1; m < u.size(); ++m) {
        Rat coeff = make_rat(m % 2 == 1 ? 1 : -1, Int(long(m)));
        for (size_t k = 0; k < u.size(); ++k) out[k] += coeff * upow[k];
        upow = series_mul(upow, u);
    }
    return out;
}

}  // namespace

std::vector<ChernPoly> todd_polynomials(int max_degree) {
    if (max_degree < 0) throw MalformedInput("negative degree");
    if (max_degree > 8) throw DegreeTooLarge("todd polynomials capped at degree 8");
    const int d = max_degree;

    // log of td(x) = x / (1 - e^{-x}) as a one-variable series
    Series denom(d + 1, Rat(0));  // (1 - e^{-x}) / x
    Int fact = 1;
    for (int k = 0; k <= d; ++k) {
        fact *= k + 1;
        denom[k] = make_rat(k % 2 == 0 ? 1 : -1, fact);
    }
    Series td = series_inverse(denom);
    Series u = td;
    u[0] = 0;  // td = 1 + u
    Series log_td = series_log1p(u);

    // power sums in the Chern symbols by Newton's identities
    std::vector<ChernPoly> psums(d + 1);
    for (int k = 1; k <= d; ++k) {
        ChernPoly pk;
        for (int i = 1; i < k; ++i) {
            Rat sign((i % 2 == 1) ? 1 : -1);
            pk = pk + ChernPoly::mul(ChernPoly::chern(i), psums[k - i], d).scaled(sign);
        }
        Rat sign((k % 2 == 1) ? 1 : -1);
        pk = pk + ChernPoly::chern(k).scaled(sign * Rat(k));
        psums[k] = pk;
    }

    // Td = exp(sum_k log_td[k] * p_k), truncated at degree d
    ChernPoly arg;
    for (int k = 1; k <= d; ++k) arg = arg + psums[k].scaled(log_td[k]);
    ChernPoly tdpoly = ChernPoly::constant(Rat(1));
    ChernPoly power = ChernPoly::constant(Rat(1));
    Int mfact = 1;
    for (int m = 1; m <= d; ++m) {
        power = ChernPoly::mul(power, arg, d);
        mfact *= m;
        tdpoly = tdpoly + power.scaled(make_rat(1, mfact));
    }

    std::vector<ChernPoly> out;
    for (int k = 0; k <= d; ++k) out.push_back(tdpoly.graded_part(k));
    return out;
}

ChernPoly line_bundle_character(int max_degree) {
    if (max_degree < 0) throw MalformedInput("negative degree");
    ChernPoly out;
    ChernPoly lk = ChernPoly::constant(Rat(1));
    Int fact = 1;
    out = out + lk;
    for (int k = 1; k <= max_degree; ++k) {
        lk = lk * ChernPoly::line();
        fact *= k;
        out = out + lk.scaled(make_rat(1, fact));
    }
    return out;
}

void IntersectionOracle::validate() const {
    for (const auto& [m, v] : values)
        if (m.l_exp > n && v != 0)
            throw TruncationViolated("monomial " + m.to_string() +
                                     " has l-exponent > n with nonzero value");
}

Rat IntersectionOracle::evaluate(const ChernMonomial& m) const {
    if (m.l_exp > n) return Rat(0);
    auto it = values.find(m);
    if (it == values.end())
        throw OracleIncomplete("missing monomial " + m.to_string());
    return it->second;
}

Rat IntersectionOracle::integrate(const ChernPoly& p) const {
    Rat acc(0);
    for (const auto& [m, c] : p.terms()) acc += c * evaluate(m);
    return acc;
}

ChiResult euler_characteristic(const IntersectionOracle& oracle, int n) {
    if (n < 1) throw MalformedInput("n must be >= 1");
    oracle.validate();
    std::vector<ChernPoly> td = todd_polynomials(2 * n);

    ChiResult res;
    res.chi = Rat(0);
    Int kfact = 1;
    ChernPoly lk = ChernPoly::constant(Rat(1));
    for (int k = 0; k <= 2 * n; ++k) {
        if (k > 0) {
            kfact *= k;
            lk = lk * ChernPoly::line();
        }
        ChiTerm term;
        term.k = k;
        term.truncated = k > n;
        if (term.truncated) {
            term.value = Rat(0);
        } else {
            ChernPoly piece = ChernPoly::mul(td[2 * n - k], lk).scaled(make_rat(1, kfact));
            term.value = oracle.integrate(piece);
        }
        res.chi += term.value;
        res.terms.push_back(term);
    }
    return res;
}

VanishingReport vanishing_relation_check(const IntersectionOracle& oracle, int n) {
    if (n < 1) throw MalformedInput("n must be >= 1");
    oracle.validate();
    std::vector<ChernPoly> td = todd_polynomials(2 * n);

    VanishingReport rep;
    rep.all_pass = true;
    ChernPoly lk = ChernPoly::constant(Rat(1));
    for (int k = 1; k <= n; ++k) {
        lk = lk * ChernPoly::line();
        VanishingReport::Entry e;
        e.k = k;
        e.value = oracle.integrate(ChernPoly::mul(td[2 * n - k], lk));
        e.pass = e.value == 0;
        rep.all_pass = rep.all_pass && e.pass;
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace hk
