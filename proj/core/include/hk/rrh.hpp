#pragma once

#include <map>
#include <string>
#include <vector>

#include "hk/numeric.hpp"

namespace hk {

// Monomial in the abstract Chern symbols c1, c2, ... and the line-bundle
// class l, graded by complex degree: deg c_i = i, deg l = 1. Canonical
// string form: factors c1 < c2 < ... < l joined by '*', exponents after
// '^', the empty product printed as "1" (e.g. "c1^2*c2*l").
struct ChernMonomial {
    std::vector<int> c_exp;  // c_exp[i] = exponent of c_{i+1}; no trailing zeros
    int l_exp = 0;

    int degree() const;
    std::string to_string() const;
    static ChernMonomial parse(const std::string& s);

    void trim();
    friend bool operator<(const ChernMonomial& a, const ChernMonomial& b) {
        if (a.c_exp != b.c_exp) return a.c_exp < b.c_exp;
        return a.l_exp < b.l_exp;
    }
    friend bool operator==(const ChernMonomial& a, const ChernMonomial& b) {
        return a.c_exp == b.c_exp && a.l_exp == b.l_exp;
    }
};

// Exact-rational polynomial in the Chern symbols and l.
class ChernPoly {
public:
    ChernPoly() = default;

    static ChernPoly constant(const Rat& r);
    static ChernPoly chern(int i);  // c_i
    static ChernPoly line();        // l

    bool is_zero() const { return terms_.empty(); }
    const std::map<ChernMonomial, Rat>& terms() const { return terms_; }

    ChernPoly graded_part(int degree) const;
    ChernPoly scaled(const Rat& r) const;

    // product with terms above max_degree dropped; max_degree < 0 keeps all
    static ChernPoly mul(const ChernPoly& a, const ChernPoly& b, int max_degree = -1);

    friend ChernPoly operator+(const ChernPoly& a, const ChernPoly& b);
    friend ChernPoly operator-(const ChernPoly& a, const ChernPoly& b);
    friend ChernPoly operator*(const ChernPoly& a, const ChernPoly& b) {
        return mul(a, b);
    }
    friend bool operator==(const ChernPoly& a, const ChernPoly& b) {
        return a.terms_ == b.terms_;
    }

    void add_term(const ChernMonomial& m, const Rat& coeff);

private:
    std::map<ChernMonomial, Rat> terms_;
};

// Universal Todd polynomials Td_0..Td_max in the Chern symbols, from the
// generating series prod x_j/(1 - e^{-x_j}) re-expressed in elementary
// symmetric functions. max_degree is capped at 8 (DegreeTooLarge beyond).
std::vector<ChernPoly> todd_polynomials(int max_degree);

// ch of a line bundle with first Chern class l: sum_{k<=max} l^k / k!.
ChernPoly line_bundle_character(int max_degree);

// Functional assigning exact rationals to degree-2n monomials. Monomials
// with l-exponent above n evaluate to 0 (truncation invariant); any other
// queried monomial must be listed.
struct IntersectionOracle {
    int n = 0;
    std::map<ChernMonomial, Rat> values;

    // Throws TruncationViolated when a listed l^{>n} monomial is nonzero.
    void validate() const;
    Rat evaluate(const ChernMonomial& m) const;  // throws OracleIncomplete
    Rat integrate(const ChernPoly& p) const;
};

struct ChiTerm {
    int k = 0;
    Rat value;             // (1/k!) * integral of Td_{2n-k} l^k
    bool truncated = false;  // k > n, killed by the truncation invariant
};

struct ChiResult {
    Rat chi;
    std::vector<ChiTerm> terms;
};

// Evaluates integral of (Td * ch(L))_{deg 2n} under the oracle, with the
// term-by-term expansion transcript.
ChiResult euler_characteristic(const IntersectionOracle& oracle, int n);

struct VanishingReport {
    struct Entry {
        int k = 0;
        Rat value;
        bool pass = false;
    };
    std::vector<Entry> entries;  // k = 1..n
    bool all_pass = false;
};

// Audits integral of Td_{2n-k} l^k = 0 for 0 < k <= n under the oracle.
VanishingReport vanishing_relation_check(const IntersectionOracle& oracle, int n);

}  // namespace hk
