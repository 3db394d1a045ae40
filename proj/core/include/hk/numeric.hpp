#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hk/error.hpp"

namespace hk {

// All arithmetic in the library is exact; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw MalformedInput("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "p/q" form, denominator always printed ("3/1", "-2/5").
inline std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw MalformedInput("cannot parse rational '" + s + "'");
    }
}

// Gaussian rational a + b*i with exact rational parts.
struct GaussRat {
    Rat re, im;

    GaussRat() = default;
    GaussRat(int v) : re(v) {}  // NOLINT: implicit by design
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    GaussRat conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n2 = b.re * b.re + b.im * b.im;
        if (n2 == 0) throw MalformedInput("division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }
};

using GaussVec = std::vector<GaussRat>;

inline std::string gauss_to_string(const GaussRat& z) {
    return rat_to_string(z.re) + (sgn(z.im) < 0 ? "" : "+") + rat_to_string(z.im) + "i";
}

inline bool is_zero_vec(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Nonnegative gcd of all coordinates; 0 for the zero vector.
inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline GaussVec to_gauss(const IntVec& v) {
    GaussVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = GaussRat(Rat(v[i]));
    return out;
}

inline GaussVec conj(const GaussVec& v) {
    GaussVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
    return out;
}

}  // namespace hk
