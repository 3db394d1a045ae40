#include <doctest.h>

#include <random>

#include "hk/fixtures.hpp"
#include "hk/isotropy.hpp"
#include "hk/monodromy.hpp"
#include "support/oracles.hpp"

using namespace hk;

namespace {

IntVec vec(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Lattice diag_lattice(const std::vector<long>& d) {
    IntMat m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
    return Lattice{"diag", m};
}

RatMat nilpotent_part(const Isometry& t) {
    return to_rat(t.matrix) - RatMat::identity(t.rank());
}

// (delta, v) pairs with pair(v,v) even and nonzero, via the odometer oracle
std::vector<std::pair<IntVec, IntVec>> transvection_pairs(const Lattice& lat,
                                                          long height, size_t cap) {
    std::vector<std::pair<IntVec, IntVec>> out;
    auto deltas = oracle::naive_collect(lat.rank(), height, [&](const IntVec& v) {
        return vec_gcd(v) == 1 && pair(lat, v, v) == 0;
    });
    for (const auto& d : deltas) {
        auto vs = oracle::naive_collect(lat.rank(), height, [&](const IntVec& w) {
            Int q = pair(lat, w, w);
            return q != 0 && q % 2 == 0 && pair(lat, w, d) == 0;
        });
        for (const auto& w : vs) {
            out.emplace_back(d, w);
            if (out.size() >= cap) return out;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("check_isometry") {
    Lattice u = load_fixture("U");
    CHECK_NOTHROW(check_isometry(u, IntMat::identity(2)));
    CHECK_NOTHROW(check_isometry(u, IntMat::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})));
    Lattice e2 = diag_lattice({1, 1});
    CHECK_THROWS_AS(check_isometry(e2, IntMat::from_rows({{Int(1), Int(1)}, {Int(0), Int(1)}})),
                    NotIsometry);
    CHECK_THROWS_AS(check_isometry(u, IntMat::identity(3)), DimensionMismatch);
}

TEST_CASE("eichler transvection on U + <-2>") {
    Lattice lat = load_fixture("U+<-2>");  // basis e, f, w
    Isometry t = eichler_transvection(lat, vec({1, 0, 0}), vec({0, 0, 1}));
    CHECK(t.matrix.mul(vec({1, 0, 0})) == vec({1, 0, 0}));     // T(e) = e
    CHECK(t.matrix.mul(vec({0, 0, 1})) == vec({-2, 0, 1}));    // T(w) = w - 2e
    CHECK(t.matrix.mul(vec({0, 1, 0})) == vec({1, 1, -1}));    // T(f) = f - w + e
    CHECK(jordan_type(nilpotent_part(t), true).partition == std::vector<int>{3});
    CHECK(unipotency_index(t) == 3);
}

TEST_CASE("eichler transvection with isotropic v on U + U") {
    Lattice lat = load_fixture("U+U");
    Isometry t = eichler_transvection(lat, vec({1, 0, 0, 0}), vec({0, 0, 1, 0}));
    CHECK(t.matrix.mul(vec({0, 1, 0, 0})) == vec({0, 1, -1, 0}));  // T(f1) = f1 - e2
    CHECK(t.matrix.mul(vec({0, 0, 0, 1})) == vec({1, 0, 0, 1}));   // T(f2) = f2 + e1
    RatMat p = nilpotent_part(t);
    CHECK((p * p).is_zero());
    CHECK_FALSE(p.is_zero());
    CHECK(t.matrix.mul(vec({1, 0, 0, 0})) == vec({1, 0, 0, 0}));
}

TEST_CASE("degenerate transvection input collapses to the identity") {
    Lattice u = load_fixture("U");
    Isometry t = eichler_transvection(u, vec({1, 0}), vec({1, 0}));
    CHECK(t.matrix == IntMat::identity(2));
}

TEST_CASE("transvection preconditions") {
    Lattice lat = load_fixture("U+<-2>");
    // delta not isotropic
    CHECK_THROWS_AS(eichler_transvection(lat, vec({0, 0, 1}), vec({1, 0, 0})),
                    PreconditionViolated);
    // v not orthogonal to delta
    CHECK_THROWS_AS(eichler_transvection(lat, vec({1, 0, 0}), vec({0, 1, 0})),
                    PreconditionViolated);
    // odd norm
    Lattice odd{"U+<-1>", IntMat::from_rows({{Int(0), Int(1), Int(0)},
                                             {Int(1), Int(0), Int(0)},
                                             {Int(0), Int(0), Int(-1)}})};
    CHECK_THROWS_AS(eichler_transvection(odd, vec({1, 0, 0}), vec({0, 0, 1})), OddNorm);
}

TEST_CASE("transvection contract over generated pairs") {
    for (const char* name : {"U+U", "U+<-2>", "rank5-a", "rank6-a"}) {
        Lattice lat = load_fixture(name);
        for (const auto& [delta, v] : transvection_pairs(lat, 1, 8)) {
            Isometry t = eichler_transvection(lat, delta, v);
            CHECK(t.matrix.transpose() * lat.gram * t.matrix == lat.gram);
            CHECK(t.matrix.mul(delta) == delta);
            RatMat p = nilpotent_part(t);
            CHECK_FALSE((p * p).is_zero());
            CHECK((p * p * p).is_zero());
            // (T-id)^2 != 0 iff pair(v,v) != 0: both directions over the corpus
            CHECK(pair(lat, v, v) != 0);
        }
        // isotropic-v side of the iff
        auto deltas = isotropic_shell(lat, Int(1));
        for (const auto& d : deltas) {
            for (const auto& w : deltas) {
                if (pair(lat, d, w) != 0 || w == d) continue;
                Isometry t = eichler_transvection(lat, d, w);
                RatMat p = nilpotent_part(t);
                CHECK((p * p).is_zero());
                break;
            }
            break;
        }
    }
}

TEST_CASE("isometry closure under product and inverse") {
    Lattice lat = load_fixture("U+U");
    Isometry a = eichler_transvection(lat, vec({1, 0, 0, 0}), vec({0, 0, 1, 1}));
    Isometry b = eichler_transvection(lat, vec({0, 0, 1, 0}), vec({1, -1, 0, 0}));
    CHECK(is_isometry(lat, compose(a, b).matrix));
    CHECK(is_isometry(lat, isometry_inverse(a).matrix));
    CHECK(compose(a, isometry_inverse(a)).matrix == IntMat::identity(4));
}

TEST_CASE("unipotency index") {
    Lattice u = load_fixture("U");
    CHECK(unipotency_index(Isometry{u, IntMat::identity(2)}) == 1);
    CHECK_FALSE(
        unipotency_index(Isometry{u, IntMat::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})})
            .has_value());
    Lattice l3 = load_fixture("U+<-2>");
    CHECK(unipotency_index(eichler_transvection(l3, vec({1, 0, 0}), vec({0, 0, 1}))) == 3);
}

TEST_CASE("jordan_type basics and the chain-basis oracle") {
    RatMat zero(3, 3);
    CHECK(jordan_type(zero, true).partition == std::vector<int>{1, 1, 1});

    RatMat j3(3, 3);
    j3(0, 1) = 1;
    j3(1, 2) = 1;
    CHECK(jordan_type(j3, true).partition == std::vector<int>{3});
    CHECK(oracle::chain_basis_partition(j3) == std::vector<int>{3});

    CHECK_THROWS_AS(jordan_type(RatMat::identity(3), true), NotNilpotent);

    // nilpotent parts of generated transvections, plus random conjugates
    std::mt19937_64 rng(31);
    for (const char* name : {"U+U", "U+<-2>", "rank5-a"}) {
        Lattice lat = load_fixture(name);
        for (const auto& [delta, v] : transvection_pairs(lat, 1, 3)) {
            Isometry t = eichler_transvection(lat, delta, v);
            RatMat p = nilpotent_part(t);
            CHECK(jordan_type(p, true).partition == oracle::chain_basis_partition(p));
            IntMat m = oracle::random_unimodular(lat.rank(), rng);
            RatMat conj = *inverse(to_rat(m)) * p * to_rat(m);
            CHECK(jordan_type(conj, true).partition ==
                  jordan_type(p, true).partition);
        }
    }
}

TEST_CASE("log and exp are mutually inverse on unipotents") {
    Lattice u = load_fixture("U");
    CHECK(log_unipotent(Isometry{u, IntMat::identity(2)}).is_zero());

    Lattice l3 = load_fixture("U+<-2>");
    Isometry t = eichler_transvection(l3, vec({1, 0, 0}), vec({0, 0, 1}));
    RatMat lg = log_unipotent(t);
    // two-term series: (log T)(f) = -w
    RatVec f{Rat(0), Rat(1), Rat(0)};
    RatVec img = lg.mul(f);
    CHECK(img == RatVec{Rat(0), Rat(0), Rat(-1)});
    CHECK(exp_nilpotent(lg) == to_rat(t.matrix));

    // index-2 case: log T = T - id exactly
    Lattice uu = load_fixture("U+U");
    Isometry t2 = eichler_transvection(uu, vec({1, 0, 0, 0}), vec({0, 0, 1, 0}));
    CHECK(log_unipotent(t2) == nilpotent_part(t2));
    CHECK(exp_nilpotent(log_unipotent(t2)) == to_rat(t2.matrix));

    Lattice e2 = diag_lattice({1, 1});
    Isometry rot = check_isometry(e2, IntMat::from_rows({{Int(0), Int(1)}, {Int(-1), Int(0)}}));
    CHECK_THROWS_AS(log_unipotent(rot), NotUnipotent);
}

TEST_CASE("weight filtration for index-2 unipotents") {
    Lattice uu = load_fixture("U+U");
    Isometry t = eichler_transvection(uu, vec({1, 0, 0, 0}), vec({0, 0, 1, 0}));
    auto [wf, pc] = weight_filtration_order2(t);
    CHECK(wf.dim_w2 == 2);
    CHECK(wf.dim_w1 == 2);
    CHECK(pc.rank_t_minus_id == 2);
    CHECK(pc.even);
    // W2 = span(e1, e2) = W1
    REQUIRE(wf.w2_basis.size() == 2);
    CHECK(wf.w2_basis[0] == vec({1, 0, 0, 0}));
    CHECK(wf.w2_basis[1] == vec({0, 0, 1, 0}));
    CHECK(wf.w1_basis == wf.w2_basis);
    // containment: every W2 vector is killed by log T = T - id
    IntMat p = t.matrix - IntMat::identity(4);
    for (const auto& w : wf.w2_basis) {
        for (const auto& x : p.mul(w)) CHECK(x == 0);
    }

    CHECK_THROWS_AS(weight_filtration_order2(Isometry{uu, IntMat::identity(4)}),
                    PreconditionViolated);
    Lattice l3 = load_fixture("U+<-2>");
    CHECK_THROWS_AS(
        weight_filtration_order2(eichler_transvection(l3, vec({1, 0, 0}), vec({0, 0, 1}))),
        IndexTooHigh);
}

TEST_CASE("filtration dims and parity are conjugation invariant") {
    Lattice uu = load_fixture("U+U");
    Isometry t = eichler_transvection(uu, vec({1, 0, 0, 0}), vec({0, 0, 1, 0}));
    // conjugate by isometries of the lattice
    Isometry m1 = eichler_transvection(uu, vec({0, 0, 1, 0}), vec({1, -1, 0, 0}));
    Isometry m2 = eichler_transvection(uu, vec({0, 1, 0, 0}), vec({0, 0, 1, 1}));
    for (const Isometry& m : {m1, m2}) {
        Isometry conj = compose(compose(isometry_inverse(m), t), m);
        auto [wf0, pc0] = weight_filtration_order2(t);
        auto [wf1, pc1] = weight_filtration_order2(conj);
        CHECK(wf0.dim_w2 == wf1.dim_w2);
        CHECK(wf0.dim_w1 == wf1.dim_w1);
        CHECK(pc0.even == pc1.even);
    }
}

TEST_CASE("parity of rank(T-id) for index-2 isometries") {
    // isotropic-v transvections and conjugated products on several lattices
    std::mt19937_64 rng(37);
    int checked = 0;
    for (const char* name : {"U+U", "rank6-a", "rank7-a"}) {
        Lattice lat = load_fixture(name);
        auto iso = isotropic_shell(lat, Int(1));
        std::vector<Isometry> index2;
        for (const auto& d : iso)
            for (const auto& v : iso) {
                if (v == d || pair(lat, d, v) != 0) continue;
                Isometry t = eichler_transvection(lat, d, v);
                RatMat p = nilpotent_part(t);
                if (p.is_zero() || !(p * p).is_zero()) continue;
                index2.push_back(t);
                if (index2.size() >= 6) break;
            }
        for (size_t i = 0; i < index2.size(); ++i)
            for (size_t j = 0; j < index2.size(); ++j) {
                Isometry prod = compose(index2[i], index2[j]);
                RatMat p = nilpotent_part(prod);
                if (p.is_zero() || !(p * p).is_zero()) continue;
                auto [wf, pc] = weight_filtration_order2(prod);
                CHECK(pc.even);
                ++checked;
            }
    }
    CHECK(checked >= 10);
}
