#include <doctest.h>

#include "hk/fixtures.hpp"
#include "hk/hodge.hpp"
#include "hk/isotropy.hpp"

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

GaussVec tau_from(const IntVec& e, const IntVec& f) {
    GaussVec t(e.size());
    for (size_t i = 0; i < e.size(); ++i) t[i] = GaussRat(Rat(e[i]), Rat(f[i]));
    return t;
}

GaussVec scale(const GaussVec& v, const GaussRat& s) {
    GaussVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

GaussVec apply_mat(const IntMat& m, const GaussVec& v) {
    GaussVec out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        GaussRat acc;
        for (int j = 0; j < m.cols(); ++j) acc += GaussRat(Rat(m(i, j))) * v[j];
        out[i] = acc;
    }
    return out;
}

}  // namespace

TEST_CASE("period point membership") {
    Lattice d5 = diag_lattice({1, 1, 1, -1, -1});
    GaussVec tau = tau_from(vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0}));  // e1 + i e2
    PeriodDiagnostics d = is_period_point(d5, tau);
    CHECK(d.is_period);
    CHECK(d.pair_tau_tau.is_zero());
    CHECK(d.pair_tau_conj == 2);

    // real tau fails the first condition
    PeriodDiagnostics d2 = is_period_point(d5, to_gauss(vec({1, 0, 0, 0, 0})));
    CHECK_FALSE(d2.is_period);
    CHECK(d2.pair_tau_tau == GaussRat(Rat(1)));

    // real isotropic tau fails the positivity condition
    PeriodDiagnostics d3 = is_period_point(d5, to_gauss(vec({1, 0, 0, 1, 0})));
    CHECK_FALSE(d3.is_period);
    CHECK(d3.pair_tau_tau.is_zero());
    CHECK(d3.pair_tau_conj == 0);

    CHECK_THROWS_AS(is_period_point(load_fixture("U+U"), tau_from(vec({1, 0, 0, 0}), vec({0, 0, 1, 0}))),
                    WrongSignature);
    CHECK_THROWS_AS(is_period_point(d5, GaussVec(5)), ZeroVector);
}

TEST_CASE("period membership is scaling invariant") {
    Lattice d5 = load_fixture("rank5-b");
    GaussVec tau = tau_from(vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0}));
    for (GaussRat lambda : {GaussRat(Rat(3)), GaussRat(Rat(0), Rat(1)),
                            GaussRat(make_rat(2, 5), make_rat(-1, 3))}) {
        CHECK(is_period_point(d5, scale(tau, lambda)).is_period);
    }
    GaussVec bad = to_gauss(vec({1, 0, 0, 0, 0}));
    for (GaussRat lambda : {GaussRat(Rat(2)), GaussRat(Rat(0), Rat(5))}) {
        CHECK_FALSE(is_period_point(d5, scale(bad, lambda)).is_period);
    }
}

TEST_CASE("hodge decomposition dimensions and orthogonality") {
    for (const char* name : {"rank5-a", "rank5-b", "rank7-b"}) {
        Lattice lat = load_fixture(name);
        IntVec e(lat.rank(), Int(0)), f(lat.rank(), Int(0));
        e[0] = 1;
        f[1] = 1;
        REQUIRE(pair(lat, e, e) == pair(lat, f, f));
        REQUIRE(pair(lat, e, e) > 0);
        REQUIRE(pair(lat, e, f) == 0);
        GaussVec tau = tau_from(e, f);
        HodgeStructure hs = hodge_decomposition(lat, tau);
        CHECK(int(hs.h11_basis.size()) == lat.rank() - 2);  // dims (1, rank-2, 1)
        for (const auto& h : hs.h11_basis) {
            CHECK(pair_c(lat, h, tau).is_zero());
            CHECK(pair_c(lat, h, conj(tau)).is_zero());
        }
        // scaling tau spans the same decomposition
        HodgeStructure hs2 = hodge_decomposition(lat, scale(tau, GaussRat(Rat(2), Rat(3))));
        CHECK(hs2.h11_basis == hs.h11_basis);
    }
    CHECK_THROWS_AS(hodge_decomposition(load_fixture("rank5-a"),
                                        to_gauss(vec({1, 0, 0, 0, 0}))),
                    NotPeriodPoint);
}

TEST_CASE("type (1,1) criterion") {
    Lattice d5 = diag_lattice({1, 1, 1, -1, -1});
    GaussVec tau = tau_from(vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0}));
    CHECK(is_type_11(d5, tau, vec({0, 0, 1, 0, 0})));
    CHECK_FALSE(is_type_11(d5, tau, vec({1, 0, 0, 0, 0})));

    // linearity
    IntVec a = vec({0, 0, 1, 0, 0}), b = vec({0, 0, 0, 1, 0});
    REQUIRE(is_type_11(d5, tau, a));
    REQUIRE(is_type_11(d5, tau, b));
    IntVec ab(5);
    for (int i = 0; i < 5; ++i) ab[i] = a[i] + b[i];
    CHECK(is_type_11(d5, tau, ab));

    CHECK_THROWS_AS(is_type_11(d5, to_gauss(vec({1, 0, 0, 0, 0})), a), NotPeriodPoint);
}

TEST_CASE("membership predicates are isometry equivariant") {
    Lattice lat = load_fixture("rank5-b");
    GaussVec tau = tau_from(vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0}));
    SearchResult delta = find_isotropic(lat, 1);
    SearchResult comp = find_transvection_companion(lat, *delta.vector, 1);
    Isometry m = eichler_transvection(lat, *delta.vector, *comp.vector);

    for (IntVec alpha : {vec({0, 0, 1, 0, 0}), vec({1, 0, 0, 0, 0}), vec({0, 0, 1, 1, 0})}) {
        bool before = is_type_11(lat, tau, alpha);
        bool after = is_type_11(lat, apply_mat(m.matrix, tau), m.matrix.mul(alpha));
        CHECK(before == after);
    }

    IntVec l = vec({0, 0, 1, 0, 0});
    REQUIRE(pair(lat, l, l) > 0);
    bool before = polarized_slice_member(lat, tau, l);
    bool after = polarized_slice_member(lat, apply_mat(m.matrix, tau), m.matrix.mul(l));
    CHECK(before == after);
}

TEST_CASE("polarized slice membership") {
    Lattice d5 = diag_lattice({1, 1, 1, -1, -1});
    GaussVec tau = tau_from(vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0}));
    CHECK(polarized_slice_member(d5, tau, vec({0, 0, 1, 0, 0})));
    CHECK_FALSE(polarized_slice_member(d5, tau, vec({1, 0, 1, 0, 0})));
    CHECK(polarized_slice_member(d5, scale(tau, GaussRat(Rat(1), Rat(1))),
                                 vec({0, 0, 1, 0, 0})));
    CHECK_THROWS_AS(polarized_slice_member(d5, tau, vec({1, 0, 0, 1, 0})),
                    NonPositivePolarization);
}

TEST_CASE("limiting mixed Hodge summaries by unipotency index") {
    Lattice uu = load_fixture("U+U");
    LimitMhsSummary id_summary = limit_mhs_summary(Isometry{uu, IntMat::identity(4)});
    CHECK(id_summary.index == 1);
    CHECK(id_summary.dim_w2 == 0);
    CHECK(id_summary.dim_w1 == 4);

    Isometry t2 = eichler_transvection(uu, vec({1, 0, 0, 0}), vec({0, 0, 1, 0}));
    LimitMhsSummary s2 = limit_mhs_summary(t2);
    CHECK(s2.index == 2);
    CHECK(s2.dim_w2 == 2);
    CHECK(s2.dim_w1 == 2);
    REQUIRE(s2.parity_even.has_value());
    CHECK(*s2.parity_even);

    Lattice l3 = load_fixture("U+<-2>");
    Isometry t3 = eichler_transvection(l3, vec({1, 0, 0}), vec({0, 0, 1}));
    LimitMhsSummary s3 = limit_mhs_summary(t3);
    CHECK(s3.index == 3);
    REQUIRE(s3.type.has_value());
    CHECK(s3.type->partition == std::vector<int>{3});
    CHECK(s3.log_rank_sequence == std::vector<int>{3, 2, 1, 0});

    // swap on U is not unipotent
    Lattice u = load_fixture("U");
    CHECK_THROWS_AS(
        limit_mhs_summary(Isometry{u, IntMat::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})}),
        NotUnipotent);

    // a product of two transvections of rank5-a has unipotency index 5
    Lattice r5 = load_fixture("rank5-a");
    auto iso = isotropic_shell(r5, Int(1));
    std::vector<Isometry> ts;
    for (const auto& d : iso) {
        SearchResult v = find_transvection_companion(r5, d, 1);
        if (v.status == SearchStatus::Found)
            ts.push_back(eichler_transvection(r5, d, *v.vector));
    }
    bool found_high = false;
    for (size_t i = 0; i < ts.size() && !found_high; ++i)
        for (size_t j = 0; j < ts.size() && !found_high; ++j) {
            Isometry p = compose(ts[i], ts[j]);
            auto idx = unipotency_index(p);
            if (idx && *idx > 3) {
                found_high = true;
                CHECK_THROWS_AS(limit_mhs_summary(p), IndexTooHigh);
            }
        }
    CHECK(found_high);
}

TEST_CASE("marked period vectors") {
    GaussVec tau = tau_from(vec({1, 2, 3}), vec({4, 5, 6}));
    CHECK(period_vector_of_marked(tau, {0, 1, 2}) == tau);

    GaussVec swapped = period_vector_of_marked(tau, {1, 0, 2});
    CHECK(swapped[0] == tau[1]);
    CHECK(swapped[1] == tau[0]);
    CHECK(swapped[2] == tau[2]);

    // composition of markings = composition of permutations
    std::vector<int> m1{1, 2, 0}, m2{2, 0, 1};
    GaussVec lhs = period_vector_of_marked(period_vector_of_marked(tau, m2), m1);
    std::vector<int> comp(3);
    for (int i = 0; i < 3; ++i) comp[i] = m2[m1[i]];
    CHECK(lhs == period_vector_of_marked(tau, comp));

    CHECK_THROWS_AS(period_vector_of_marked(tau, {0, 0, 1}), BadMarking);
    CHECK_THROWS_AS(period_vector_of_marked(tau, {0, 1}), BadMarking);
}
