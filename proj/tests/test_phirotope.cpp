#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "phimat/phirotope.hpp"
#include "test_support.hpp"

using namespace phimat;
using phimat::testing::Rng;

namespace {

const char* kW1 = "1 1+i 1 0\n1+i 3i 0 1\n";
const char* kW2 = "1 1+i 1 0\n1+i 4i 0 1\n";
const char* kExample51 =
    "1 0 -1 0 0 i 1-i\n"
    "2 -1 0 -1 0 -i 3+i\n"
    "-i 0 -i 0 2i -i -2i\n"
    "-1 0 0 -i 1+i 0 -2\n";

Phirotope phi3() { return Phirotope::from_matrix(GaussMatrix::parse("1 0 1\n0 1 1\n")); }

// GP instance evaluator, independent of check_gp's iteration order.
bool gp_holds_at(const Phirotope& phi, const ElemSet& xs, const std::vector<int>& ys) {
    std::vector<Phase> terms;
    int sign = 1;
    for (std::size_t k = 0; k < xs.size(); ++k, sign = -sign) {
        ElemSet left = xs;
        left.erase(left.begin() + static_cast<long>(k));
        std::vector<int> right{xs[k]};
        right.insert(right.end(), ys.begin(), ys.end());
        Phase t = phi.value(left) * phi.eval(right);
        terms.push_back(sign > 0 ? t : -t);
    }
    return zero_in_pconv(terms);
}

}  // namespace

TEST_CASE("from_matrix") {
    Phirotope p = phi3();
    CHECK(p.rank() == 2);
    CHECK(p.value({1, 2}) == Phase::one());
    CHECK(p.value({1, 3}) == Phase::one());
    CHECK(p.value({2, 3}) == Phase::ray(-1, 0));

    Phirotope w1 = Phirotope::from_matrix(GaussMatrix::parse(kW1));
    CHECK(w1.value({1, 2}) == Phase::ray(0, 1));
    CHECK(w1.value({1, 3}) == Phase::ray(-1, -1));
    CHECK(w1.value({1, 4}) == Phase::one());
    CHECK(w1.value({2, 3}) == Phase::ray(0, -1));
    CHECK(w1.value({2, 4}) == Phase::ray(1, 1));
    CHECK(w1.value({3, 4}) == Phase::one());

    // The two section-6 matrices give the same phirotope exactly.
    CHECK(w1 == Phirotope::from_matrix(GaussMatrix::parse(kW2)));

    CHECK_THROWS_AS(Phirotope::from_matrix(GaussMatrix::parse("1 1\n1 1\n")), axiom_error);
}

TEST_CASE("evaluation is alternating and matches order-sensitive determinants") {
    Rng rng(67);
    for (int t = 0; t < 25; ++t) {
        GaussMatrix m = testing::random_realization(rng);
        Phirotope p = Phirotope::from_matrix(m);
        const int d = p.rank();
        if (d > 3) continue;
        // Exhaustive over all d-tuples with repetition allowed.
        std::vector<int> tuple(d, 0);
        std::function<void(int)> walk = [&](int pos) {
            if (pos == d) {
                CHECK(p.eval(tuple) == phase_of(det(m, tuple)));
                return;
            }
            for (int e : p.ground()) {
                tuple[pos] = e;
                walk(pos + 1);
            }
        };
        walk(0);
    }
}

TEST_CASE("check_gp") {
    CHECK(phi3().check_gp().ok);
    CHECK(Phirotope::from_matrix(GaussMatrix::parse(kW1)).check_gp().ok);
    CHECK(Phirotope::from_matrix(GaussMatrix::parse(kExample51)).check_gp().ok);

    // Rank 1 always passes: the two terms cancel identically.
    std::map<ElemSet, Phase> rk1{{{1}, Phase::ray(2, 1)}, {{2}, Phase::ray(0, 1)}};
    CHECK(Phirotope({1, 2}, 1, rk1).check_gp().ok);

    // All values 1 except one rotated: fails, and the spec's witness pair is a
    // genuine violation.
    std::map<ElemSet, Phase> bad;
    for (const ElemSet& s :
         {ElemSet{1, 2}, ElemSet{1, 3}, ElemSet{1, 4}, ElemSet{2, 3}, ElemSet{2, 4}})
        bad[s] = Phase::one();
    bad[{3, 4}] = Phase::ray(0, 1);
    Phirotope broken({1, 2, 3, 4}, 2, bad);
    GpCheck res = broken.check_gp();
    CHECK_FALSE(res.ok);
    CHECK_FALSE(gp_holds_at(broken, res.x, res.y));         // returned witness is real
    CHECK_FALSE(gp_holds_at(broken, {1, 3, 4}, {2}));       // and so is the spec's
    CHECK(res.witness().find("fails") != std::string::npos);

    Rng rng(71);
    for (int t = 0; t < 10; ++t)
        CHECK(Phirotope::from_matrix(testing::random_realization(rng)).check_gp().ok);
}

TEST_CASE("dual phirotope") {
    // Single row (1, i).
    Phirotope p = Phirotope::from_matrix(GaussMatrix::parse("1 i\n"));
    Phirotope d = p.dual();
    CHECK(d.rank() == 1);
    CHECK(d.value({1}) == Phase::ray(0, -1));
    CHECK(d.value({2}) == Phase::ray(-1, 0));
    // Ratio matches the kernel of the Hermitian complement span{(1,-i)}.
    CHECK(d.value({1}) * d.value({2}).inv() == Phase::ray(0, 1));

    // Real chirotope (1,1) on two elements.
    Phirotope c = Phirotope::from_matrix(GaussMatrix::parse("1 1\n"));
    Phirotope cd = c.dual();
    CHECK(cd.value({1}) == Phase::one());
    CHECK(cd.value({2}) == Phase::ray(-1, 0));

    Rng rng(73);
    for (int t = 0; t < 30; ++t) {
        Phirotope q = Phirotope::from_matrix(testing::random_realization(rng));
        Phirotope dd = q.dual().dual();
        auto unit = dd.unit_multiple_of(q);
        REQUIRE(unit.has_value());
        CHECK_FALSE(unit->is_zero());
        CHECK(q.dual().check_gp().ok);
        // Dual bases are complements.
        CHECK(q.dual().underlying_matroid() == q.underlying_matroid().dual());
    }
}

TEST_CASE("minors of phirotopes") {
    Phirotope p = phi3();
    Phirotope con = p.contraction({3});
    CHECK(con.rank() == 1);
    CHECK(con.ground() == ElemSet{1, 2});
    CHECK(con.value({1}) == Phase::one());        // φ(1,3)
    CHECK(con.value({2}) == Phase::ray(-1, 0));   // φ(2,3)

    Phirotope del = p.deletion({3});
    CHECK(del.rank() == 2);
    CHECK(del.ground() == ElemSet{1, 2});
    CHECK(del.value({1, 2}) == p.value({1, 2}));

    Rng rng(79);
    int done = 0;
    while (done < 30) {
        GaussMatrix m = testing::random_realization(rng);
        if (m.cols < 2) continue;
        ++done;
        Phirotope q = Phirotope::from_matrix(m);
        std::uniform_int_distribution<int> pick(1, m.cols);
        ElemSet e{pick(rng)};
        Phirotope lhs = q.deletion(e).dual();
        Phirotope rhs = q.dual().contraction(e);
        auto unit = lhs.unit_multiple_of(rhs);
        REQUIRE(unit.has_value());
        CHECK(lhs.check_gp().ok);

        // Minors of the underlying matroid commute with the construction.
        CHECK(q.contraction(e).underlying_matroid() == q.underlying_matroid().contraction(e));
        CHECK(q.deletion(e).underlying_matroid() == q.underlying_matroid().deletion(e));
    }
}

TEST_CASE("cross ratios") {
    Phirotope w1 = Phirotope::from_matrix(GaussMatrix::parse(kW1));
    auto cr = w1.cross_ratio(1, 4, {2}, {3});
    REQUIRE(cr.has_value());
    CHECK(*cr == Phase::ray(-1, 0));

    // b inside C kills the denominator.
    CHECK_FALSE(w1.cross_ratio(1, 2, {2}, {3}).has_value());

    // Real phirotopes only produce real defined cross-ratios.
    Rng rng(83);
    for (int t = 0; t < 10; ++t) {
        GaussMatrix m = testing::random_realization(rng, /*real_only=*/true);
        Phirotope p = Phirotope::from_matrix(m);
        if (p.rank() < 1) continue;
        for (int a : p.ground())
            for (int b : p.ground()) {
                if (a == b) continue;
                for_each_subset(p.ground(), p.rank() - 1, [&](const ElemSet& cset) {
                    return for_each_subset(p.ground(), p.rank() - 1, [&](const ElemSet& dset) {
                        auto r =
                            p.cross_ratio(a, b, cset, dset);
                        if (r) CHECK(r->is_real());
                        return true;
                    });
                });
            }
    }
}

TEST_CASE("cross ratios are reorientation invariant") {
    Rng rng(89);
    for (int t = 0; t < 10; ++t) {
        GaussMatrix m = testing::random_realization(rng);
        Phirotope p = Phirotope::from_matrix(m);
        if (p.rank() < 1 || p.ground().size() < 2) continue;
        std::map<int, Phase> scalars;
        for (int e : p.ground()) scalars[e] = testing::random_ray(rng);
        Phirotope q = p.reorient(scalars);

        for (int a : p.ground())
            for (int b : p.ground()) {
                if (a == b) continue;
                for_each_subset(p.ground(), p.rank() - 1, [&](const ElemSet& cset) {
                    return for_each_subset(p.ground(), p.rank() - 1, [&](const ElemSet& dset) {
                        auto r1 = p.cross_ratio(a, b, cset, dset);
                        auto r2 = q.cross_ratio(a, b, cset, dset);
                        CHECK(r1.has_value() == r2.has_value());
                        if (r1 && r2) CHECK(*r1 == *r2);
                        return true;
                    });
                });
            }
    }
}

TEST_CASE("reorientation rescales exactly the values containing the column") {
    Phirotope p = phi3();
    Phase u = Phase::ray(0, 1);
    Phirotope q = p.reorient({{3, u}});
    CHECK(q.value({1, 2}) == p.value({1, 2}));
    CHECK(q.value({1, 3}) == p.value({1, 3}) * u);
    CHECK(q.value({2, 3}) == p.value({2, 3}) * u);

    // Matrix-level column scaling by an exact unit matches phase-level
    // reorientation.
    GaussMatrix m = GaussMatrix::parse("1 0 1\n0 1 1\n");
    Rng rng(97);
    GaussRational unit = testing::random_unit(rng);
    GaussMatrix m2 = m;
    for (int r = 0; r < m.rows; ++r) m2.at(r, 2) = m.at(r, 2) * unit;
    CHECK(Phirotope::from_matrix(m2) == p.reorient({{3, phase_of(unit)}}));
}

TEST_CASE("row operations change the phirotope by one global unit") {
    Rng rng(101);
    int done = 0;
    while (done < 15) {
        GaussMatrix m = testing::random_realization(rng);
        const int d = m.rows;
        GaussMatrix g = testing::random_matrix(rng, d, d);
        std::vector<int> all(d);
        for (int i = 0; i < d; ++i) all[i] = i + 1;
        if (det(g, all).is_zero()) continue;
        ++done;
        GaussMatrix gm(d, m.cols);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < m.cols; ++c) {
                GaussRational sum(0);
                for (int k = 0; k < d; ++k) sum = sum + g.at(r, k) * m.at(k, c);
                gm.at(r, c) = sum;
            }
        auto unit = Phirotope::from_matrix(gm).unit_multiple_of(Phirotope::from_matrix(m));
        REQUIRE(unit.has_value());
        CHECK(*unit == phase_of(det(g, all)));
    }
}

TEST_CASE("underlying matroid") {
    CHECK(phi3().underlying_matroid() ==
          Matroid({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}}));

    Phirotope w1 = Phirotope::from_matrix(GaussMatrix::parse(kW1));
    CHECK(w1.underlying_matroid().bases().size() == 6);  // U_{2,4}

    Phirotope ex = Phirotope::from_matrix(GaussMatrix::parse(kExample51));
    Matroid m = ex.underlying_matroid();
    CHECK(m.rank() == 4);
    CHECK_FALSE(m.is_independent({1, 2, 3, 4, 5}));
    CHECK(std::find(m.circuits().begin(), m.circuits().end(), ElemSet{1, 2, 3, 4, 5}) !=
          m.circuits().end());
    CHECK(std::find(m.circuits().begin(), m.circuits().end(), ElemSet{1, 4, 5, 6, 7}) !=
          m.circuits().end());

    // Exchange violation surfaces when the matroid is requested.
    std::map<ElemSet, Phase> crooked{{{1, 2}, Phase::one()}, {{3, 4}, Phase::one()}};
    Phirotope broken({1, 2, 3, 4}, 2, crooked);
    CHECK_THROWS_AS(broken.underlying_matroid(), axiom_error);
}

TEST_CASE("reorientation to real") {
    // Anything built from a real matrix admits the trivial reorientation.
    Rng rng(103);
    GaussMatrix m = testing::random_realization(rng, /*real_only=*/true);
    CHECK(Phirotope::from_matrix(m).reorientation_to_real().has_value());

    // A non-real defined cross-ratio obstructs reorientation: cross-ratios
    // are reorientation invariants, and {0,±μ}-valued phirotopes only have
    // real ones.
    Phirotope p = Phirotope::from_matrix(GaussMatrix::parse("1 0 1 1\n0 1 1 i\n"));
    auto cr = p.cross_ratio(3, 4, {1}, {2});
    REQUIRE(cr.has_value());
    CHECK_FALSE(cr->is_real());
    CHECK_FALSE(p.reorientation_to_real().has_value());

    // When a witness is returned it genuinely works.
    Phirotope w1 = Phirotope::from_matrix(GaussMatrix::parse(kW1));
    auto scalars = w1.reorientation_to_real();
    if (scalars) {
        Phirotope r = w1.reorient(*scalars);
        Phase mu;
        bool first = true;
        for (const auto& [s, v] : r.values()) {
            if (first) {
                mu = v;
                first = false;
            }
            CHECK((v == mu || v == -mu));
        }
    }
}

TEST_CASE("phirotope file format") {
    Phirotope w1 = Phirotope::from_matrix(GaussMatrix::parse(kW1));
    CHECK(Phirotope::parse(w1.str()) == w1);

    CHECK_THROWS_AS(Phirotope::parse(""), parse_error);
    CHECK_THROWS_AS(Phirotope::parse("phirotope rank=2\n"), parse_error);
    CHECK_THROWS_AS(Phirotope::parse("phirotope rank=2 ground=3\n1 2\n"), parse_error);
    // Unsorted tuples pick up the permutation sign.
    Phirotope q = Phirotope::parse("phirotope rank=2 ground=2\n2 1 : i\n");
    CHECK(q.value({1, 2}) == Phase::ray(0, -1));
}
