#include <catch2/catch_amalgamated.hpp>

#include "o4tensor/clebsch_gordan.hpp"

#include <map>
#include <tuple>
#include <vector>

using namespace o4tensor;

namespace {

HalfInt half(long twice) { return HalfInt::from_twice(twice); }

// All coefficients of a (j1, j2) coupling, keyed by (2m1, 2m2, 2j); the
// target m is always m1 + m2.
std::map<std::tuple<long, long, long>, ExactSum> cg_table(HalfInt j1, HalfInt j2) {
    std::map<std::tuple<long, long, long>, ExactSum> t;
    HalfInt jlo = j1 < j2 ? j2 - j1 : j1 - j2;
    for (HalfInt m1 = -j1; m1 <= j1; m1 += HalfInt(1))
        for (HalfInt m2 = -j2; m2 <= j2; m2 += HalfInt(1))
            for (HalfInt j = jlo; j <= j1 + j2; j += HalfInt(1)) {
                if (!valid_jm(j, m1 + m2)) continue;
                t[{m1.twice(), m2.twice(), j.twice()}] = cg(j1, m1, j2, m2, j, m1 + m2);
            }
    return t;
}

}  // namespace

TEST_CASE("anchor values") {
    REQUIRE(cg(2, 2, 1, 1, 3, 3) == ExactSum::from_int(1));            // stretched
    REQUIRE(cg(1, 1, 1, -1, 2, 0) == sqrt_of_rational(Rational(1, 6)));
    REQUIRE(cg(1, 1, 1, 1, 2, 1).is_zero());                           // m != m1 + m2
    REQUIRE(cg(half(1), half(1), half(1), half(-1), 0, 0) == sqrt_of_rational(Rational(1, 2)));
    REQUIRE(cg(2, 1, 1, 1, 2, 2) == -sqrt_of_rational(Rational(1, 3)));
    REQUIRE(cg(1, 0, 1, 0, 2, 0) == sqrt_of_rational(Rational(2, 3)));
    REQUIRE(cg(1, 0, 1, 0, 0, 0) == -sqrt_of_rational(Rational(1, 3)));
    REQUIRE(cg(half(3), half(1), 1, 0, half(3), half(1)) == sqrt_of_rational(Rational(1, 15)));
    // Triangle-rule zero with every state existing.
    REQUIRE(cg(2, 0, 1, 0, 4, 0).is_zero());
    // CGArgs spelling is the same function.
    REQUIRE(cg(CGArgs{2, 2, 1, 1, 3, 3}) == ExactSum::from_int(1));
}

TEST_CASE("invalid states are domain errors, distinct from legal zeros") {
    REQUIRE_THROWS_AS(cg(1, 2, 1, 0, 2, 2), std::invalid_argument);          // |m1| > j1
    REQUIRE_THROWS_AS(cg(1, half(1), 1, 0, 2, half(1)), std::invalid_argument);  // parity
    REQUIRE_THROWS_AS(cg(-1, 0, 1, 0, 1, 0), std::invalid_argument);         // j1 < 0
    REQUIRE_THROWS_AS(cg(1, 0, 1, 0, 2, 3), std::invalid_argument);          // |m| > j

    REQUIRE(cg_or_zero(1, 2, 1, 0, 2, 2).is_zero());
    REQUIRE(cg_or_zero(1, 1, 1, 1, 2, 3).is_zero());
    REQUIRE_THROWS_AS(cg_or_zero(-1, 0, 1, 0, 1, 0), std::invalid_argument);
    REQUIRE(cg_or_zero(CGArgs{1, 2, 1, 0, 2, 2}).is_zero());
    // Where the states exist the two spellings agree.
    REQUIRE(cg_or_zero(1, 1, 1, -1, 2, 0) == cg(1, 1, 1, -1, 2, 0));
}

TEST_CASE("selection rules produce exact zeros") {
    for (long tj1 = 0; tj1 <= 4; ++tj1)
        for (long tj2 = 0; tj2 <= 4; ++tj2) {
            HalfInt j1 = half(tj1), j2 = half(tj2);
            for (HalfInt m1 = -j1; m1 <= j1; m1 += HalfInt(1))
                for (HalfInt m2 = -j2; m2 <= j2; m2 += HalfInt(1))
                    for (HalfInt j = HalfInt(0); j <= j1 + j2 + HalfInt(1); j += HalfInt(1)) {
                        for (HalfInt m = -j; m <= j; m += HalfInt(1)) {
                            if ((j - m1 - m2).twice() % 2 != 0) continue;  // no such m slot
                            ExactSum v = cg(j1, m1, j2, m2, j, m);
                            if (m != m1 + m2) REQUIRE(v.is_zero());
                            HalfInt lo = j1 < j2 ? j2 - j1 : j1 - j2;
                            if (j < lo || j1 + j2 < j) REQUIRE(v.is_zero());
                            REQUIRE(v.single_term().has_value());  // always one radical
                        }
                    }
        }
}

TEST_CASE("orthogonality of the coupling transform") {
    for (long tj1 = 0; tj1 <= 4; ++tj1)
        for (long tj2 = 0; tj2 <= 4; ++tj2) {
            HalfInt j1 = half(tj1), j2 = half(tj2);
            auto table = cg_table(j1, j2);
            auto at = [&](HalfInt m1, HalfInt m2, HalfInt j) {
                auto it = table.find({m1.twice(), m2.twice(), j.twice()});
                return it == table.end() ? ExactSum::zero() : it->second;
            };
            HalfInt jlo = j1 < j2 ? j2 - j1 : j1 - j2;
            HalfInt jhi = j1 + j2;

            // Sum over product labels: delta in (j, j') at fixed m.
            for (HalfInt j = jlo; j <= jhi; j += HalfInt(1))
                for (HalfInt jp = jlo; jp <= jhi; jp += HalfInt(1))
                    for (HalfInt m = -jhi; m <= jhi; m += HalfInt(1)) {
                        if (!valid_jm(j, m) || !valid_jm(jp, m)) continue;
                        ExactSum sum;
                        for (HalfInt m1 = -j1; m1 <= j1; m1 += HalfInt(1)) {
                            HalfInt m2 = m - m1;
                            if (!valid_jm(j2, m2)) continue;
                            sum = sum + at(m1, m2, j) * at(m1, m2, jp);
                        }
                        REQUIRE(sum == (j == jp ? ExactSum::from_int(1) : ExactSum::zero()));
                    }

            // Sum over coupled labels: delta in the product labels.
            for (HalfInt m1 = -j1; m1 <= j1; m1 += HalfInt(1))
                for (HalfInt m2 = -j2; m2 <= j2; m2 += HalfInt(1))
                    for (HalfInt n1 = -j1; n1 <= j1; n1 += HalfInt(1)) {
                        HalfInt n2 = m1 + m2 - n1;  // only equal totals contribute
                        if (!valid_jm(j2, n2)) continue;
                        ExactSum sum;
                        for (HalfInt j = jlo; j <= jhi; j += HalfInt(1)) {
                            if (!valid_jm(j, m1 + m2)) continue;
                            sum = sum + at(m1, m2, j) * at(n1, n2, j);
                        }
                        bool same = m1 == n1 && m2 == n2;
                        REQUIRE(sum == (same ? ExactSum::from_int(1) : ExactSum::zero()));
                    }
        }
}

TEST_CASE("exchange symmetry") {
    for (long tj1 = 0; tj1 <= 3; ++tj1)
        for (long tj2 = 0; tj2 <= 3; ++tj2) {
            HalfInt j1 = half(tj1), j2 = half(tj2);
            HalfInt jlo = j1 < j2 ? j2 - j1 : j1 - j2;
            for (HalfInt j = jlo; j <= j1 + j2; j += HalfInt(1))
                for (HalfInt m1 = -j1; m1 <= j1; m1 += HalfInt(1))
                    for (HalfInt m2 = -j2; m2 <= j2; m2 += HalfInt(1)) {
                        if (!valid_jm(j, m1 + m2)) continue;
                        ExactSum lhs = cg(j1, m1, j2, m2, j, m1 + m2);
                        ExactSum rhs = cg(j2, m2, j1, m1, j, m1 + m2);
                        long phase = (j1 + j2 - j).as_integer();
                        REQUIRE(lhs == (phase % 2 == 0 ? rhs : -rhs));
                    }
        }
}

TEST_CASE("closed forms agree with the Racah evaluation") {
    long compared = 0;
    // Integer l up to 8 here (the acceptance sweep goes to 20) plus
    // half-integer first arguments, which the closed forms accept as well.
    std::vector<HalfInt> firsts;
    for (long l = 1; l <= 8; ++l) firsts.push_back(HalfInt(l));
    for (long t : {1, 3, 5}) firsts.push_back(half(t));

    for (HalfInt j1 : firsts)
        for (HalfInt m1 = -j1; m1 <= j1; m1 += HalfInt(1))
            for (int q : {-1, 0, +1})
                for (long d : {-1L, 0L, 1L}) {
                    HalfInt j = j1 + HalfInt(d);
                    if (j.twice() < 0) {
                        REQUIRE_THROWS_AS(cg_closed_form_j2_1(j1, m1, q, j),
                                          std::invalid_argument);
                        continue;
                    }
                    ExactSum closed = cg_closed_form_j2_1(j1, m1, q, j);
                    HalfInt m = m1 + HalfInt(q);
                    if (valid_jm(j, m)) {
                        REQUIRE(closed == cg(j1, m1, HalfInt(1), HalfInt(q), j, m));
                        ++compared;
                    } else {
                        // Nonexistent target: the closed form extends with 0,
                        // the strict evaluation refuses the state.
                        REQUIRE(closed.is_zero());
                        REQUIRE_THROWS_AS(cg(j1, m1, HalfInt(1), HalfInt(q), j, m),
                                          std::invalid_argument);
                    }
                }
    REQUIRE(compared >= 600);

    REQUIRE(cg_closed_form_j2_1(2, 1, +1, 3) == sqrt_of_rational(Rational(2, 3)));
    REQUIRE(cg_closed_form_j2_1(2, 2, -1, 1) == sqrt_of_rational(Rational(3, 5)));
    REQUIRE(cg_closed_form_j2_1(2, 1, +1, 2) == -sqrt_of_rational(Rational(1, 3)));

    REQUIRE_THROWS_AS(cg_closed_form_j2_1(2, 1, 2, 3), std::invalid_argument);   // bad q
    REQUIRE_THROWS_AS(cg_closed_form_j2_1(2, 3, 1, 3), std::invalid_argument);   // bad (j1, m1)
    REQUIRE_THROWS_AS(cg_closed_form_j2_1(2, 1, 1, 4), std::invalid_argument);   // j not adjacent
    // l = 0 in the j = j1 branch: the target multiplet has no j = 0 part.
    REQUIRE(cg_closed_form_j2_1(0, 0, 0, 0).is_zero());
    REQUIRE(cg_closed_form_j2_1(0, 0, 1, 0).is_zero());
}

TEST_CASE("stretched coefficients are exactly one") {
    for (long tj1 : {1, 2, 3, 4})
        for (long tj2 : {1, 2, 3}) {
            HalfInt j1 = half(tj1), j2 = half(tj2);
            REQUIRE(cg(j1, j1, j2, j2, j1 + j2, j1 + j2) == ExactSum::from_int(1));
        }
}
