#include <catch2/catch_amalgamated.hpp>

#include "o4tensor/json_io.hpp"

using namespace o4tensor;

namespace {

HalfInt half(long twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST_CASE("integer encoding switches to strings past the double-exact range") {
    const Int cutoff = Int(1) << 53;

    Json small = int_to_json(Int(5));
    REQUIRE(small.is_number_integer());
    REQUIRE(small.get<std::int64_t>() == 5);

    REQUIRE(int_to_json(cutoff).is_number_integer());
    REQUIRE(int_to_json(-cutoff).is_number_integer());
    Json big = int_to_json(cutoff + 1);
    REQUIRE(big.is_string());
    REQUIRE(big.get<std::string>() == "9007199254740993");
    REQUIRE(int_to_json(-cutoff - 1).is_string());

    REQUIRE(int_from_json(small) == Int(5));
    REQUIRE(int_from_json(big) == cutoff + 1);
    REQUIRE(int_from_json(int_to_json(-cutoff - 1)) == -cutoff - 1);
}

TEST_CASE("exact sums round trip") {
    ExactSum s = sqrt_of_rational(Rational(9, 20)) - ExactSum::from_rational(Rational(5, 3));
    Json j = to_json(s);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    REQUIRE(j[0]["coef"] == "-5/3");
    REQUIRE(j[0]["radicand"] == 1);
    REQUIRE(j[1]["coef"] == "3/10");
    REQUIRE(j[1]["radicand"] == 5);
    REQUIRE(exact_sum_from_json(j) == s);

    REQUIRE(to_json(ExactSum::zero()) == Json::array());
    REQUIRE(exact_sum_from_json(Json::array()).is_zero());

    // A term whose (squarefree) radicand exceeds the double-exact range:
    // the Mersenne prime 2^61 - 1.
    ExactSum giant = ExactSum::from_term({Rational(1, 3), Int("2305843009213693951")});
    Json jg = to_json(giant);
    REQUIRE(jg[0]["radicand"].is_string());
    REQUIRE(jg[0]["radicand"] == "2305843009213693951");
    REQUIRE(exact_sum_from_json(jg) == giant);
}

TEST_CASE("complex values and half-integers round trip") {
    ExactComplex z{ExactSum::from_int(1) + sqrt_of_rational(Rational(2)),
                   -sqrt_of_rational(Rational(3))};
    Json j = to_json(z);
    REQUIRE(j.contains("re"));
    REQUIRE(j.contains("im"));
    ExactComplex back = exact_complex_from_json(j);
    REQUIRE(back == z);

    REQUIRE(to_json(half(3)) == "3/2");
    REQUIRE(to_json(HalfInt(2)) == "2");
    REQUIRE(half_int_from_json(Json("3/2")) == half(3));
    REQUIRE(half_int_from_json(to_json(half(-5))) == half(-5));
}

TEST_CASE("relations round trip") {
    Relation rel = derive_relation(lowering_pair_commutator(), recurrence_probe_states(2),
                                   Convention::Standard);
    Json j = to_json(rel);
    REQUIRE(j["terms"].size() == 2);
    REQUIRE(j["terms"][0]["factors"] == Json::parse(R"([["1","1"],["1","2"]])"));
    Relation back = relation_from_json(j);
    REQUIRE(back.str() == rel.str());
    REQUIRE(to_json(back) == j);
}

TEST_CASE("generator report serialization") {
    RelationReport rep = check_relations(build_generators(TVariant::AsPrinted));
    Json j = to_json(rep);
    REQUIRE(j["variant"] == "as-printed");
    REQUIRE(j["relations"].size() == rep.checks.size());

    bool saw_failing = false, saw_passing = false;
    for (const auto& r : j["relations"]) {
        REQUIRE(r.contains("id"));
        REQUIRE(r.contains("block"));
        if (r["passes"].get<bool>()) {
            saw_passing = true;
            REQUIRE(r["residual_nonzero_entries"].empty());
        } else {
            saw_failing = true;
            REQUIRE_FALSE(r["residual_nonzero_entries"].empty());
            for (const auto& e : r["residual_nonzero_entries"]) {
                long row = e["row"].get<long>(), col = e["col"].get<long>();
                REQUIRE(row >= 1);
                REQUIRE(row <= 4);
                REQUIRE(col >= 1);
                REQUIRE(col <= 4);
                ExactComplex v = exact_complex_from_json(e["value"]);
                REQUIRE_FALSE(v.is_zero());
            }
        }
    }
    REQUIRE(saw_failing);
    REQUIRE(saw_passing);

    // Deterministic text: dumping twice and through a parse cycle agree.
    std::string once = j.dump(2);
    REQUIRE(to_json(check_relations(build_generators(TVariant::AsPrinted))).dump(2) == once);
    REQUIRE(Json::parse(once).dump(2) == once);
}

TEST_CASE("verify report serialization") {
    VerifyReport rep =
        verify_closed_form({half(1), half(1)}, 1, 1, Convention::Standard, false);
    Json j = to_json(rep);
    REQUIRE(j["spec"]["j1"] == "1/2");
    REQUIRE(j["spec"]["j2"] == "1/2");
    REQUIRE(j["l_min"] == 1);
    REQUIRE(j["l_max"] == 1);
    REQUIRE(j["convention"] == "standard");
    REQUIRE(j["symmetrized"] == false);
    REQUIRE(j["all_engine_rows_pass"] == true);
    REQUIRE(j["rows"].size() == 1);
    const Json& row = j["rows"][0];
    REQUIRE(row["l"] == 1);
    REQUIRE(row["engine_vs_oracle"] == "pass");
    REQUIRE(row["tabulated_ratio"] == "skipped");
    REQUIRE(row["bra_first_extraction"] == "inconsistent");
    REQUIRE(row["relation_text"].get<std::string>() ==
            relation_from_json(row["relation"]).str());
    REQUIRE(row["tabulated_cg"].empty());
    REQUIRE(row["three_term"].size() == 3);

    std::string once = j.dump(2);
    VerifyReport again =
        verify_closed_form({half(1), half(1)}, 1, 1, Convention::Standard, false);
    REQUIRE(to_json(again).dump(2) == once);
    REQUIRE(Json::parse(once).dump(2) == once);
}
