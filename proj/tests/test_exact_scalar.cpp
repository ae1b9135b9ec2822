#include <catch2/catch_amalgamated.hpp>

#include "o4tensor/exact_complex.hpp"
#include "o4tensor/half_int.hpp"
#include "o4tensor/radical.hpp"

#include <cmath>
#include <random>

using namespace o4tensor;

TEST_CASE("rational helpers") {
    REQUIRE(to_string(Rational(3, 6)) == "1/2");
    REQUIRE(to_string(Rational(-4, 2)) == "-2");
    REQUIRE(to_string(Int(-12)) == "-12");
    REQUIRE(parse_rational("9/12") == Rational(3, 4));
    REQUIRE(parse_rational("-7") == Rational(-7));
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
    REQUIRE(sign_of(Rational(-1, 3)) == -1);
    REQUIRE(sign_of(Rational(0)) == 0);
}

TEST_CASE("factorials, prime exponents, squarefree split") {
    REQUIRE(factorial(0) == 1);
    REQUIRE(factorial(5) == 120);
    REQUIRE(factorial(20) == Int("2432902008176640000"));
    // Safe to combine two calls in one expression (values, not references
    // into the memo table): C(30,15) = 155117520.
    Int mixed = factorial(30) / (factorial(15) * factorial(15));
    REQUIRE(mixed == 155117520);
    REQUIRE_THROWS_AS(factorial(-1), std::invalid_argument);

    REQUIRE(factorial_prime_exponent(10, 2) == 8);
    REQUIRE(factorial_prime_exponent(100, 5) == 24);
    REQUIRE(primes_up_to(20) == std::vector<long>({2, 3, 5, 7, 11, 13, 17, 19}));
    REQUIRE(primes_up_to(1).empty());

    Int root, core;
    split_squarefree(Int(18), root, core);
    REQUIRE(root == 3);
    REQUIRE(core == 2);
    split_squarefree(Int(1), root, core);
    REQUIRE(root == 1);
    REQUIRE(core == 1);
    REQUIRE(is_squarefree(Int(10)));
    REQUIRE_FALSE(is_squarefree(Int(12)));
    REQUIRE_FALSE(is_squarefree(Int(0)));
    REQUIRE_THROWS_AS(split_squarefree(Int(0), root, core), std::invalid_argument);
}

TEST_CASE("sqrt_of_rational canonicalizes to squarefree radicands") {
    ExactSum s = sqrt_of_rational(Rational(18));  // 3*sqrt(2)
    REQUIRE(s.terms().size() == 1);
    REQUIRE(s.terms()[0].coef == 3);
    REQUIRE(s.terms()[0].radicand == 2);
    REQUIRE(s.str() == "sqrt(18)");

    ExactSum t = sqrt_of_rational(Rational(1, 6));  // (1/6)*sqrt(6)
    REQUIRE(t.terms()[0].coef == Rational(1, 6));
    REQUIRE(t.terms()[0].radicand == 6);
    REQUIRE(t.str() == "sqrt(1/6)");

    REQUIRE(sqrt_of_rational(Rational(4, 9)) == ExactSum::from_rational(Rational(2, 3)));
    REQUIRE(sqrt_of_rational(Rational(0)).is_zero());
    REQUIRE_THROWS_AS(sqrt_of_rational(Rational(-1)), std::invalid_argument);

    // Round trip: squaring recovers the operand exactly.
    for (long n = 1; n <= 60; ++n) {
        Rational r(n, 7);
        ExactSum root = sqrt_of_rational(r);
        REQUIRE((root * root).rational_value() == r);
    }
}

TEST_CASE("construction guards") {
    REQUIRE_THROWS_AS(ExactSum::from_term({Rational(1), Int(0)}), std::invalid_argument);
    REQUIRE_THROWS_AS(ExactSum::from_term({Rational(1), Int(-3)}), std::invalid_argument);
    REQUIRE(ExactSum::from_term({Rational(0), Int(7)}).is_zero());
}

TEST_CASE("canonical text form") {
    REQUIRE(ExactSum::zero().str() == "0");
    REQUIRE(ExactSum::from_int(-2).str() == "-2");
    REQUIRE(ExactSum::from_rational(Rational(5, 3)).str() == "5/3");
    REQUIRE(ExactSum::from_term({Rational(-3, 10), Int(5)}).str() == "-sqrt(9/20)");
    ExactSum v = sqrt_of_rational(Rational(1, 2)) - sqrt_of_rational(Rational(1, 3));
    REQUIRE(v.str() == "sqrt(1/2) - sqrt(1/3)");
    ExactSum w = ExactSum::from_int(2) + sqrt_of_rational(Rational(3));
    REQUIRE(w.str() == "2 + sqrt(3)");
}

TEST_CASE("single term access, rational access, division") {
    auto zt = ExactSum::zero().single_term();
    REQUIRE(zt.has_value());
    REQUIRE(zt->coef == 0);
    REQUIRE(zt->radicand == 1);

    ExactSum two = sqrt_of_rational(Rational(1, 2)) + sqrt_of_rational(Rational(1, 3));
    REQUIRE_FALSE(two.single_term().has_value());

    ExactSum s = sqrt_of_rational(Rational(5));
    REQUIRE(s.divided_by(*s.single_term()) == ExactSum::from_int(1));
    REQUIRE(ExactSum::from_int(3).divided_by({Rational(1, 2), Int(2)}) ==
            ExactSum::from_term({Rational(3), Int(2)}));
    REQUIRE_THROWS_AS(s.divided_by({Rational(0), Int(1)}), std::invalid_argument);

    REQUIRE(ExactSum::from_rational(Rational(7, 2)).rational_value() == Rational(7, 2));
    REQUIRE(ExactSum::zero().rational_value() == 0);
    REQUIRE(ExactSum::zero().is_rational());
    REQUIRE_FALSE(s.is_rational());
    REQUIRE_THROWS_AS(s.rational_value(), std::logic_error);
}

namespace {

ExactSum random_sum(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), numer(-20, 20), denom(1, 12), rad(1, 9999);
    ExactSum s;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        s = s + Rational(numer(rng), denom(rng)) * sqrt_of_rational(Rational(rad(rng)));
    return s;
}

}  // namespace

TEST_CASE("field axioms on randomized values") {
    std::mt19937 rng(20260816u);
    for (int iter = 0; iter < 1000; ++iter) {
        ExactSum a = random_sum(rng), b = random_sum(rng), c = random_sum(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a + ExactSum::zero() == a);
        REQUIRE(a * ExactSum::from_int(1) == a);
        REQUIRE((a * ExactSum::zero()).is_zero());

        // Every surviving radicand stays squarefree through the arithmetic.
        for (const auto& t : (a * b).terms()) {
            REQUIRE(t.coef != 0);
            REQUIRE(is_squarefree(t.radicand));
        }

        double approx = (a * b + c).to_double();
        double direct = a.to_double() * b.to_double() + c.to_double();
        REQUIRE(std::abs(approx - direct) <= 1e-6 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("radicand ordering is strict and terms merge") {
    ExactSum a = sqrt_of_rational(Rational(2)) + sqrt_of_rational(Rational(3)) +
                 sqrt_of_rational(Rational(2));
    REQUIRE(a.terms().size() == 2);
    REQUIRE(a.terms()[0].radicand == 2);
    REQUIRE(a.terms()[0].coef == 2);
    REQUIRE(a.terms()[1].radicand == 3);
    REQUIRE((a - a).is_zero());
    // sqrt(6)*sqrt(10) = 2*sqrt(15): the gcd route keeps the radicand squarefree.
    ExactSum p = sqrt_of_rational(Rational(6)) * sqrt_of_rational(Rational(10));
    REQUIRE(p == ExactSum::from_term({Rational(2), Int(15)}));
}

TEST_CASE("complex layer") {
    ExactComplex i = ExactComplex::i();
    REQUIRE(i * i == -ExactComplex::one());
    ExactComplex z(ExactSum::from_int(1), ExactSum::from_int(1));
    REQUIRE(z * z.conj() == ExactComplex(ExactSum::from_int(2)));
    REQUIRE(z.conj().im == ExactSum::from_int(-1));
    REQUIRE(z.str() == "1 + (1)*i");
    REQUIRE(i.str() == "(1)*i");
    REQUIRE(ExactComplex::zero().is_zero());
    REQUIRE(ExactComplex::one().is_real());
    REQUIRE_FALSE(z.is_real());
    REQUIRE((z - z).is_zero());
    REQUIRE(ExactComplex::from_rational(Rational(1, 2)) * ExactComplex::from_rational(Rational(2)) ==
            ExactComplex::one());
    REQUIRE(sqrt_of_rational(Rational(2)) * i == ExactComplex(ExactSum::zero(), sqrt_of_rational(Rational(2))));
}

TEST_CASE("half-integer labels") {
    REQUIRE(HalfInt::parse("3/2").twice() == 3);
    REQUIRE(HalfInt::parse("1.5").twice() == 3);
    REQUIRE(HalfInt::parse("-1.5").twice() == -3);
    REQUIRE(HalfInt::parse("-2").twice() == -4);
    REQUIRE(HalfInt::parse("2.0").twice() == 4);
    REQUIRE(HalfInt::parse("4/2").twice() == 4);
    REQUIRE(HalfInt::parse("3/1").twice() == 6);
    REQUIRE_THROWS_AS(HalfInt::parse("2/3"), std::invalid_argument);
    REQUIRE_THROWS_AS(HalfInt::parse("1.25"), std::invalid_argument);
    REQUIRE_THROWS_AS(HalfInt::parse(""), std::invalid_argument);
    REQUIRE_THROWS_AS(HalfInt::parse("abc"), std::invalid_argument);

    REQUIRE(HalfInt(2).str() == "2");
    REQUIRE(HalfInt::from_twice(-3).str() == "-3/2");
    REQUIRE(HalfInt(3).as_integer() == 3);
    REQUIRE_THROWS_AS(HalfInt::from_twice(3).as_integer(), std::logic_error);
    REQUIRE((HalfInt(1) + HalfInt::from_twice(1)).str() == "3/2");
    REQUIRE((HalfInt(1) - HalfInt(2)).twice() == -2);
    REQUIRE((-HalfInt::from_twice(5)).twice() == -5);
    REQUIRE(HalfInt::from_twice(1).to_rational() == Rational(1, 2));
    REQUIRE(HalfInt::from_twice(3).to_double() == 1.5);
    REQUIRE(HalfInt(1) < HalfInt::from_twice(3));

    REQUIRE(valid_jm(HalfInt(1), HalfInt(-1)));
    REQUIRE_FALSE(valid_jm(HalfInt(1), HalfInt::from_twice(1)));  // parity mismatch
    REQUIRE_FALSE(valid_jm(HalfInt(1), HalfInt(2)));              // |m| > j
    REQUIRE_FALSE(valid_jm(HalfInt(-1), HalfInt(0)));             // negative j
    REQUIRE_THROWS_AS(require_valid_jm(HalfInt(1), HalfInt(2), "test"), std::invalid_argument);

    REQUIRE(casimir(HalfInt::from_twice(1)) == Rational(3, 4));
    REQUIRE(casimir(HalfInt(3)) == 12);
}
