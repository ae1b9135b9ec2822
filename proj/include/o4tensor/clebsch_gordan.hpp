#pragma once

#include "o4tensor/half_int.hpp"
#include "o4tensor/radical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace o4tensor {

// <j1 m1; j2 m2 | j m> with the Condon-Shortley phase, evaluated exactly via
// the Racah single-sum formula.  Every coefficient is a single term
// c*sqrt(s): the prefactor is a square root of a ratio of factorials, whose
// prime factorization is read off with Legendre's formula, and the
// alternating sum is a plain rational.
//
// Each (j, m) pair must label a state that exists: j >= 0, j - m a whole
// number, |m| <= j.  Anything else is a domain error
// (std::invalid_argument), kept distinct from the legal zeros produced by
// the selection rules (m1 + m2 != m, triangle, lattice mismatch).  Code that
// wants "overlap with a nonexistent state reads as zero" should call
// cg_or_zero below.
inline ExactSum cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
    require_valid_jm(j1, m1, "cg(j1, m1)");
    require_valid_jm(j2, m2, "cg(j2, m2)");
    require_valid_jm(j, m, "cg(j, m)");

    if (m1 + m2 != m) return ExactSum::zero();
    if ((j1 + j2 + j).twice() % 2 != 0) return ExactSum::zero();  // no common lattice
    if (j < (j1 - j2 < HalfInt(0) ? j2 - j1 : j1 - j2) || j > j1 + j2) return ExactSum::zero();

    // All of these are now whole numbers.
    const long a1 = (j1 + j2 - j).as_integer();
    const long a2 = (j1 - j2 + j).as_integer();
    const long a3 = (j2 - j1 + j).as_integer();
    const long a4 = (j1 + j2 + j).as_integer() + 1;
    const long b1 = (j + m).as_integer();
    const long b2 = (j - m).as_integer();
    const long b3 = (j1 - m1).as_integer();
    const long b4 = (j1 + m1).as_integer();
    const long b5 = (j2 - m2).as_integer();
    const long b6 = (j2 + m2).as_integer();

    // Prefactor (2j+1) * a1! a2! a3! / a4! * b1!..b6! as prime exponents.
    std::map<long, long> exps;
    auto add_factorial = [&](long n, long sgn) {
        for (long p : primes_up_to(n)) exps[p] += sgn * factorial_prime_exponent(n, p);
    };
    add_factorial(a1, 1);
    add_factorial(a2, 1);
    add_factorial(a3, 1);
    add_factorial(a4, -1);
    for (long b : {b1, b2, b3, b4, b5, b6}) add_factorial(b, 1);
    {
        long tj = j.twice() + 1;  // 2j+1
        for (long p = 2; p <= tj; p == 2 ? p = 3 : p += 2)
            while (tj % p == 0) { tj /= p; exps[p] += 1; }
    }

    // Split even/odd exponents: prefactor = (c_rat)^2 * s, s squarefree.
    Rational c_rat(1);
    Int radicand(1);
    for (const auto& [p, e] : exps) {
        long q = (e >= 0) ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
        long r = e - 2 * q;                           // 0 or 1
        if (q >= 0)
            for (long i = 0; i < q; ++i) c_rat *= p;
        else
            for (long i = 0; i < -q; ++i) c_rat /= p;
        if (r) radicand *= p;
    }

    // Alternating Racah sum; plain exact rational.
    const long k_lo = std::max({0L, (j2 - j - m1).twice() / 2, (j1 + m2 - j).twice() / 2});
    const long k_hi = std::min({a1, b3, b6});
    Rational sum(0);
    for (long k = k_lo; k <= k_hi; ++k) {
        Rational term = Rational(1) / Rational(factorial(k) * factorial(a1 - k) *
                                               factorial(b3 - k) * factorial(b6 - k) *
                                               factorial((j - j2 + m1).twice() / 2 + k) *
                                               factorial((j - j1 - m2).twice() / 2 + k));
        sum += (k % 2 == 0) ? term : -term;
    }

    return ExactSum::from_term({sum * c_rat, radicand});
}

// Named-field spelling of the same arguments, for call sites that would
// otherwise read as six bare numbers.
struct CGArgs {
    HalfInt j1, m1, j2, m2, j, m;
};

inline ExactSum cg(const CGArgs& a) { return cg(a.j1, a.m1, a.j2, a.m2, a.j, a.m); }

// Total-function variant: a (j, m) pair that labels no state (projection out
// of range, or off the j lattice) contributes a zero overlap instead of a
// domain error.  The recurrence machinery walks m1 and m2 across edges of
// their ranges and relies on those slots reading as zero.  Negative j stays
// an error; no walk produces it.
inline ExactSum cg_or_zero(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j,
                           HalfInt m) {
    for (HalfInt jj : {j1, j2, j})
        if (jj.twice() < 0)
            throw std::invalid_argument("cg_or_zero: negative j = " + jj.str());
    if (!valid_jm(j1, m1) || !valid_jm(j2, m2) || !valid_jm(j, m)) return ExactSum::zero();
    return cg(j1, m1, j2, m2, j, m);
}

inline ExactSum cg_or_zero(const CGArgs& a) {
    return cg_or_zero(a.j1, a.m1, a.j2, a.m2, a.j, a.m);
}

// Closed forms for j2 = 1 (rank-1 coupling), Condon-Shortley convention.
// q is the rank-1 projection; the target is (j, m1 + q) with j in
// {j1 - 1, j1, j1 + 1}.  These are the textbook table entries; the library
// treats the Racah evaluation above as ground truth and the test suite checks
// the two agree at every target that exists.  When m1 + q falls outside
// [-j, j] the formulas hit a zero factor before any radicand can go
// negative, so the closed forms quietly extend to those edges with value 0,
// matching cg_or_zero rather than the throwing cg.
inline ExactSum cg_closed_form_j2_1(HalfInt j1, HalfInt m1, int q, HalfInt j) {
    if (q < -1 || q > 1) throw std::invalid_argument("cg_closed_form_j2_1: q must be -1, 0, +1");
    require_valid_jm(j1, m1, "cg_closed_form_j2_1");
    long d = (j - j1).twice();
    if (d != -2 && d != 0 && d != 2)
        throw std::invalid_argument("cg_closed_form_j2_1: j must be j1-1, j1, or j1+1");
    if (j.twice() < 0)
        throw std::invalid_argument("cg_closed_form_j2_1: negative j");

    const Rational l = j1.to_rational();
    const Rational m = m1.to_rational() + q;

    auto pos = [](const Rational& r) { return sqrt_of_rational(r); };
    auto neg = [](const Rational& r) { return -sqrt_of_rational(r); };

    if (d == 2) {  // j = j1 + 1
        Rational denom = (2 * l + 1) * (2 * l + 2);
        if (q == +1) return pos((l + m) * (l + m + 1) / denom);
        if (q == 0) return pos((l - m + 1) * (l + m + 1) * 2 / denom);
        return pos((l - m) * (l - m + 1) / denom);
    }
    if (d == 0) {  // j = j1
        if (l == 0) return ExactSum::zero();  // 0 x 1 has no j = 0 part (triangle)
        Rational denom = 2 * l * (l + 1);
        if (q == +1) return neg((l + m) * (l - m + 1) / denom);
        if (q == 0) {
            // m / sqrt(l(l+1))
            ExactSum mag = pos(m * m / (l * (l + 1)));
            return m < 0 ? -mag : mag;
        }
        return pos((l - m) * (l + m + 1) / denom);
    }
    // j = j1 - 1
    Rational denom = 2 * l * (2 * l + 1);
    if (q == +1) return pos((l - m) * (l - m + 1) / denom);
    if (q == 0) return neg((l - m) * (l + m) * 2 / denom);
    return pos((l + m + 1) * (l + m) / denom);
}

}  // namespace o4tensor
