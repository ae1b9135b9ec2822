#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace o4tensor {

// All integer arithmetic is arbitrary precision.  Factorials up to ~100 and
// products of coupling coefficients overflow 64-bit quickly, and a silent
// wrap would corrupt results that are meant to be exact.
using Int = boost::multiprecision::cpp_int;

// Canonical rational: gcd-reduced, denominator > 0, zero stored as 0/1.
// cpp_rational maintains exactly this normal form.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

inline std::string to_string(const Int& n) { return n.str(); }

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

// n = square * squarefree, both positive.  Trial division; intended for
// moderate operands (roughly < 10^9, plus a small prime tail beyond that).
// Radicands produced internally are already squarefree by construction, so
// this only runs on user-supplied values and small table entries.
inline void split_squarefree(const Int& n, Int& square_root_part, Int& squarefree) {
    if (n <= 0) throw std::invalid_argument("split_squarefree: operand must be positive");
    Int m = n;
    Int root = 1, core = 1;
    for (Int p = 2; p * p <= m; p == 2 ? p = 3 : p += 2) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) root *= p;
        if (e % 2) core *= p;
    }
    core *= m;  // remaining prime (or 1)
    square_root_part = root;
    squarefree = core;
}

// Factorials are shared and grown on demand.  Returned by value: the table
// may reallocate when a later call grows it, so handing out references would
// leave earlier ones dangling mid-expression.
inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    static std::vector<Int> table = {Int(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while ((long)table.size() <= n) table.push_back(table.back() * (long)table.size());
    return table[(size_t)n];
}

// Exponent of the prime p in n!  (Legendre).
inline long factorial_prime_exponent(long n, long p) {
    long e = 0;
    for (long q = p; q <= n; q *= p) {
        e += n / q;
        if (q > n / p) break;  // avoid overflow on q *= p
    }
    return e;
}

inline std::vector<long> primes_up_to(long n) {
    std::vector<bool> sieve((size_t)std::max<long>(n + 1, 2), true);
    std::vector<long> out;
    for (long i = 2; i <= n; ++i) {
        if (!sieve[(size_t)i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) sieve[(size_t)j] = false;
    }
    return out;
}

}  // namespace o4tensor
