#pragma once

#include "o4tensor/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace o4tensor {

// One summand c * sqrt(s): nonzero rational c, squarefree positive integer s.
// s == 1 is the plain rational term.
struct RadicalTerm {
    Rational coef;
    Int radicand;
};

// Element of the real field extension Q(sqrt(2), sqrt(3), sqrt(5), ...):
// a finite sum of RadicalTerms with strictly increasing radicands and no zero
// coefficients.  The empty sum is zero.  Square roots of distinct squarefree
// integers are linearly independent over Q, so this form is unique and
// equality is just structural equality.  Values are immutable once built.
class ExactSum {
  public:
    ExactSum() = default;

    static ExactSum zero() { return ExactSum(); }

    static ExactSum from_rational(const Rational& r) {
        ExactSum s;
        if (r != 0) s.terms_.push_back({r, Int(1)});
        return s;
    }

    static ExactSum from_int(long n) { return from_rational(Rational(n)); }

    // coef * sqrt(radicand); radicand must already be squarefree.
    static ExactSum from_term(const RadicalTerm& t) {
        if (t.radicand <= 0) throw std::invalid_argument("radicand must be positive");
        ExactSum s;
        if (t.coef != 0) s.terms_.push_back(t);
        return s;
    }

    const std::vector<RadicalTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
    }

    Rational rational_value() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_[0].radicand == 1) return terms_[0].coef;
        throw std::logic_error("ExactSum is not rational: " + str());
    }

    // The single c*sqrt(s) term, if this is one (used where a value is known
    // to be a pure radical, e.g. any single coupling coefficient).
    std::optional<RadicalTerm> single_term() const {
        if (terms_.size() == 1) return terms_[0];
        if (terms_.empty()) return RadicalTerm{Rational(0), Int(1)};
        return std::nullopt;
    }

    friend ExactSum operator-(const ExactSum& a) {
        ExactSum r = a;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend ExactSum operator+(const ExactSum& a, const ExactSum& b) {
        ExactSum r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && a.terms_[i].radicand < b.terms_[j].radicand)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].radicand < a.terms_[i].radicand) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Rational c = a.terms_[i].coef + b.terms_[j].coef;
                if (c != 0) r.terms_.push_back({c, a.terms_[i].radicand});
                ++i, ++j;
            }
        }
        return r;
    }

    friend ExactSum operator-(const ExactSum& a, const ExactSum& b) { return a + (-b); }

    friend ExactSum operator*(const ExactSum& a, const ExactSum& b) {
        ExactSum r;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) r = r + from_term(mul_terms(ta, tb));
        return r;
    }

    friend ExactSum operator*(const ExactSum& a, const Rational& c) {
        if (c == 0) return zero();
        ExactSum r = a;
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }
    friend ExactSum operator*(const Rational& c, const ExactSum& a) { return a * c; }

    // Division by a single radical term: 1/(c*sqrt(s)) = sqrt(s)/(c*s).
    // General division is deliberately not provided.
    ExactSum divided_by(const RadicalTerm& t) const {
        if (t.coef == 0) throw std::invalid_argument("division by zero term");
        return *this * from_term({Rational(1) / (t.coef * Rational(t.radicand)), t.radicand});
    }

    friend bool operator==(const ExactSum& a, const ExactSum& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].radicand != b.terms_[i].radicand ||
                a.terms_[i].coef != b.terms_[i].coef)
                return false;
        return true;
    }
    friend bool operator!=(const ExactSum& a, const ExactSum& b) { return !(a == b); }

    double to_double() const {
        double v = 0;
        for (const auto& t : terms_)
            v += t.coef.convert_to<double>() * std::sqrt(t.radicand.convert_to<double>());
        return v;
    }

    // Canonical text.  Each radical term is rendered as a square root of a
    // reduced rational, so (1/6)*sqrt(6) prints as sqrt(1/6); purely rational
    // terms print as plain rationals.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < terms_.size(); ++i) {
            const auto& t = terms_[i];
            bool neg = t.coef < 0;
            if (i == 0)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            Rational mag = neg ? -t.coef : t.coef;
            if (t.radicand == 1) {
                out += to_string(mag);
            } else {
                out += "sqrt(" + to_string(mag * mag * Rational(t.radicand)) + ")";
            }
        }
        return out;
    }

  private:
    static RadicalTerm mul_terms(const RadicalTerm& a, const RadicalTerm& b) {
        // sqrt(s)*sqrt(t) = g*sqrt((s/g)(t/g)) with g = gcd(s,t); both cofactors
        // are coprime and squarefree, so the product radicand is squarefree and
        // no factorization is ever needed here.
        Int g = boost::multiprecision::gcd(a.radicand, b.radicand);
        return {a.coef * b.coef * Rational(g), (a.radicand / g) * (b.radicand / g)};
    }

    std::vector<RadicalTerm> terms_;
};

// sqrt(p/q) for p/q >= 0, canonicalized: sqrt(p/q) = sqrt(p*q)/q = (a/q)*sqrt(s)
// with p*q = a^2 * s, s squarefree.
inline ExactSum sqrt_of_rational(const Rational& r) {
    if (r < 0) throw std::invalid_argument("sqrt_of_rational: negative operand " + to_string(r));
    if (r == 0) return ExactSum::zero();
    Int root, core;
    split_squarefree(num(r) * den(r), root, core);
    return ExactSum::from_term({Rational(root, den(r)), core});
}

// Used by tests to validate RadicalTerm invariants on small values.
inline bool is_squarefree(const Int& n) {
    if (n <= 0) return false;
    Int root, core;
    split_squarefree(n, root, core);
    return root == 1;
}

}  // namespace o4tensor
