#pragma once

#include "o4tensor/radical.hpp"

namespace o4tensor {

struct ExactComplex {
    ExactSum re, im;

    ExactComplex() = default;
    ExactComplex(ExactSum r) : re(std::move(r)) {}
    ExactComplex(ExactSum r, ExactSum i) : re(std::move(r)), im(std::move(i)) {}

    static ExactComplex zero() { return {}; }
    static ExactComplex one() { return {ExactSum::from_int(1)}; }
    static ExactComplex i() { return {ExactSum::zero(), ExactSum::from_int(1)}; }
    static ExactComplex from_rational(const Rational& r) { return {ExactSum::from_rational(r)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    ExactComplex conj() const { return {re, -im}; }

    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ExactComplex operator*(const ExactComplex& a, const ExactSum& s) {
        return {a.re * s, a.im * s};
    }
    friend ExactComplex operator*(const ExactSum& s, const ExactComplex& a) { return a * s; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    std::string str() const {
        if (im.is_zero()) return re.str();
        if (re.is_zero()) return "(" + im.str() + ")*i";
        return re.str() + " + (" + im.str() + ")*i";
    }
};

}  // namespace o4tensor
