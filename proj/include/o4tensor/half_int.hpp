#pragma once

#include "o4tensor/numeric.hpp"

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace o4tensor {

// Angular momentum label stored as twice its value, so 3/2 is exact.
class HalfInt {
  public:
    HalfInt() : t_(0) {}
    HalfInt(long whole) : t_(2 * whole) {}  // implicit: lets `l - 1` read naturally
    static HalfInt from_twice(long t) { HalfInt h; h.t_ = t; return h; }

    long twice() const { return t_; }
    bool is_integer() const { return t_ % 2 == 0; }
    long as_integer() const {
        if (!is_integer()) throw std::logic_error("HalfInt " + str() + " is not an integer");
        return t_ / 2;
    }
    Rational to_rational() const { return Rational(t_, 2); }
    double to_double() const { return (double)t_ / 2.0; }

    HalfInt operator-() const { return from_twice(-t_); }
    HalfInt& operator+=(HalfInt o) { t_ += o.t_; return *this; }
    HalfInt& operator-=(HalfInt o) { t_ -= o.t_; return *this; }
    friend HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.t_ + b.t_); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.t_ - b.t_); }
    friend auto operator<=>(HalfInt a, HalfInt b) = default;

    std::string str() const {
        if (t_ % 2 == 0) return std::to_string(t_ / 2);
        return std::to_string(t_) + "/2";
    }

    // Accepts "3/2", "1.5", "-2", "2.0".
    static HalfInt parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty half-integer");
        auto bad = [&] { return std::invalid_argument("not a half-integer: '" + s + "'"); };
        auto parse_long = [&](const std::string& p) {
            if (p.empty() || (p.size() == 1 && (p[0] == '+' || p[0] == '-'))) throw bad();
            for (size_t i = (p[0] == '+' || p[0] == '-') ? 1 : 0; i < p.size(); ++i)
                if (!std::isdigit((unsigned char)p[i])) throw bad();
            return std::stol(p);
        };
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            long p = parse_long(s.substr(0, slash));
            long q = parse_long(s.substr(slash + 1));
            if (q == 1) return HalfInt(p);
            if (q == 2) return from_twice(p);
            throw bad();
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string frac = s.substr(dot + 1);
            long whole = parse_long(s.substr(0, dot));
            bool negative = s[0] == '-';
            if (frac == "0" || frac == "00") return HalfInt(whole);
            if (frac == "5") return from_twice(2 * whole + (negative ? -1 : 1));
            throw bad();
        }
        return HalfInt(parse_long(s));
    }

  private:
    long t_;
};

// Projection m belongs with j when |m| <= j and j - m is a whole number.
inline bool valid_jm(HalfInt j, HalfInt m) {
    return j.twice() >= 0 && std::abs(m.twice()) <= j.twice() &&
           (j.twice() - m.twice()) % 2 == 0;
}

inline void require_valid_jm(HalfInt j, HalfInt m, const char* what) {
    if (!valid_jm(j, m))
        throw std::invalid_argument(std::string(what) + ": invalid (j, m) = (" + j.str() +
                                    ", " + m.str() + ")");
}

// j(j+1) as an exact rational.
inline Rational casimir(HalfInt j) { return Rational(j.twice() * (j.twice() + 2), 4); }

}  // namespace o4tensor
