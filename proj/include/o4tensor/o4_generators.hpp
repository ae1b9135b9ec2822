#pragma once

#include "o4tensor/matrix.hpp"

#include <string>
#include <vector>

namespace o4tensor {

// 4x4 unit matrix entry, 1-based indices.
inline Matrix elementary4(int i, int j) {
    if (i < 1 || i > 4 || j < 1 || j > 4)
        throw std::invalid_argument("elementary4: indices must be 1..4");
    Matrix m(4, 4);
    m.at((size_t)i - 1, (size_t)j - 1) = ExactComplex::one();
    return m;
}

// I_ij = E_ij - E_ji.
inline Matrix antisym4(int i, int j) { return elementary4(i, j) - elementary4(j, i); }

// The rotation generators J and the 4th-axis generators T in the defining
// representation.  Two builds of T are provided: AsPrinted keeps T(+1) and
// T(-1) real, exactly as the tabulated component forms below spell them,
// while ImaginaryT carries an imaginary unit on the second term, mirroring
// the structure of J(+1) and J(-1).  The checker evaluates the commutation
// table for both and reports what actually holds, rather than assuming
// either.
enum class TVariant { AsPrinted, ImaginaryT };

inline const char* variant_name(TVariant v) {
    return v == TVariant::AsPrinted ? "as-printed" : "imaginary-t";
}

inline TVariant parse_variant(const std::string& s) {
    if (s == "as-printed") return TVariant::AsPrinted;
    if (s == "imaginary-t") return TVariant::ImaginaryT;
    throw std::invalid_argument("unknown variant '" + s + "' (want as-printed or imaginary-t)");
}

struct GeneratorSet {
    TVariant variant;
    Matrix j0, jp1, jm1;  // J_0, J_{+1}, J_{-1}
    Matrix t0, tp1, tm1;  // T_0, T_{+1}, T_{-1}

    const Matrix& j(int q) const { return q == 0 ? j0 : (q > 0 ? jp1 : jm1); }
    const Matrix& t(int q) const { return q == 0 ? t0 : (q > 0 ? tp1 : tm1); }
};

// Component forms:
//   J_0    = i I_21
//   J_+-1  = -sqrt(1/2) (I_31 +- i I_32)
//   T_0    = -i I_43
//   T_+-1  = -sqrt(1/2) (I_42 -+   I_41)   [AsPrinted]
//   T_+-1  = -sqrt(1/2) (I_42 -+ i I_41)   [ImaginaryT]
inline GeneratorSet build_generators(TVariant v) {
    const ExactComplex i = ExactComplex::i();
    const ExactSum r = sqrt_of_rational(Rational(1, 2));  // sqrt(1/2)

    GeneratorSet g;
    g.variant = v;
    g.j0 = i * antisym4(2, 1);
    g.jp1 = -(antisym4(3, 1) + i * antisym4(3, 2)) * r;
    g.jm1 = -(antisym4(3, 1) - i * antisym4(3, 2)) * r;
    g.t0 = -(i * antisym4(4, 3));
    if (v == TVariant::AsPrinted) {
        g.tp1 = -(antisym4(4, 2) - antisym4(4, 1)) * r;
        g.tm1 = -(antisym4(4, 2) + antisym4(4, 1)) * r;
    } else {
        g.tp1 = -(antisym4(4, 2) - i * antisym4(4, 1)) * r;
        g.tm1 = -(antisym4(4, 2) + i * antisym4(4, 1)) * r;
    }
    return g;
}

struct RelationCheck {
    std::string id;     // lhs + " = " + rhs, e.g. "[J0,J+1] = +J+1"
    std::string block;  // "tabulated", "shifted_index", "decoupling"
    std::string lhs;    // e.g. "[J0,J+1]"
    std::string rhs;    // e.g. "+J+1", "0"
    bool passes;
    Matrix residual;  // lhs - rhs; zero iff passes
};

struct RelationReport {
    TVariant variant;
    std::vector<RelationCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.passes) return false;
        return true;
    }
};

namespace detail {

inline std::string q_name(int q) { return q == 0 ? "0" : (q > 0 ? "+1" : "-1"); }

inline void push_check(RelationReport& rep, std::string block, std::string lhs_desc,
                       std::string rhs_desc, const Matrix& lhs, const Matrix& rhs) {
    Matrix res = lhs - rhs;
    bool ok = res.is_zero();
    rep.checks.push_back({lhs_desc + " = " + rhs_desc, std::move(block), std::move(lhs_desc),
                          std::move(rhs_desc), ok, std::move(res)});
}

}  // namespace detail

// Evaluates every commutation relation the generator table is supposed to
// satisfy, expanded into individual (sign, q) instances:
//
//   [J0,J+-1] = +-J+-1        [J+1,J-1] = -J0
//   [T0,T+-1] = +-J+-1        [T+1,T-1] = -J0
//   [J0,Tq]   = q Tq
//   [J+-1,Tq] = -+ sqrt(1/2) sqrt((1 -+ q)(1 +- q + 1)) T(q+1)
//
// Within the last family every nonzero coefficient works out to +-1.  The
// family is checked twice: once with the raised index T(q+1) exactly as the
// table states it (the "tabulated" block; the [J-1,T+1] instance would need
// a nonexistent T(+2) and is omitted, leaving 14 instances), and once with
// the sign-following index T(q+-1) standard for a rank-1 operator (the
// "shifted_index" block).  A "decoupling" block checks that M = (J+T)/2 and
// N = (J-T)/2 commute component by component.  Nothing here is asserted;
// the report records what holds for the given variant.
inline RelationReport check_relations(const GeneratorSet& g) {
    using detail::push_check;
    using detail::q_name;

    RelationReport rep;
    rep.variant = g.variant;
    const Matrix zero4(4, 4);

    // [J0, J+-1] = +-J+-1
    for (int s : {+1, -1}) {
        push_check(rep, "tabulated", "[J0,J" + q_name(s) + "]",
                   (s > 0 ? "+J" : "-J") + q_name(s), commutator(g.j0, g.j(s)),
                   s > 0 ? g.j(s) : -g.j(s));
    }
    // [J+1, J-1] = -J0
    push_check(rep, "tabulated", "[J+1,J-1]", "-J0", commutator(g.jp1, g.jm1), -g.j0);
    // [T0, T+-1] = +-J+-1
    for (int s : {+1, -1}) {
        push_check(rep, "tabulated", "[T0,T" + q_name(s) + "]",
                   (s > 0 ? "+J" : "-J") + q_name(s), commutator(g.t0, g.t(s)),
                   s > 0 ? g.j(s) : -g.j(s));
    }
    // [T+1, T-1] = -J0
    push_check(rep, "tabulated", "[T+1,T-1]", "-J0", commutator(g.tp1, g.tm1), -g.j0);
    // [J0, Tq] = q Tq
    for (int q : {+1, 0, -1}) {
        Matrix rhs = q == 0 ? zero4 : (q > 0 ? g.t(q) : -g.t(q));
        push_check(rep, "tabulated", "[J0,T" + q_name(q) + "]",
                   q == 0 ? "0" : (q > 0 ? "+T" : "-T") + q_name(q),
                   commutator(g.j0, g.t(q)), rhs);
    }
    // [J+-1, Tq], both index readings.
    for (const char* block : {"tabulated", "shifted_index"}) {
        bool shifted = std::string(block) == "shifted_index";
        for (int s : {+1, -1}) {
            for (int q : {+1, 0, -1}) {
                long prod = (1 - s * q) * (1 + s * q + 1);  // 0 or 2, so |coef| is 0 or 1
                int target = shifted ? q + s : q + 1;
                // A nonzero multiple of the nonexistent T(+2) cannot be
                // stated; with a zero coefficient the row reads "= 0" and
                // stays.  This leaves 14 instances in the tabulated block.
                if (!shifted && target > 1 && prod != 0) continue;
                bool zero_rhs = prod == 0 || target > 1 || target < -1;
                Matrix rhs = zero_rhs ? zero4 : (s > 0 ? -g.t(target) : g.t(target));
                std::string rhs_name =
                    zero_rhs ? "0" : (s > 0 ? "-T" : "+T") + q_name(target);
                push_check(rep, block, "[J" + q_name(s) + ",T" + q_name(q) + "]", rhs_name,
                           commutator(g.j(s), g.t(q)), rhs);
            }
        }
    }
    // Decoupling: M = (J+T)/2 and N = (J-T)/2 must commute if J,T close a
    // direct sum of two commuting algebras.
    const ExactComplex half = ExactComplex::from_rational(Rational(1, 2));
    for (int a : {+1, 0, -1}) {
        for (int b : {+1, 0, -1}) {
            Matrix ma = half * (g.j(a) + g.t(a));
            Matrix nb = half * (g.j(b) - g.t(b));
            push_check(rep, "decoupling", "[M" + q_name(a) + ",N" + q_name(b) + "]", "0",
                       commutator(ma, nb), zero4);
        }
    }
    return rep;
}

// [[a,b],c] + [[b,c],a] + [[c,a],b]; identically zero for matrices, so this
// exercises the exact arithmetic rather than the algebra.
inline Matrix jacobi_defect(const Matrix& a, const Matrix& b, const Matrix& c) {
    return commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
           commutator(commutator(c, a), b);
}

}  // namespace o4tensor
