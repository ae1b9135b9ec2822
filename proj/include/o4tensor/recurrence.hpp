#pragma once

#include "o4tensor/clebsch_gordan.hpp"
#include "o4tensor/conventions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace o4tensor {

struct State {
    HalfInt l;
    HalfInt m;

    auto operator<=>(const State&) const = default;
    std::string str() const { return "(" + l.str() + "," + m.str() + ")"; }
};

struct StatePair {
    State bra;
    State ket;
};

// The unknown <bra_l || T || ket_l> a matrix element factors into.  Which of
// the two labels plays which role depends on the convention; the symbol just
// names the ordered pair.
struct ReducedSymbol {
    HalfInt bra_l;
    HalfInt ket_l;

    auto operator<=>(const ReducedSymbol&) const = default;
    std::string str() const { return "R(" + bra_l.str() + "," + ket_l.str() + ")"; }
};

struct RelationTerm {
    ExactSum coef;
    std::vector<ReducedSymbol> factors;  // product of reduced-element unknowns
};

// sum(terms) = rhs, where rhs is the known constant the angular momentum
// side contributes.  Canonical form: factors sorted within each term, terms
// sorted by factor list, equal factor lists merged, zero coefficients
// dropped.
struct Relation {
    std::vector<RelationTerm> terms;
    ExactSum rhs;

    bool is_trivial() const { return terms.empty() && rhs.is_zero(); }

    std::string str() const {
        std::string s;
        if (terms.empty()) {
            s = "0";
        } else {
            for (size_t i = 0; i < terms.size(); ++i) {
                if (i) s += " + ";
                s += "(" + terms[i].coef.str() + ")";
                for (const auto& sym : terms[i].factors) s += "*" + sym.str();
            }
        }
        return s + " = " + rhs.str();
    }
};

inline Relation canonicalize(std::vector<RelationTerm> terms, ExactSum rhs = ExactSum::zero()) {
    for (auto& t : terms) std::sort(t.factors.begin(), t.factors.end());
    std::sort(terms.begin(), terms.end(),
              [](const RelationTerm& a, const RelationTerm& b) { return a.factors < b.factors; });
    std::vector<RelationTerm> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().factors == t.factors)
            merged.back().coef = merged.back().coef + t.coef;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const RelationTerm& t) { return t.coef.is_zero(); });
    return Relation{std::move(merged), std::move(rhs)};
}

// One Wigner-Eckart factor: <bra| T_q |ket> = coef * R(symbol).
struct Factor {
    ExactSum coef;
    ReducedSymbol symbol;
};

// Factors a single rank-1 matrix element.
//
//   Standard:  coef = cg(ket.l, ket.m, 1, q, bra.l, bra.m)
//   BraFirst:  coef = cg(bra.l, bra.m, 1, q, ket.l, bra.m + q)
//
// Both are gated on the physical selection rule bra.m = ket.m + q.  In the
// bra-first form the coupling coefficient leads with the bra labels and its
// target m slot is bra.m + q regardless of the ket's m; when that slot
// exceeds ket.l the coefficient is an exact zero, which is what truncates
// sums in that convention.
inline Factor matrix_element_expansion(const State& bra, int q, const State& ket,
                                       Convention conv) {
    if (q < -1 || q > 1)
        throw std::invalid_argument("matrix_element_expansion: q must be -1, 0, or +1");
    require_valid_jm(bra.l, bra.m, "matrix_element_expansion(bra)");
    require_valid_jm(ket.l, ket.m, "matrix_element_expansion(ket)");
    ReducedSymbol sym{bra.l, ket.l};
    if (bra.m != ket.m + q) return {ExactSum::zero(), sym};
    ExactSum c = conv == Convention::Standard
                     ? cg_or_zero(ket.l, ket.m, HalfInt(1), HalfInt(q), bra.l, bra.m)
                     : cg_or_zero(bra.l, bra.m, HalfInt(1), HalfInt(q), ket.l, bra.m + q);
    return {c, sym};
}

// <l', m'| J_q |l, m> for the total angular momentum acting within a single
// multiplet (zero across multiplets).
inline ExactSum angular_momentum_element(const State& bra, int q, const State& ket) {
    if (q < -1 || q > 1)
        throw std::invalid_argument("angular_momentum_element: q must be -1, 0, or +1");
    require_valid_jm(bra.l, bra.m, "angular_momentum_element(bra)");
    require_valid_jm(ket.l, ket.m, "angular_momentum_element(ket)");
    if (bra.l != ket.l || bra.m != ket.m + q) return ExactSum::zero();
    Rational l = ket.l.to_rational();
    Rational m = ket.m.to_rational();
    if (q == 0) return ExactSum::from_rational(m);
    Rational rad = q > 0 ? Rational((l - m) * (l + m + 1) / 2)
                         : Rational((l + m) * (l - m + 1) / 2);
    ExactSum root = sqrt_of_rational(rad);
    return q > 0 ? -root : root;
}

// [T_{q_a}, T_{q_b}] = sum_i rhs_combo[i].second * J_{rhs_combo[i].first}
struct CommutatorSpec {
    int q_a;
    int q_b;
    std::vector<std::pair<int, ExactSum>> rhs_combo;
};

// [T_{+1}, T_{-1}] = -J_0, the instance whose matrix elements close a
// recurrence among neighbouring reduced elements.
inline CommutatorSpec lowering_pair_commutator() {
    return CommutatorSpec{+1, -1, {{0, ExactSum::from_int(-1)}}};
}

// <bra| sum_i c_i J_{q_i} |ket>, the known side of the commutator relation.
inline ExactSum rhs_matrix_element(const CommutatorSpec& spec, const StatePair& states) {
    ExactSum total = ExactSum::zero();
    for (const auto& [jq, c] : spec.rhs_combo)
        total = total + angular_momentum_element(states.bra, jq, states.ket) * c;
    return total;
}

// One product contribution to <bra|[T_a,T_b]|ket>, before any merging.
// ordering 0 is the T_{q_a} T_{q_b} product, ordering 1 the reversed one
// (already carrying the commutator's minus sign in coef).  l_mid labels the
// intermediate multiplet the completeness sum ran over.
struct ProductTerm {
    int ordering;
    HalfInt l_mid;
    ExactSum coef;
    std::vector<ReducedSymbol> factors;
};

// Expands <bra|[T_{q_a},T_{q_b}]|ket> over intermediate multiplets, keeping
// the products separate.
//
// Standard convention: both factors are factored directly, and intermediates
// whose magnetic label falls outside the multiplet are skipped (the inserted
// state does not exist).  Factors: R(bra.l, l') * R(l', ket.l).
//
// Bra-first convention: the left factor is factored directly and the right
// factor through the adjoint, so that every coupling coefficient leads with
// the bra labels of its own factor.  Factors: R(bra.l, l') * R(ket.l, l').
// Because the flipped coefficient never sees the intermediate magnetic
// label, terms survive that the standard route drops; the two conventions
// therefore produce genuinely different relations, not relabelings.
inline std::vector<ProductTerm> expand_products(const StatePair& states,
                                                const CommutatorSpec& spec, Convention conv) {
    const State& bra = states.bra;
    const State& ket = states.ket;
    require_valid_jm(bra.l, bra.m, "expand_products(bra)");
    require_valid_jm(ket.l, ket.m, "expand_products(ket)");
    std::vector<ProductTerm> out;
    for (int ord : {0, 1}) {
        const int q1 = ord == 0 ? spec.q_a : spec.q_b;  // left operator
        const int q2 = ord == 0 ? spec.q_b : spec.q_a;  // right operator, hits the ket first
        if (bra.m != ket.m + q1 + q2) continue;
        for (long t = -1; t <= 1; ++t) {
            HalfInt lmid = ket.l + HalfInt(t);
            if (lmid < HalfInt(0)) continue;
            HalfInt d = bra.l - lmid;
            if (d < HalfInt(-1) || HalfInt(1) < d) continue;
            ExactSum c1, c2;
            std::vector<ReducedSymbol> syms;
            if (conv == Convention::Standard) {
                State mid{lmid, ket.m + q2};
                if (!valid_jm(mid.l, mid.m)) continue;
                Factor left = matrix_element_expansion(bra, q1, mid, conv);
                Factor right = matrix_element_expansion(mid, q2, ket, conv);
                c1 = left.coef;
                c2 = right.coef;
                syms = {left.symbol, right.symbol};
            } else {
                c1 = cg_or_zero(bra.l, bra.m, HalfInt(1), HalfInt(q1), lmid, bra.m + q1);
                c2 = cg_or_zero(ket.l, ket.m, HalfInt(1), HalfInt(-q2), lmid, ket.m - q2);
                syms = {ReducedSymbol{bra.l, lmid}, ReducedSymbol{ket.l, lmid}};
            }
            ExactSum coef = c1 * c2;
            if (coef.is_zero()) continue;
            if (ord == 1) coef = -coef;
            out.push_back(ProductTerm{ord, lmid, std::move(coef), std::move(syms)});
        }
    }
    return out;
}

// The full recurrence: canonically merged product expansion on the left,
// the angular momentum side as the constant on the right.
inline Relation derive_relation(const CommutatorSpec& spec, const StatePair& states,
                                Convention conv) {
    std::vector<RelationTerm> raw;
    for (auto& p : expand_products(states, spec, conv))
        raw.push_back(RelationTerm{std::move(p.coef), std::move(p.factors)});
    return canonicalize(std::move(raw), rhs_matrix_element(spec, states));
}

// Identifies R(a,b) with R(b,a) by rewriting every symbol with its smaller
// label first, then re-merging.  This is the identification under which the
// two factorization conventions share a set of unknowns.
inline Relation symmetrize(const Relation& r) {
    std::vector<RelationTerm> terms = r.terms;
    for (auto& t : terms)
        for (auto& s : t.factors)
            if (s.ket_l < s.bra_l) std::swap(s.bra_l, s.ket_l);
    return canonicalize(std::move(terms), r.rhs);
}

inline std::vector<ReducedSymbol> relation_symbols(const Relation& r) {
    std::vector<ReducedSymbol> syms;
    for (const auto& t : r.terms)
        for (const auto& s : t.factors) syms.push_back(s);
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    return syms;
}

// Evaluates the term side at concrete values for every symbol it mentions.
inline ExactSum substitute(const Relation& r, const std::map<ReducedSymbol, ExactSum>& values) {
    ExactSum total = ExactSum::zero();
    for (const auto& t : r.terms) {
        ExactSum v = t.coef;
        for (const auto& s : t.factors) {
            auto it = values.find(s);
            if (it == values.end())
                throw std::out_of_range("substitute: no value bound for " + s.str());
            v = v * it->second;
        }
        total = total + v;
    }
    return total;
}

struct SubstitutionResult {
    bool passes;
    ExactSum residual;  // term side minus rhs
};

inline SubstitutionResult substitute_and_check(const Relation& r,
                                               const std::map<ReducedSymbol, ExactSum>& values) {
    ExactSum residual = substitute(r, values) - r.rhs;
    return {residual.is_zero(), std::move(residual)};
}

}  // namespace o4tensor
