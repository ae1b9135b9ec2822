#pragma once

#include "o4tensor/clebsch_gordan.hpp"
#include "o4tensor/matrix.hpp"
#include "o4tensor/recurrence.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace o4tensor {

// Thrown when the probed matrix elements of an operator cannot all be
// written as coefficient * one common reduced value: either two slots demand
// different values, or a slot holds a nonzero element where the coefficient
// vanishes.
struct OracleInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when no probed slot carries any information (every coupling
// coefficient in the block is zero), so no reduced value is defined.
struct UndefinedExtraction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A j1 x j2 product representation.  Coupling it yields one multiplet for
// each l from |j1 - j2| to j1 + j2.
struct IrrepSpec {
    HalfInt j1, j2;

    HalfInt l_min() const { return j1 < j2 ? j2 - j1 : j1 - j2; }
    HalfInt l_max() const { return j1 + j2; }
    bool contains_l(HalfInt l) const {
        return l_min() <= l && l <= l_max() && (l - l_min()).is_integer();
    }
    std::string str() const { return "(" + j1.str() + "," + j2.str() + ")"; }
};

inline std::vector<HalfInt> l_values(const IrrepSpec& s) {
    std::vector<HalfInt> out;
    for (HalfInt l = s.l_min(); l <= s.l_max(); l += HalfInt(1)) out.push_back(l);
    return out;
}

// Single-spin building blocks in the |j, m> basis ordered by decreasing m.
struct Su2Generators {
    Matrix jp, jm, jz;  // J_+, J_-, J_z
};

inline Su2Generators build_su2_generators(HalfInt j) {
    if (j.twice() < 0) throw std::invalid_argument("build_su2_generators: negative j");
    const size_t dim = (size_t)j.twice() + 1;
    auto idx = [&](HalfInt m) { return (size_t)((j.twice() - m.twice()) / 2); };

    Su2Generators g{Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim)};
    for (HalfInt m = -j; m <= j; m += HalfInt(1)) {
        g.jz.at(idx(m), idx(m)) = ExactComplex(ExactSum::from_rational(m.to_rational()));
        if (m < j) {
            // <m+1| J_+ |m> = sqrt((j - m)(j + m + 1))
            Rational r = (j.to_rational() - m.to_rational()) * (j.to_rational() + m.to_rational() + 1);
            g.jp.at(idx(m + 1), idx(m)) = ExactComplex(sqrt_of_rational(r));
        }
    }
    g.jm = g.jp.transpose();  // real entries, so the adjoint is the transpose
    return g;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ra = 0; ra < a.rows(); ++ra)
        for (size_t ca = 0; ca < a.cols(); ++ca) {
            const ExactComplex& av = a.at(ra, ca);
            if (av.is_zero()) continue;
            for (size_t rb = 0; rb < b.rows(); ++rb)
                for (size_t cb = 0; cb < b.cols(); ++cb) {
                    const ExactComplex& bv = b.at(rb, cb);
                    if (bv.is_zero()) continue;
                    m.at(ra * b.rows() + rb, ca * b.cols() + cb) = av * bv;
                }
        }
    return m;
}

// The coupled |l, m> basis of a product representation, with the orthogonal
// change-of-basis matrix built column by column from coupling coefficients.
// Coupled labels run over l ascending, m descending within each multiplet;
// product labels run over m1 descending, then m2 descending, matching the
// Kronecker-product convention for the single-spin blocks above.
class CoupledBasis {
  public:
    explicit CoupledBasis(IrrepSpec spec) : spec_(spec) {
        for (HalfInt l : l_values(spec_))
            for (HalfInt m = l; -l <= m; m -= HalfInt(1)) {
                index_[{l.twice(), m.twice()}] = labels_.size();
                labels_.push_back(State{l, m});
            }

        const size_t dim2 = (size_t)spec_.j2.twice() + 1;
        u_ = Matrix(labels_.size(), labels_.size());
        auto idx1 = [&](HalfInt m1) { return (size_t)((spec_.j1.twice() - m1.twice()) / 2); };
        auto idx2 = [&](HalfInt m2) { return (size_t)((spec_.j2.twice() - m2.twice()) / 2); };
        for (size_t c = 0; c < labels_.size(); ++c) {
            const State& s = labels_[c];
            for (HalfInt m1 = -spec_.j1; m1 <= spec_.j1; m1 += HalfInt(1)) {
                HalfInt m2 = s.m - m1;
                if (!valid_jm(spec_.j2, m2)) continue;
                ExactSum v = cg(spec_.j1, m1, spec_.j2, m2, s.l, s.m);
                if (v.is_zero()) continue;
                u_.at(idx1(m1) * dim2 + idx2(m2), c) = ExactComplex(std::move(v));
            }
        }
    }

    const IrrepSpec& spec() const { return spec_; }
    size_t dim() const { return labels_.size(); }
    const std::vector<State>& labels() const { return labels_; }
    const Matrix& u() const { return u_; }

    size_t index_of(const State& s) const {
        auto it = index_.find({s.l.twice(), s.m.twice()});
        if (it == index_.end())
            throw std::out_of_range("CoupledBasis: no state " + s.str() + " in " + spec_.str());
        return it->second;
    }

    // U^T O U; U is real and orthogonal, so this is the basis change.
    Matrix to_coupled(const Matrix& product_op) const { return u_.transpose() * product_op * u_; }

  private:
    IrrepSpec spec_;
    std::vector<State> labels_;
    std::map<std::pair<long, long>, size_t> index_;
    Matrix u_;
};

// Spherical components of a vector operator: V_{+1} = -(V_x + i V_y)/sqrt(2),
// V_0 = V_z, V_{-1} = (V_x - i V_y)/sqrt(2).
struct SphericalOperator {
    Matrix comp_m1, comp_0, comp_p1;

    const Matrix& q(int qq) const {
        if (qq < -1 || qq > 1) throw std::invalid_argument("SphericalOperator: q must be -1, 0, +1");
        return qq == 0 ? comp_0 : (qq > 0 ? comp_p1 : comp_m1);
    }
};

// The coupled-basis matrices of the two natural vector operators of a
// product representation: the total angular momentum J = J(1) + J(2) and the
// difference B = J(1) - J(2).  J is block diagonal over the multiplets; B
// connects neighbouring multiplets and is the operator whose reduced
// elements the recurrence machinery is checked against.
struct CoupledVectorOps {
    CoupledBasis basis;
    SphericalOperator j;
    SphericalOperator b;
};

inline CoupledVectorOps build_vector_operators(const IrrepSpec& spec) {
    Su2Generators g1 = build_su2_generators(spec.j1);
    Su2Generators g2 = build_su2_generators(spec.j2);
    const Matrix i1 = Matrix::identity((size_t)spec.j1.twice() + 1);
    const Matrix i2 = Matrix::identity((size_t)spec.j2.twice() + 1);

    auto spherical = [](Matrix plus, Matrix minus, Matrix z) {
        const ExactSum r = sqrt_of_rational(Rational(1, 2));
        // The ladder operators are V_+- = V_x +- i V_y themselves.
        return SphericalOperator{minus * r, std::move(z), -(plus * r)};
    };

    CoupledBasis basis(spec);
    auto build = [&](int sign2) {
        const ExactComplex s2 = ExactComplex(ExactSum::from_int(sign2));
        Matrix plus = kron(g1.jp, i2) + s2 * kron(i1, g2.jp);
        Matrix minus = kron(g1.jm, i2) + s2 * kron(i1, g2.jm);
        Matrix z = kron(g1.jz, i2) + s2 * kron(i1, g2.jz);
        SphericalOperator sph = spherical(std::move(plus), std::move(minus), std::move(z));
        return SphericalOperator{basis.to_coupled(sph.comp_m1), basis.to_coupled(sph.comp_0),
                                 basis.to_coupled(sph.comp_p1)};
    };

    SphericalOperator j = build(+1);
    SphericalOperator b = build(-1);
    return CoupledVectorOps{std::move(basis), std::move(j), std::move(b)};
}

// Reads the reduced element R(l_bra, l_ket) off explicit matrix elements,
// under the given factorization convention:
//
//   Standard:  <l' m'| V_q |l m> = cg(l, m, 1, q, l', m') * R(l', l)
//   BraFirst:  <l' m'| V_q |l m> = cg(l', m', 1, q, l, m' + q) * R(l', l)
//
// Every (m, q) slot whose coupling coefficient is nonzero yields a
// candidate; all candidates must agree exactly or OracleInconsistency is
// thrown.  A nonzero element sitting where the coefficient vanishes is also
// an inconsistency: no value of R can reproduce it.  If no slot carries
// information the extraction is undefined and UndefinedExtraction is thrown.
inline ExactSum extract_reduced(const CoupledBasis& basis, const SphericalOperator& op,
                                HalfInt l_bra, HalfInt l_ket, Convention conv) {
    for (HalfInt l : {l_bra, l_ket})
        if (!basis.spec().contains_l(l))
            throw std::out_of_range("extract_reduced: no multiplet l = " + l.str() + " in " +
                                    basis.spec().str());

    ExactSum value;
    bool have = false;
    for (int q : {-1, 0, +1}) {
        for (HalfInt m_ket = -l_ket; m_ket <= l_ket; m_ket += HalfInt(1)) {
            HalfInt m_bra = m_ket + q;
            if (!valid_jm(l_bra, m_bra)) continue;
            const ExactComplex& el =
                op.q(q).at(basis.index_of({l_bra, m_bra}), basis.index_of({l_ket, m_ket}));
            ExactSum denom =
                conv == Convention::Standard
                    ? cg_or_zero(l_ket, m_ket, HalfInt(1), HalfInt(q), l_bra, m_bra)
                    : cg_or_zero(l_bra, m_bra, HalfInt(1), HalfInt(q), l_ket, m_bra + q);
            if (denom.is_zero()) {
                if (!el.is_zero())
                    throw OracleInconsistency(
                        "extract_reduced: nonzero element over a vanishing coefficient at "
                        "<" + l_bra.str() + "," + m_bra.str() + "| q=" + std::to_string(q) +
                        " |" + l_ket.str() + "," + m_ket.str() + ">");
                continue;
            }
            if (!el.im.is_zero())
                throw OracleInconsistency("extract_reduced: matrix element has an imaginary part");
            ExactSum cand = el.re.divided_by(*denom.single_term());
            if (!have) {
                value = std::move(cand);
                have = true;
            } else if (value != cand) {
                throw OracleInconsistency(
                    "extract_reduced: slots disagree for R(" + l_bra.str() + "," + l_ket.str() +
                    "): " + value.str() + " vs " + cand.str() + " at q=" + std::to_string(q) +
                    ", m_ket=" + m_ket.str());
            }
        }
    }
    if (!have)
        throw UndefinedExtraction("extract_reduced: no informative slot for R(" + l_bra.str() +
                                  "," + l_ket.str() + ")");
    return value;
}

}  // namespace o4tensor
