#pragma once

#include <limroot/quaternion.hpp>
#include <limroot/root_system.hpp>

#include <vector>

namespace limroot {

using QMat = std::vector<std::vector<Quat>>;

// Brute-force ground truth: explicit matrix realization of a classical real
// form with theta(X) = -X* and a realized as real diagonal matrices in a
// split basis (split Gram matrices avoid the 1/sqrt(2) basis change).
struct MatrixAlgebraModel {
    RealFormDescriptor desc;
    long n = 0;              // matrix size over the base field
    Field field = Field::R;
    long fdim = 1;           // real dimension of the base field
    std::size_t ambient_dim = 0;  // coordinate space of root functionals
    std::size_t rank = 0;         // dim a
    std::vector<Vec> slot_weight;  // per diagonal slot, the a*-weight in Q^ambient

    enum class FormKind { None, Hermitian, Bilinear };
    FormKind form = FormKind::None;
    QMat gram;          // S with X*S+SX=0 (Hermitian) or X^t S + S X = 0 (Bilinear)
    int trace_components = 0;  // leading quaternion components of tr X forced to 0

    Mat constraints;  // R-linear defining equations on flattened entries

    long real_dim = 0;
    std::vector<QMat> basis;    // real basis of the algebra
    std::vector<QMat> a_basis;  // real basis of a (diagonal)
};

long default_oracle_bound();  // LIMROOT_ORACLE_BOUND, default 8

MatrixAlgebraModel realize(const RealFormDescriptor& desc, long bound = default_oracle_bound());

WeightedRootSystem restricted_roots(const MatrixAlgebraModel& model);

long m_dimension(const MatrixAlgebraModel& model);

// dim of the (-1)-eigenspace-of-theta part of the centralizer of a
// (X* = X solutions); equals rank exactly when a is maximal abelian in p.
long split_part_dimension(const MatrixAlgebraModel& model);

// dim of the centralizer of a in g (= dim m + rank); exposed for the
// eigenspace-accounting invariant.
long centralizer_dimension(const MatrixAlgebraModel& model);

// True when [X,Y] lies in the rational span of model.basis.
bool bracket_in_span(const MatrixAlgebraModel& model, const QMat& X, const QMat& Y);

QMat bracket(const QMat& X, const QMat& Y);

}  // namespace limroot
