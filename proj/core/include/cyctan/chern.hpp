#pragma once

#include <vector>

#include "cyctan/koszul.hpp"

namespace cyctan {

/// Entrywise absolute differential of a matrix over the coefficient ring.
template <class C>
Matrix<DiffForm<C>> differential_matrix(const Matrix<C>& m) {
    return map_cells(m, [](const C& c) { return d(c); });
}

/// The composite dM_1 . dM_2 ... dM_n of form-valued matrices, entry
/// products wedged left to right. For a Koszul complex the end ranks are 1
/// and the result is the single F_p -> F_0 (x) Omega^p component.
template <class C>
DiffForm<C> compose_differentials(const std::vector<Matrix<DiffForm<C>>>& mats) {
    if (mats.empty()) throw StructuralError("compose_differentials: empty chain");
    Matrix<DiffForm<C>> acc = mats.front();
    for (std::size_t i = 1; i < mats.size(); ++i) acc = acc * mats[i];
    if (acc.rows() != 1 || acc.cols() != 1)
        throw StructuralError("differential composite is not 1x1; not a Koszul-shaped chain");
    return acc(0, 0);
}

/// Local fundamental class of a Koszul complex: the (1/p!)-scaled p-fold
/// composite of the differentiated matrices, kept as the single p-form in
/// the F_p -> F_0 (x) Omega^p slot.
template <class C>
struct FundClass {
    KoszulComplex<C> complex;
    DiffForm<C> component;
};

template <class C>
FundClass<C> fundamental_class(const KoszulComplex<C>& k) {
    std::vector<Matrix<DiffForm<C>>> dmats;
    dmats.reserve(k.mats.size());
    for (const auto& A : k.mats) dmats.push_back(differential_matrix(A));
    DiffForm<C> composite = compose_differentials(dmats);
    Rational scale = Rational(1) / rational_factorial(static_cast<unsigned>(k.length()));
    return FundClass<C>{k, composite.scale(scale)};
}

/// Closed form of the same class: d(h_1) ^ ... ^ d(h_p).
template <class C>
DiffForm<C> closed_form_class(const KoszulComplex<C>& k) {
    DiffForm<C> acc = d(k.sequence.front());
    for (std::size_t i = 1; i < k.length(); ++i) acc = acc * d(k.sequence[i]);
    return acc;
}

/// Generalized-fraction data for the truncated class: the eps = 0 sequence
/// as denominators and the contracted (p-1)-form as numerator.
struct NewtonRep {
    std::vector<Poly> denominators;
    DiffForm<Frac> numerator;
};

NewtonRep truncate(const FundClass<DualFrac>& fc);
NewtonRep truncate(const FundClass<DualPoly>& fc);

}  // namespace cyctan
