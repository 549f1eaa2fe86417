#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyctan/forms.hpp"
#include "cyctan/matrix.hpp"

namespace cyctan {

/// Index subsets of {0..p-1} of the given size, lexicographically. These
/// label the wedge basis e_{j1} ^ ... ^ e_{ji} of Lambda^i(R^p).
std::vector<Slots> wedge_basis(std::size_t p, std::size_t size);

std::string wedge_label(const Slots& subset);

/// Sign of a permutation given as images (perm[k] = image of k).
int permutation_sign(const std::vector<std::size_t>& perm);

/// Koszul complex of a length-p sequence. mats[i] is the differential
/// A_{i+1}: Lambda^{i+1} -> Lambda^i; bases[i] labels Lambda^i.
///
/// Signs: position k (1-indexed) inside a degree-i wedge carries
/// (-1)^(k-1), globally flipped in the degrees with i >= 2 and
/// i == p (mod 2). That reproduces A_1 = (f_1 ... f_p), the top map
/// e_1^...^e_p -> sum_j (-1)^j f_j e_1^...^ê_j^...^e_p, and makes the
/// (1/p!)-scaled differential composite equal dh_1 ^ ... ^ dh_p on the
/// nose for every p.
template <class C>
struct KoszulComplex {
    RingPtr ring;
    std::vector<C> sequence;
    std::vector<Matrix<C>> mats;
    std::vector<std::vector<Slots>> bases;

    std::size_t length() const { return sequence.size(); }
    /// 1-based accessor: A(i) maps Lambda^i to Lambda^(i-1).
    const Matrix<C>& A(std::size_t i) const { return mats[i - 1]; }
};

inline int koszul_degree_sign(std::size_t degree, std::size_t p) {
    if (degree >= 2 && (degree % 2) == (p % 2)) return -1;
    return 1;
}

template <class C>
KoszulComplex<C> build_koszul(const RingPtr& ring, std::vector<C> sequence) {
    if (sequence.empty()) throw StructuralError("build_koszul: empty sequence");
    for (const auto& h : sequence) require_same_ring(ring, h.ring(), "build_koszul");
    const std::size_t p = sequence.size();

    KoszulComplex<C> k;
    k.ring = ring;
    k.sequence = std::move(sequence);
    k.bases.reserve(p + 1);
    for (std::size_t i = 0; i <= p; ++i) k.bases.push_back(wedge_basis(p, i));

    C zero = ring_zero<C>(ring);
    for (std::size_t i = 1; i <= p; ++i) {
        const auto& dom = k.bases[i];
        const auto& cod = k.bases[i - 1];
        std::map<Slots, std::size_t> cod_index;
        for (std::size_t r = 0; r < cod.size(); ++r) cod_index[cod[r]] = r;

        int flip = koszul_degree_sign(i, p);
        Matrix<C> A(cod.size(), dom.size(), zero);
        for (std::size_t c = 0; c < dom.size(); ++c) {
            const Slots& subset = dom[c];
            for (std::size_t pos = 0; pos < subset.size(); ++pos) {
                Slots rest = subset;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
                int sign = flip * ((pos % 2 == 0) ? 1 : -1);
                std::size_t r = cod_index.at(rest);
                C term = k.sequence[subset[pos]] * Rational(sign);
                A(r, c) = A(r, c) + term;
            }
        }
        k.mats.push_back(std::move(A));
    }
    return k;
}

/// Degree-wise comparison between the Koszul complexes of a sequence and a
/// permutation of it: chain_maps[i] is the Lambda^i comparison (from the
/// original complex to the permuted one) and det_a1 the determinant of the
/// degree-1 map, i.e. the permutation sign.
struct PermuteComparison {
    std::vector<Matrix<Rational>> chain_maps;  // indices 0..p
    Rational det_a1;
    std::vector<std::size_t> perm;  // seqB[k] == seqA[perm[k]]
};

template <class C>
std::vector<std::size_t> match_permutation(const std::vector<C>& seqA,
                                           const std::vector<C>& seqB) {
    if (seqA.size() != seqB.size())
        throw StructuralError("sequences of different length are not permutations");
    std::vector<std::size_t> perm(seqB.size());
    std::vector<bool> used(seqA.size(), false);
    for (std::size_t k = 0; k < seqB.size(); ++k) {
        bool found = false;
        for (std::size_t j = 0; j < seqA.size(); ++j) {
            if (used[j]) continue;
            if (seqA[j] == seqB[k]) {
                perm[k] = j;
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) throw StructuralError("second sequence is not a permutation of the first");
    }
    return perm;
}

PermuteComparison permutation_comparison_maps(std::size_t p,
                                              const std::vector<std::size_t>& perm);

template <class C>
PermuteComparison permute_comparison(const std::vector<C>& seqA, const std::vector<C>& seqB) {
    auto perm = match_permutation(seqA, seqB);
    return permutation_comparison_maps(seqA.size(), perm);
}

}  // namespace cyctan
