#include "cyctan/koszul.hpp"

namespace cyctan {

std::vector<Slots> wedge_basis(std::size_t p, std::size_t size) {
    std::vector<Slots> out;
    Slots current;
    // lexicographic enumeration of increasing index tuples
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (current.size() == size) {
            out.push_back(current);
            return;
        }
        for (std::size_t j = next; j < p; ++j) {
            current.push_back(static_cast<std::uint32_t>(j));
            self(self, j + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::string wedge_label(const Slots& subset) {
    if (subset.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += "^";
        s += "e" + std::to_string(subset[i] + 1);
    }
    return s;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

PermuteComparison permutation_comparison_maps(std::size_t p,
                                              const std::vector<std::size_t>& perm) {
    if (perm.size() != p) throw StructuralError("permutation length mismatch");
    std::vector<bool> seen(p, false);
    for (auto v : perm) {
        if (v >= p || seen[v]) throw StructuralError("not a permutation");
        seen[v] = true;
    }
    // inverse: original basis vector e_j maps to the permuted complex's e_{inv[j]}
    std::vector<std::size_t> inv(p);
    for (std::size_t k = 0; k < p; ++k) inv[perm[k]] = k;

    PermuteComparison out;
    out.perm = perm;
    out.det_a1 = Rational(permutation_sign(perm));

    for (std::size_t i = 0; i <= p; ++i) {
        auto basis = wedge_basis(p, i);
        std::map<Slots, std::size_t> index;
        for (std::size_t r = 0; r < basis.size(); ++r) index[basis[r]] = r;

        Matrix<Rational> T(basis.size(), basis.size(), Rational(0));
        for (std::size_t c = 0; c < basis.size(); ++c) {
            std::vector<std::uint32_t> image;
            image.reserve(i);
            for (auto j : basis[c]) image.push_back(static_cast<std::uint32_t>(inv[j]));
            // sort the image, counting transpositions
            int sign = 1;
            for (std::size_t a = 0; a < image.size(); ++a)
                for (std::size_t b = a + 1; b < image.size(); ++b)
                    if (image[a] > image[b]) {
                        std::swap(image[a], image[b]);
                        sign = -sign;
                    }
            T(index.at(image), c) = Rational(sign);
        }
        out.chain_maps.push_back(std::move(T));
    }
    return out;
}

}  // namespace cyctan
