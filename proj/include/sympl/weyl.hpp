#pragma once

#include <cstdint>
#include <vector>

#include "sympl/weight.hpp"

namespace sympl {

/// An element of the Weyl group.
///
/// Type A elements are coordinate permutations of R^{r+1}; elements of a
/// generic realization carry their generator word (reduced when produced by
/// the breadth-first enumeration) together with the cached integer matrix of
/// the action on fundamental-weight coordinates.
class WeylElement {
public:
    WeylElement() = default;

    static WeylElement identity_perm(int n);
    static WeylElement from_perm(std::vector<int> perm, std::vector<int> word = {});
    static WeylElement identity_matrix(int r);
    static WeylElement from_matrix(std::vector<std::vector<long long>> mat, std::vector<int> word);

    bool is_permutation() const { return !perm_.empty(); }
    bool is_identity() const;

    /// w . zeta in the realization's coordinates.
    Weight apply(const Weight& zeta) const;

    /// this o other (apply other first).
    WeylElement compose(const WeylElement& other) const;
    WeylElement inverse() const;

    bool operator==(const WeylElement& o) const;

    const std::vector<int>& word() const { return word_; }
    const std::vector<int>& perm() const { return perm_; }

    /// Stable key for hashing/deduplication during subgroup enumeration.
    std::vector<long long> key() const;

private:
    std::vector<int> perm_;                       // type A: result[perm[i]] = zeta[i]
    std::vector<std::vector<long long>> mat_;     // generic: coords' = mat * coords
    std::vector<int> word_;                       // generator indices, 0-based
};

/// Levi data of a parabolic: the subset S_P of simple roots and the explicit
/// element list of the Weyl group W^(P) it generates.
struct ParabolicData {
    std::vector<int> levi;                 // sorted 0-based indices into S
    std::vector<WeylElement> elements;     // W^(P), element 0 is the identity

    std::size_t order() const { return elements.size(); }
};

}  // namespace sympl
