#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sympl/rational.hpp"
#include "sympl/weight.hpp"
#include "sympl/weyl.hpp"

namespace sympl {

enum class Realization { TypeA, CartanGeneric };

/// An open face of the dominant chamber (or of a parabolic cone), recorded as
/// the set of simple-root pairings that vanish on it.
struct FaceDescriptor {
    enum class Ambient { DominantChamber, ParabolicCone };

    std::vector<int> vanishing;    // sorted 0-based indices of simple roots with zeta . alpha_j^vee = 0
    Ambient ambient = Ambient::DominantChamber;
    std::vector<int> cone_levi;    // S_P of the ambient cone when ambient == ParabolicCone

    bool operator==(const FaceDescriptor& o) const {
        return vanishing == o.vanishing && ambient == o.ambient && cone_levi == o.cone_levi;
    }
};

/// A connected component of the Dynkin subdiagram on a vanishing set. For
/// type A a component with k nodes is the A_k diagram, i.e. an SU(k+1) factor
/// of the commutator of the face stabiliser.
struct LeviComponent {
    std::vector<int> nodes;    // sorted 0-based simple-root indices

    int a_rank() const { return static_cast<int>(nodes.size()); }
    int su_rank() const { return static_cast<int>(nodes.size()) + 1; }
};

/// Root system with exact rational arithmetic, realized either in trace-zero
/// coordinates (type A, conventions of the SL(r+1) matrix model) or in
/// fundamental-weight coordinates from an abstract Cartan matrix.
///
/// Cartan convention: cartan[i][j] = <alpha_i, alpha_j^vee>.
class RootSystem {
public:
    static constexpr std::uint64_t kDefaultWeylBound = 10080;

    static RootSystem type_a(int rank);
    static RootSystem from_cartan(const std::vector<std::vector<int>>& cartan,
                                  std::uint64_t weyl_bound = kDefaultWeylBound);

    Realization realization() const { return realization_; }
    int rank() const { return rank_; }
    /// Length of weight coordinate vectors (rank+1 for type A, rank otherwise).
    int dim() const { return realization_ == Realization::TypeA ? rank_ + 1 : rank_; }

    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const Weight& simple_root(int j) const { return simple_roots_.at(j); }
    const Weight& fundamental_weight(int j) const { return fundamental_weights_.at(j); }

    /// alpha_j^vee = 2 alpha_j / (alpha_j . alpha_j). In the generic realization
    /// the coroot is returned in the dual (coordinate-extraction) basis.
    Weight coroot(int j) const;

    /// zeta(alpha_j^vee), exact.
    QQ coroot_pairing(const Weight& zeta, int j) const;

    bool is_dominant(const Weight& zeta) const;
    Weight simple_reflect(const Weight& zeta, int j) const;

    ZZ weyl_order() const { return weyl_order_; }

    WeylElement identity() const;
    WeylElement simple_reflection(int j) const;

    /// Unique dominant representative of the W-orbit together with a witness w
    /// satisfying w . zeta = zeta_plus exactly.
    std::pair<Weight, WeylElement> dominant_representative(const Weight& zeta) const;

    /// Open face of the dominant chamber containing a dominant point (exact).
    FaceDescriptor face_of_dominant(const Weight& dominant) const;
    /// Float variant: pairings within eps of zero define the vanishing set.
    /// Throws if some pairing is below -eps.
    FaceDescriptor face_of_dominant(const std::vector<double>& zeta, double eps) const;

    /// Connected components of the Dynkin subdiagram on the vanishing set.
    std::vector<LeviComponent> levi_type_of_face(const FaceDescriptor& face) const;

    /// Explicit element list of the subgroup of W generated by the reflections
    /// in S_P (indices 0-based). Throws if the enumeration exceeds the bound.
    ParabolicData weyl_subgroup(const std::vector<int>& levi,
                                std::uint64_t bound = kDefaultWeylBound) const;

    /// A positive root recorded by its coefficients over the simple roots and
    /// the coefficients of its coroot over the simple coroots.
    struct PositiveRoot {
        std::vector<int> root_coeff;
        std::vector<int> coroot_coeff;
    };
    const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }

    /// A dominant representative whose open face is exactly the given vanishing
    /// set: the sum of the fundamental weights off the set.
    Weight face_representative(const std::vector<int>& vanishing) const;

private:
    RootSystem() = default;
    void enumerate_positive_roots(std::uint64_t bound);

    Realization realization_ = Realization::TypeA;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> fundamental_weights_;
    std::vector<PositiveRoot> positive_roots_;
    ZZ weyl_order_ = 1;
};

}  // namespace sympl
