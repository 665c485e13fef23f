#ifndef TORICSTAB_FANS_HPP
#define TORICSTAB_FANS_HPP

#include "toricstab/arrangements.hpp"

#include <span>
#include <vector>

namespace toric {

/// A simplicial cone recorded by its generator indices. Index k stands
/// for the lattice vector e_k in Z^{n-1}, under the convention
/// e_0 = -(e_1 + ... + e_{n-1}); the empty set is the zero cone.
struct Cone {
    IndexSet generators;

    bool operator==(const Cone& o) const = default;
};

/// A set of cones indexed by generator sets, closed under taking subsets
/// and containing the zero cone. Canonical order: (cardinality, lex).
class Fan {
public:
    Fan() = default;
    /// Validates: range, the zero cone, face-closedness, no full set.
    Fan(int n, std::vector<Cone> cones);

    int n() const { return n_; }
    const std::vector<Cone>& cones() const { return cones_; }
    bool contains(const IndexSet& generators) const;

    bool operator==(const Fan& o) const = default;

private:
    int n_ = 0;
    std::vector<Cone> cones_;            // sorted by (size, lex)
    std::vector<std::uint32_t> masks_;   // sorted generator masks
};

/// The fan whose cones are indexed by the faces of K. K must be a
/// genuine complex and must not contain the full index set.
Fan build_fan(const SimplicialComplex& K);

/// All one-generator cones, in index order.
std::vector<Cone> rays(const Fan& F);

/// Every subset of [n] spanning no cone of F while all of its proper
/// subsets do; found by scanning all 2^n generator subsets.
std::vector<IndexSet> primitive_sets(const Fan& F);

/// Minimum cardinality of a primitive set; throws ValidationError when
/// no primitive set exists.
int r_sigma(const Fan& F);

enum class Containment { interior, boundary, outside };

/// Classifies an integer vector u of length n-1 against the cone spanned
/// by {e_k : k in c.generators}. The rational linear system is solved by
/// exact elimination; a coefficient of exactly zero means boundary.
Containment cone_contains(std::span<const long long> u, const Cone& c, int n);

/// The face indexing the torus-orbit limit of u: with v = (0, u_1, ...,
/// u_{n-1}), the set of positions where v exceeds its minimum. This is
/// the unique proper subset whose cone contains u in its relative
/// interior.
IndexSet orbit_limit(std::span<const long long> u, int n);

}  // namespace toric

#endif
