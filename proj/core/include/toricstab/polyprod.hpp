#ifndef TORICSTAB_POLYPROD_HPP
#define TORICSTAB_POLYPROD_HPP

#include "toricstab/arrangements.hpp"

#include <optional>
#include <string>

namespace toric {

/// The coordinates at which a point of the n-fold product differs from
/// the basepoint. Everything about membership in a polyhedral product
/// with basepoint pairs depends on the support alone.
struct SupportPattern {
    int n = 0;
    IndexSet support;

    void validate() const;

    /// Bitstring of length n; character k is '1' iff k is supported.
    static SupportPattern from_bits(const std::string& bits);
    std::string bits() const;

    bool operator==(const SupportPattern& o) const = default;
};

/// Membership in the polyhedral product Z_K(X, *): the support is a face.
bool in_polyhedral_product(const SupportPattern& p, const SimplicialComplex& K);

/// Membership in the generalized wedge of type I: every member of I has
/// a coordinate outside the support.
bool in_generalized_wedge(const SupportPattern& p, const SubsetCollection& I);

struct WedgeIdentityResult {
    bool holds = true;
    std::optional<SupportPattern> first_failing;
};

/// Exhaustively compares the two membership predicates over all 2^n
/// support patterns; they agree for every collection, so a failure
/// points at a complex-construction bug.
WedgeIdentityResult wedge_identity_check(const SubsetCollection& I);

}  // namespace toric

#endif
