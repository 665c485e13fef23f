#include "toricstab/polyprod.hpp"

namespace toric {

void SupportPattern::validate() const
{
    if (n < 1)
        throw ValidationError("support pattern needs a positive ambient dimension");
    if (!support.bounded_by(n))
        throw ValidationError("support index out of range");
}

SupportPattern SupportPattern::from_bits(const std::string& bits)
{
    SupportPattern p;
    p.n = static_cast<int>(bits.size());
    std::vector<int> on;
    for (int k = 0; k < p.n; ++k) {
        if (bits[k] == '1')
            on.push_back(k);
        else if (bits[k] != '0')
            throw ValidationError("support bitstring must contain only 0 and 1");
    }
    p.support = IndexSet(std::move(on));
    p.validate();
    return p;
}

std::string SupportPattern::bits() const
{
    std::string out(static_cast<std::size_t>(n), '0');
    for (int k : support.elements())
        out[static_cast<std::size_t>(k)] = '1';
    return out;
}

bool in_polyhedral_product(const SupportPattern& p, const SimplicialComplex& K)
{
    p.validate();
    if (p.n != K.n())
        throw ValidationError("ambient dimensions do not match");
    return K.contains(p.support);
}

bool in_generalized_wedge(const SupportPattern& p, const SubsetCollection& I)
{
    p.validate();
    I.validate();
    if (p.n != I.n)
        throw ValidationError("ambient dimensions do not match");
    for (const IndexSet& member : I.members) {
        bool has_basepoint_slot = false;
        for (int j : member.elements()) {
            if (!p.support.contains(j)) {
                has_basepoint_slot = true;
                break;
            }
        }
        if (!has_basepoint_slot)
            return false;
    }
    return true;
}

WedgeIdentityResult wedge_identity_check(const SubsetCollection& I)
{
    const SimplicialComplex K = build_complex(I);
    WedgeIdentityResult result;
    const std::uint32_t limit = std::uint32_t{1} << I.n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        SupportPattern p{I.n, IndexSet::from_mask(mask)};
        if (in_polyhedral_product(p, K) != in_generalized_wedge(p, I)) {
            result.holds = false;
            result.first_failing = std::move(p);
            return result;
        }
    }
    return result;
}

}  // namespace toric
