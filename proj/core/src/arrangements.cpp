#include "toricstab/arrangements.hpp"

#include <algorithm>
#include <string>

namespace toric {

IndexSet::IndexSet(std::vector<int> elements) : elems_(std::move(elements))
{
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 0)
            throw ValidationError("negative index " + std::to_string(elems_[i]));
        if (i > 0 && elems_[i] == elems_[i - 1])
            throw ValidationError("duplicate index " + std::to_string(elems_[i]));
    }
}

IndexSet IndexSet::from_mask(std::uint32_t mask)
{
    IndexSet s;
    for (int k = 0; mask != 0; ++k, mask >>= 1)
        if (mask & 1u)
            s.elems_.push_back(k);
    return s;
}

std::uint32_t IndexSet::mask() const
{
    if (!elems_.empty() && elems_.back() >= 32)
        throw ValidationError("mask form needs all indices below 32");
    std::uint32_t m = 0;
    for (int k : elems_)
        m |= std::uint32_t{1} << k;
    return m;
}

bool IndexSet::contains(int k) const
{
    return std::binary_search(elems_.begin(), elems_.end(), k);
}

bool IndexSet::subset_of(const IndexSet& other) const
{
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
}

bool IndexSet::proper_subset_of(const IndexSet& other) const
{
    return size() < other.size() && subset_of(other);
}

bool IndexSet::bounded_by(int n) const
{
    return elems_.empty() || elems_.back() < n;
}

void SubsetCollection::validate() const
{
    if (n < 2)
        throw ValidationError("ambient dimension must be at least 2");
    const int min_card = strict ? 2 : 1;
    for (const IndexSet& m : members) {
        if (!m.bounded_by(n))
            throw ValidationError("member index out of range for n=" + std::to_string(n));
        if (m.size() < min_card)
            throw ValidationError("member of cardinality " + std::to_string(m.size()) +
                                  " below the floor " + std::to_string(min_card));
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j])
                throw ValidationError("duplicate member in collection");
}

SimplicialComplex::SimplicialComplex(int n, std::vector<IndexSet> faces)
    : n_(n), faces_(std::move(faces))
{
    if (n_ < 1)
        throw ValidationError("complex needs a positive index set");
    std::sort(faces_.begin(), faces_.end());
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (!faces_[i].bounded_by(n_))
            throw ValidationError("face index out of range for n=" + std::to_string(n_));
        if (i > 0 && faces_[i] == faces_[i - 1])
            throw ValidationError("duplicate face in complex");
    }
}

bool SimplicialComplex::contains(const IndexSet& face) const
{
    return std::binary_search(faces_.begin(), faces_.end(), face);
}

bool is_downward_closed(const SimplicialComplex& K)
{
    for (const IndexSet& face : K.faces()) {
        // Removing one element at a time suffices by induction.
        for (int k : face.elements()) {
            std::vector<int> sub;
            sub.reserve(face.size() - 1);
            for (int j : face.elements())
                if (j != k)
                    sub.push_back(j);
            if (!K.contains(IndexSet(std::move(sub))))
                return false;
        }
    }
    return true;
}

void validate_complex(const SimplicialComplex& K)
{
    if (!K.contains(IndexSet{}))
        throw ValidationError("complex is missing the empty face");
    if (!is_downward_closed(K))
        throw ValidationError("complex is not downward closed");
}

bool in_complex(const SubsetCollection& I, const IndexSet& face)
{
    for (const IndexSet& member : I.members)
        if (member.subset_of(face))
            return false;
    return true;
}

SimplicialComplex build_complex(const SubsetCollection& I)
{
    I.validate();
    if (I.n > kMaxExplicitN)
        throw ValidationError("explicit face enumeration is capped at n=" +
                              std::to_string(kMaxExplicitN) +
                              "; use in_complex for membership queries");

    std::vector<std::uint32_t> member_masks;
    member_masks.reserve(I.members.size());
    for (const IndexSet& m : I.members)
        member_masks.push_back(m.mask());

    std::vector<IndexSet> faces;
    const std::uint32_t limit = std::uint32_t{1} << I.n;
    for (std::uint32_t face = 0; face < limit; ++face) {
        bool excluded = false;
        for (std::uint32_t m : member_masks) {
            if ((m & face) == m) {
                excluded = true;
                break;
            }
        }
        if (!excluded)
            faces.push_back(IndexSet::from_mask(face));
    }
    return SimplicialComplex(I.n, std::move(faces));
}

int r_min(const SubsetCollection& I)
{
    I.validate();
    if (I.members.empty())
        throw ValidationError("r_min is undefined for an empty collection");
    int best = I.members.front().size();
    for (const IndexSet& m : I.members)
        best = std::min(best, m.size());
    return best;
}

SubsetCollection minimalize(const SubsetCollection& I)
{
    I.validate();
    SubsetCollection out;
    out.n = I.n;
    out.strict = I.strict;
    for (const IndexSet& m : I.members) {
        bool minimal = true;
        for (const IndexSet& other : I.members) {
            if (other.proper_subset_of(m)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.members.push_back(m);
    }
    return out;
}

}  // namespace toric
