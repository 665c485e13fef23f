#ifndef TORICSTAB_ARRANGEMENTS_HPP
#define TORICSTAB_ARRANGEMENTS_HPP

#include "toricstab/errors.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace toric {

/// A strictly increasing list of non-negative indices; the generating
/// subsets, complex faces and cone generator sets are all of this shape.
class IndexSet {
public:
    IndexSet() = default;

    /// Sorts the input; duplicates and negative entries are rejected.
    explicit IndexSet(std::vector<int> elements);

    static IndexSet from_mask(std::uint32_t mask);
    std::uint32_t mask() const;  // requires all elements < 32

    const std::vector<int>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    bool contains(int k) const;
    bool subset_of(const IndexSet& other) const;
    bool proper_subset_of(const IndexSet& other) const;
    /// All elements lie in [0, n).
    bool bounded_by(int n) const;

    bool operator==(const IndexSet& o) const = default;
    auto operator<=>(const IndexSet& o) const { return elems_ <=> o.elems_; }

private:
    std::vector<int> elems_;
};

/// A family I of subsets of [n] = {0, ..., n-1}. Members of cardinality
/// >= 2 are required in strict mode; relaxed mode admits singletons.
struct SubsetCollection {
    int n = 0;
    std::vector<IndexSet> members;
    bool strict = true;

    /// Throws ValidationError on out-of-range indices, duplicate members,
    /// or members below the cardinality floor of the active mode.
    void validate() const;

    bool operator==(const SubsetCollection& o) const = default;
};

/// A face family on [n], stored in canonical lexicographic order.
/// Construction checks only shape; downward closure is enforced where an
/// operation requires a genuine complex (see validate_complex).
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(int n, std::vector<IndexSet> faces);

    int n() const { return n_; }
    const std::vector<IndexSet>& faces() const { return faces_; }
    bool contains(const IndexSet& face) const;

    bool operator==(const SimplicialComplex& o) const = default;

private:
    int n_ = 0;
    std::vector<IndexSet> faces_;  // sorted, unique
};

/// True iff every subset of every face is itself a face.
bool is_downward_closed(const SimplicialComplex& K);

/// Throws unless K is downward closed and contains the empty face.
void validate_complex(const SimplicialComplex& K);

/// The complex of all faces containing no member of I, enumerated
/// explicitly. Limited to n <= kMaxExplicitN; use in_complex for larger n.
SimplicialComplex build_complex(const SubsetCollection& I);

inline constexpr int kMaxExplicitN = 20;

/// Lazy face-membership query, valid for any n: true iff no member of I
/// is contained in the candidate face.
bool in_complex(const SubsetCollection& I, const IndexSet& face);

/// Minimum member cardinality; throws ValidationError on empty I.
int r_min(const SubsetCollection& I);

/// The inclusion-minimal members of I; generates the same complex.
SubsetCollection minimalize(const SubsetCollection& I);

}  // namespace toric

#endif
