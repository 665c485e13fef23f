#ifndef TORICSTAB_MAPSPACE_HPP
#define TORICSTAB_MAPSPACE_HPP

#include "toricstab/arrangements.hpp"
#include "toricstab/gaussian.hpp"

#include <optional>
#include <span>
#include <vector>

namespace toric {

/// z^d + a_{d-1} z^{d-1} + ... + a_0 with exact coefficients; the leading
/// 1 is implicit and coeffs[i] multiplies z^i.
struct MonicPolynomial {
    std::vector<GaussianRational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()); }
    GaussianRational eval(const GaussianRational& z) const;

    bool operator==(const MonicPolynomial& o) const = default;
};

/// A degree-d divisor on the affine line: distinct points with positive
/// multiplicities summing to d. Entries are kept sorted by point.
class RootMultiset {
public:
    struct Entry {
        GaussianRational point;
        int multiplicity = 1;
        bool operator==(const Entry& o) const = default;
    };

    RootMultiset() = default;
    /// Sorts by point; rejects repeated points and multiplicities < 1.
    explicit RootMultiset(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    int degree() const;
    bool contains_point(const GaussianRational& p) const;
    /// Appends a point that must not already occur.
    RootMultiset with_point(const GaussianRational& p) const;

    bool operator==(const RootMultiset& o) const = default;

private:
    std::vector<Entry> entries_;
};

enum class TupleForm { roots, coeffs };

/// An n-tuple of common degree d, either as root multisets or as monic
/// coefficient lists; the two faces of the same space of based maps.
class MapTuple {
public:
    static MapTuple from_roots(std::vector<RootMultiset> components);
    static MapTuple from_coeffs(std::vector<MonicPolynomial> components);

    TupleForm form() const { return form_; }
    int n() const;
    int degree() const { return degree_; }

    const std::vector<RootMultiset>& roots() const;       // throws unless root form
    const std::vector<MonicPolynomial>& coeffs() const;   // throws unless coeff form

    bool operator==(const MapTuple& o) const = default;

private:
    MapTuple() = default;
    TupleForm form_ = TupleForm::roots;
    int degree_ = 0;
    std::vector<RootMultiset> roots_;
    std::vector<MonicPolynomial> coeffs_;
};

/// Exact expansion of prod (z - x_k)^{m_k}.
MonicPolynomial expand_roots(const RootMultiset& roots);

/// Monic gcd over Q(i) by iterated Euclidean division; the remainder is
/// renormalized to monic at every step. Throws on an empty list.
MonicPolynomial poly_gcd(std::span<const MonicPolynomial> polys);

/// Membership via divisors: for every member of I the supports of the
/// selected components have empty common intersection. Root form only.
bool member_by_roots(const MapTuple& F, const SubsetCollection& I);

/// Membership via algebra: for every member of I the gcd of the selected
/// components has degree 0. Root-form input is expanded first.
bool member_by_gcd(const MapTuple& F, const SubsetCollection& I);

/// Complement of membership.
bool in_discriminant(const MapTuple& F, const SubsetCollection& I);

/// The default degree-raising insertion points (d + 1/2) + k*i, one per
/// component: pairwise distinct with real part strictly inside (d, d+1).
std::vector<GaussianRational> default_shift_points(int n, int d);

/// Raises the degree by appending one fresh simple point per component.
/// Requires every existing root to have real part < d and every shift
/// point to be distinct with real part strictly in (d, d+1).
MapTuple stabilize(const MapTuple& F,
                   const std::optional<std::vector<GaussianRational>>& shift_points = {});

/// Rank of the k x d matrix with rows (1, x_j, ..., x_j^{d-1}), by exact
/// elimination. Duplicate points are rejected. Always equals min(k, d).
int interpolation_rank(std::span<const GaussianRational> points, int d);

}  // namespace toric

#endif
