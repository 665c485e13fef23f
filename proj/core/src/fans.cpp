#include "toricstab/fans.hpp"

#include "toricstab/rational.hpp"

#include <algorithm>
#include <string>

namespace toric {

namespace {

bool cone_order(const Cone& a, const Cone& b)
{
    if (a.generators.size() != b.generators.size())
        return a.generators.size() < b.generators.size();
    return a.generators < b.generators;
}

}  // namespace

Fan::Fan(int n, std::vector<Cone> cones) : n_(n), cones_(std::move(cones))
{
    if (n_ < 2)
        throw ValidationError("fan needs ambient dimension at least 2");
    std::sort(cones_.begin(), cones_.end(), cone_order);
    masks_.reserve(cones_.size());
    for (std::size_t i = 0; i < cones_.size(); ++i) {
        const IndexSet& g = cones_[i].generators;
        if (!g.bounded_by(n_))
            throw ValidationError("cone generator out of range");
        if (g.size() >= n_)
            throw ValidationError("a cone must be indexed by a proper subset");
        if (i > 0 && g == cones_[i - 1].generators)
            throw ValidationError("duplicate cone");
        masks_.push_back(g.mask());
    }
    std::sort(masks_.begin(), masks_.end());
    if (!contains(IndexSet{}))
        throw ValidationError("fan is missing the zero cone");
    for (const Cone& c : cones_) {
        for (int k : c.generators.elements()) {
            std::vector<int> sub;
            for (int j : c.generators.elements())
                if (j != k)
                    sub.push_back(j);
            if (!contains(IndexSet(std::move(sub))))
                throw ValidationError("fan is not closed under taking faces");
        }
    }
}

bool Fan::contains(const IndexSet& generators) const
{
    return std::binary_search(masks_.begin(), masks_.end(), generators.mask());
}

Fan build_fan(const SimplicialComplex& K)
{
    validate_complex(K);
    std::vector<Cone> cones;
    cones.reserve(K.faces().size());
    for (const IndexSet& face : K.faces()) {
        if (face.size() == K.n())
            throw ValidationError("no cone exists over the full index set");
        cones.push_back(Cone{face});
    }
    return Fan(K.n(), std::move(cones));
}

std::vector<Cone> rays(const Fan& F)
{
    std::vector<Cone> out;
    for (const Cone& c : F.cones())
        if (c.generators.size() == 1)
            out.push_back(c);
    return out;
}

std::vector<IndexSet> primitive_sets(const Fan& F)
{
    const int n = F.n();
    if (n > kMaxExplicitN)
        throw ValidationError("primitive set enumeration is capped at n=" +
                              std::to_string(kMaxExplicitN));
    std::vector<IndexSet> out;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        IndexSet candidate = IndexSet::from_mask(mask);
        if (F.contains(candidate))
            continue;
        bool all_proper_span = true;
        // Walk every proper non-empty subset of the candidate mask.
        for (std::uint32_t sub = (mask - 1) & mask; sub != 0 && all_proper_span;
             sub = (sub - 1) & mask) {
            if (!F.contains(IndexSet::from_mask(sub)))
                all_proper_span = false;
        }
        if (all_proper_span)
            out.push_back(std::move(candidate));
    }
    std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

int r_sigma(const Fan& F)
{
    const std::vector<IndexSet> prim = primitive_sets(F);
    if (prim.empty())
        throw ValidationError("r_sigma is undefined: the fan has no primitive set");
    return prim.front().size();
}

Containment cone_contains(std::span<const long long> u, const Cone& c, int n)
{
    if (static_cast<int>(u.size()) != n - 1)
        throw ValidationError("point must have length n-1");
    const std::vector<int>& gens = c.generators.elements();
    if (!c.generators.bounded_by(n) || static_cast<int>(gens.size()) >= n)
        throw ValidationError("cone invalid for ambient dimension");

    const int rows = n - 1;
    const int cols = static_cast<int>(gens.size());

    if (cols == 0) {
        for (long long v : u)
            if (v != 0)
                return Containment::outside;
        return Containment::interior;  // the zero cone's relative interior is {0}
    }

    // Augmented system [columns | u]; column for generator k is e_k, with
    // e_0 replaced by -(e_1 + ... + e_{n-1}).
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (int j = 0; j < cols; ++j) {
        if (gens[j] == 0) {
            for (int i = 0; i < rows; ++i)
                m[i][j] = -1;
        } else {
            m[gens[j] - 1][j] = 1;
        }
    }
    for (int i = 0; i < rows; ++i)
        m[i][cols] = u[i];

    // Forward elimination with exact pivots.
    std::vector<int> pivot_row(cols, -1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i) {
            if (m[i][col] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0)
            continue;
        std::swap(m[p], m[row]);
        for (int i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0)
                continue;
            const Rational f = m[i][col] / m[row][col];
            for (int j = col; j <= cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (int i = row; i < rows; ++i)
        if (m[i][cols] != 0)
            return Containment::outside;  // inconsistent: u is off the span
    for (int col = 0; col < cols; ++col)
        if (pivot_row[col] < 0)
            return Containment::outside;  // generators dependent; cannot happen for valid cones

    // Back substitution.
    std::vector<Rational> coeff(cols);
    for (int col = cols - 1; col >= 0; --col) {
        const int r = pivot_row[col];
        Rational rhs = m[r][cols];
        for (int j = col + 1; j < cols; ++j)
            rhs -= m[r][j] * coeff[j];
        coeff[col] = rhs / m[r][col];
    }

    bool on_boundary = false;
    for (const Rational& a : coeff) {
        if (a < 0)
            return Containment::outside;
        if (a == 0)
            on_boundary = true;
    }
    return on_boundary ? Containment::boundary : Containment::interior;
}

IndexSet orbit_limit(std::span<const long long> u, int n)
{
    if (static_cast<int>(u.size()) != n - 1)
        throw ValidationError("point must have length n-1");
    long long lowest = 0;
    for (long long v : u)
        lowest = std::min(lowest, v);
    std::vector<int> limit_face;
    if (0 > lowest)
        limit_face.push_back(0);
    for (int k = 1; k < n; ++k)
        if (u[k - 1] > lowest)
            limit_face.push_back(k);
    return IndexSet(std::move(limit_face));
}

}  // namespace toric
