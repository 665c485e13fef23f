#include "toricstab/mapspace.hpp"

#include <algorithm>
#include <string>

namespace toric {

namespace {

// Dense polynomial over Q(i), ascending coefficients, no implicit lead.
struct Poly {
    std::vector<GaussianRational> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }

    void trim()
    {
        while (!c.empty() && c.back().is_zero())
            c.pop_back();
    }
};

Poly from_monic(const MonicPolynomial& p)
{
    Poly out;
    out.c = p.coeffs;
    out.c.push_back(GaussianRational(1));
    return out;
}

MonicPolynomial to_monic(Poly p)
{
    // Caller guarantees a monic leading coefficient.
    p.c.pop_back();
    return MonicPolynomial{std::move(p.c)};
}

void make_monic(Poly& p)
{
    if (p.is_zero())
        return;
    const GaussianRational lead = p.c.back();
    if (lead == GaussianRational(1))
        return;
    const GaussianRational inv = lead.inverse();
    for (GaussianRational& a : p.c)
        a *= inv;
}

Poly mul(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, GaussianRational{});
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

// Remainder of a by a monic divisor.
Poly rem(Poly a, const Poly& divisor)
{
    const int dd = divisor.degree();
    while (a.degree() >= dd) {
        const GaussianRational factor = a.c.back();
        const int shift = a.degree() - dd;
        for (int i = 0; i <= dd; ++i)
            a.c[shift + i] -= factor * divisor.c[i];
        a.trim();
    }
    return a;
}

Poly gcd2(Poly a, Poly b)
{
    make_monic(a);
    make_monic(b);
    while (!b.is_zero()) {
        Poly r = rem(std::move(a), b);
        make_monic(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

GaussianRational MonicPolynomial::eval(const GaussianRational& z) const
{
    GaussianRational acc(1);  // leading coefficient
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

RootMultiset::RootMultiset(std::vector<Entry> entries) : entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.point < b.point; });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].multiplicity < 1)
            throw ValidationError("root multiplicity must be positive");
        if (i > 0 && entries_[i].point == entries_[i - 1].point)
            throw ValidationError("repeated point in root multiset");
    }
}

int RootMultiset::degree() const
{
    int d = 0;
    for (const Entry& e : entries_)
        d += e.multiplicity;
    return d;
}

bool RootMultiset::contains_point(const GaussianRational& p) const
{
    for (const Entry& e : entries_)
        if (e.point == p)
            return true;
    return false;
}

RootMultiset RootMultiset::with_point(const GaussianRational& p) const
{
    std::vector<Entry> next = entries_;
    next.push_back(Entry{p, 1});
    return RootMultiset(std::move(next));
}

MapTuple MapTuple::from_roots(std::vector<RootMultiset> components)
{
    if (components.empty())
        throw ValidationError("a map tuple needs at least one component");
    MapTuple t;
    t.form_ = TupleForm::roots;
    t.degree_ = components.front().degree();
    for (const RootMultiset& r : components)
        if (r.degree() != t.degree_)
            throw ValidationError("components must share one degree");
    t.roots_ = std::move(components);
    return t;
}

MapTuple MapTuple::from_coeffs(std::vector<MonicPolynomial> components)
{
    if (components.empty())
        throw ValidationError("a map tuple needs at least one component");
    MapTuple t;
    t.form_ = TupleForm::coeffs;
    t.degree_ = components.front().degree();
    for (const MonicPolynomial& p : components)
        if (p.degree() != t.degree_)
            throw ValidationError("components must share one degree");
    t.coeffs_ = std::move(components);
    return t;
}

int MapTuple::n() const
{
    return static_cast<int>(form_ == TupleForm::roots ? roots_.size() : coeffs_.size());
}

const std::vector<RootMultiset>& MapTuple::roots() const
{
    if (form_ != TupleForm::roots)
        throw ValidationError("tuple is not in root form");
    return roots_;
}

const std::vector<MonicPolynomial>& MapTuple::coeffs() const
{
    if (form_ != TupleForm::coeffs)
        throw ValidationError("tuple is not in coefficient form");
    return coeffs_;
}

MonicPolynomial expand_roots(const RootMultiset& roots)
{
    Poly acc;
    acc.c = {GaussianRational(1)};
    for (const RootMultiset::Entry& e : roots.entries()) {
        Poly factor;
        factor.c = {-e.point, GaussianRational(1)};
        for (int i = 0; i < e.multiplicity; ++i)
            acc = mul(acc, factor);
    }
    return to_monic(std::move(acc));
}

MonicPolynomial poly_gcd(std::span<const MonicPolynomial> polys)
{
    if (polys.empty())
        throw ValidationError("gcd of an empty list");
    Poly g = from_monic(polys.front());
    for (std::size_t i = 1; i < polys.size() && g.degree() > 0; ++i)
        g = gcd2(std::move(g), from_monic(polys[i]));
    if (g.degree() < 1) {
        Poly one;
        one.c = {GaussianRational(1)};
        g = std::move(one);
    }
    return to_monic(std::move(g));
}

bool member_by_roots(const MapTuple& F, const SubsetCollection& I)
{
    I.validate();
    const std::vector<RootMultiset>& comps = F.roots();
    if (static_cast<int>(comps.size()) != I.n)
        throw ValidationError("tuple length does not match the collection");
    for (const IndexSet& member : I.members) {
        const int first = member.elements().front();
        for (const RootMultiset::Entry& e : comps[first].entries()) {
            bool common = true;
            for (int j : member.elements()) {
                if (j != first && !comps[j].contains_point(e.point)) {
                    common = false;
                    break;
                }
            }
            if (common)
                return false;
        }
    }
    return true;
}

bool member_by_gcd(const MapTuple& F, const SubsetCollection& I)
{
    I.validate();
    std::vector<MonicPolynomial> polys;
    if (F.form() == TupleForm::coeffs) {
        polys = F.coeffs();
    } else {
        for (const RootMultiset& r : F.roots())
            polys.push_back(expand_roots(r));
    }
    if (static_cast<int>(polys.size()) != I.n)
        throw ValidationError("tuple length does not match the collection");
    for (const IndexSet& member : I.members) {
        std::vector<MonicPolynomial> selected;
        for (int j : member.elements())
            selected.push_back(polys[j]);
        if (poly_gcd(selected).degree() > 0)
            return false;
    }
    return true;
}

bool in_discriminant(const MapTuple& F, const SubsetCollection& I)
{
    if (F.form() == TupleForm::roots)
        return !member_by_roots(F, I);
    return !member_by_gcd(F, I);
}

std::vector<GaussianRational> default_shift_points(int n, int d)
{
    std::vector<GaussianRational> pts;
    pts.reserve(n);
    const Rational re = Rational(2 * d + 1, 2);
    for (int k = 0; k < n; ++k)
        pts.emplace_back(re, Rational(k));
    return pts;
}

MapTuple stabilize(const MapTuple& F,
                   const std::optional<std::vector<GaussianRational>>& shift_points)
{
    const std::vector<RootMultiset>& comps = F.roots();
    const int d = F.degree();
    const int n = F.n();

    for (const RootMultiset& r : comps)
        for (const RootMultiset::Entry& e : r.entries())
            if (e.point.re >= d)
                throw ValidationError("root with real part >= degree; not a point of the strip");

    std::vector<GaussianRational> shifts =
        shift_points ? *shift_points : default_shift_points(n, d);
    if (static_cast<int>(shifts.size()) != n)
        throw ValidationError("need one shift point per component");
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (!(shifts[i].re > d) || !(shifts[i].re < d + 1))
            throw ValidationError("shift point real part must lie strictly in (d, d+1)");
        for (std::size_t j = i + 1; j < shifts.size(); ++j)
            if (shifts[i] == shifts[j])
                throw ValidationError("shift points must be pairwise distinct");
    }

    std::vector<RootMultiset> next;
    next.reserve(comps.size());
    for (int k = 0; k < n; ++k)
        next.push_back(comps[k].with_point(shifts[k]));
    return MapTuple::from_roots(std::move(next));
}

int interpolation_rank(std::span<const GaussianRational> points, int d)
{
    const int k = static_cast<int>(points.size());
    if (k < 1 || d < 1)
        throw ValidationError("interpolation rank needs k >= 1 and d >= 1");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (points[i] == points[j])
                throw ValidationError("duplicate interpolation point");

    std::vector<std::vector<GaussianRational>> m(k, std::vector<GaussianRational>(d));
    for (int i = 0; i < k; ++i) {
        GaussianRational power(1);
        for (int j = 0; j < d; ++j) {
            m[i][j] = power;
            power *= points[i];
        }
    }

    int rank = 0;
    for (int col = 0; col < d && rank < k; ++col) {
        int pivot = -1;
        for (int i = rank; i < k; ++i) {
            if (!m[i][col].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(m[pivot], m[rank]);
        for (int i = rank + 1; i < k; ++i) {
            if (m[i][col].is_zero())
                continue;
            const GaussianRational f = m[i][col] / m[rank][col];
            for (int j = col; j < d; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace toric
