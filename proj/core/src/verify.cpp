#include "toricstab/verify.hpp"

#include "toricstab/fans.hpp"
#include "toricstab/polyprod.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace toric {

namespace {

constexpr std::size_t kMaxReportedFailures = 25;

void record_failure(SuiteResult& suite, const std::string& message)
{
    if (suite.failures.size() < kMaxReportedFailures)
        suite.failures.push_back(message);
    else if (suite.failures.size() == kMaxReportedFailures)
        suite.failures.push_back("... further failures suppressed");
}

std::string collection_brief(const SubsetCollection& I)
{
    std::ostringstream os;
    os << "n=" << I.n << " I=[";
    for (std::size_t i = 0; i < I.members.size(); ++i) {
        if (i)
            os << ",";
        os << "[";
        const auto& e = I.members[i].elements();
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j)
                os << ",";
            os << e[j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

long long Rng::uniform(long long lo, long long hi)
{
    if (lo > hi)
        throw ValidationError("empty range for uniform draw");
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0)
        return static_cast<long long>(eng_());
    const std::uint64_t reject_from =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= reject_from);
    return lo + static_cast<long long>(x % range);
}

SubsetCollection random_collection(Rng& rng, int n_lo, int n_hi, bool strict)
{
    SubsetCollection I;
    I.n = static_cast<int>(rng.uniform(n_lo, n_hi));
    I.strict = strict;
    const int min_card = strict ? 2 : 1;
    const int want = static_cast<int>(rng.uniform(1, std::min(10, 2 * I.n)));
    std::vector<std::uint32_t> masks;
    const std::uint32_t limit = std::uint32_t{1} << I.n;
    for (int attempts = 0; static_cast<int>(masks.size()) < want && attempts < 200;
         ++attempts) {
        const auto mask = static_cast<std::uint32_t>(rng.uniform(1, limit - 1));
        if (std::popcount(mask) < min_card)
            continue;
        if (std::find(masks.begin(), masks.end(), mask) == masks.end())
            masks.push_back(mask);
    }
    if (masks.empty())
        masks.push_back(limit - 1);  // the full set always qualifies
    for (std::uint32_t m : masks)
        I.members.push_back(IndexSet::from_mask(m));
    I.validate();
    return I;
}

std::vector<SubsetCollection> antichain_collections(int n)
{
    if (n < 2 || n > 6)
        throw ValidationError("antichain enumeration expects 2 <= n <= 6");
    std::vector<std::uint32_t> ground;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t m = 1; m < limit; ++m)
        if (std::popcount(m) >= 2)
            ground.push_back(m);

    std::vector<SubsetCollection> out;
    std::vector<std::uint32_t> chosen;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t i = from; i < ground.size(); ++i) {
            const std::uint32_t candidate = ground[i];
            bool comparable = false;
            for (std::uint32_t m : chosen) {
                if ((m & candidate) == m || (m & candidate) == candidate) {
                    comparable = true;
                    break;
                }
            }
            if (comparable)
                continue;
            chosen.push_back(candidate);
            SubsetCollection I;
            I.n = n;
            I.strict = true;
            for (std::uint32_t m : chosen)
                I.members.push_back(IndexSet::from_mask(m));
            out.push_back(std::move(I));
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

namespace {

GaussianRational small_gaussian(Rng& rng)
{
    const Rational re(rng.uniform(-8, 8), rng.uniform(1, 3));
    const Rational im(rng.uniform(-8, 8), rng.uniform(1, 3));
    return {re, im};
}

}  // namespace

RootMultiset random_multiset(Rng& rng, int d, const std::optional<GaussianRational>& forced)
{
    if (d < 0)
        throw ValidationError("negative degree");
    std::vector<RootMultiset::Entry> entries;
    int remaining = d;
    if (forced && remaining > 0) {
        const int mult = static_cast<int>(rng.uniform(1, remaining));
        entries.push_back({*forced, mult});
        remaining -= mult;
    }
    auto taken = [&entries](const GaussianRational& p) {
        for (const auto& e : entries)
            if (e.point == p)
                return true;
        return false;
    };
    while (remaining > 0) {
        GaussianRational p = small_gaussian(rng);
        if (taken(p))
            continue;
        const int mult = static_cast<int>(rng.uniform(1, remaining));
        entries.push_back({std::move(p), mult});
        remaining -= mult;
    }
    return RootMultiset(std::move(entries));
}

MapTuple random_root_tuple(Rng& rng, int n, int d)
{
    std::vector<RootMultiset> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        comps.push_back(random_multiset(rng, d));
    return MapTuple::from_roots(std::move(comps));
}

MapTuple random_mapspace_member(Rng& rng, const SubsetCollection& I, int d)
{
    I.validate();
    auto strip_point = [&rng, d]() {
        // real part in [-4, d - 1/2], safely left of the wall at d
        const Rational re(rng.uniform(-8, 2 * d - 1), 2);
        const Rational im(rng.uniform(-6, 6), 2);
        return GaussianRational(re, im);
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<RootMultiset> comps;
        bool ok = true;
        for (int k = 0; k < I.n && ok; ++k) {
            std::vector<RootMultiset::Entry> entries;
            int remaining = d;
            int guard = 0;
            while (remaining > 0) {
                if (++guard > 200) {
                    ok = false;
                    break;
                }
                GaussianRational p = strip_point();
                bool dup = false;
                for (const auto& e : entries)
                    if (e.point == p)
                        dup = true;
                if (dup)
                    continue;
                const int mult = static_cast<int>(rng.uniform(1, remaining));
                entries.push_back({std::move(p), mult});
                remaining -= mult;
            }
            if (ok)
                comps.push_back(RootMultiset(std::move(entries)));
        }
        if (!ok)
            continue;
        MapTuple F = MapTuple::from_roots(std::move(comps));
        if (member_by_roots(F, I))
            return F;
    }
    // Disjoint supports per component always qualify: give component k
    // points with imaginary part congruent to k modulo n.
    std::vector<RootMultiset> comps;
    for (int k = 0; k < I.n; ++k) {
        std::vector<RootMultiset::Entry> entries;
        int remaining = d;
        int slot = 0;
        while (remaining > 0) {
            const Rational re(rng.uniform(-8, 2 * d - 1), 2);
            const GaussianRational p(re, Rational(k + I.n * (++slot)));
            bool dup = false;
            for (const auto& e : entries)
                if (e.point == p)
                    dup = true;
            if (dup)
                continue;
            const int mult = static_cast<int>(rng.uniform(1, remaining));
            entries.push_back({p, mult});
            remaining -= mult;
        }
        comps.push_back(RootMultiset(std::move(entries)));
    }
    return MapTuple::from_roots(std::move(comps));
}

std::optional<long long> hop_band_min_bruteforce(int r_min, int d, int t)
{
    if (r_min < 2 || d < 1 || t < 1)
        throw ValidationError("hop band needs r_min >= 2, d >= 1, t >= 1");
    const long long wall = (2LL * r_min - 2) * d;
    std::optional<long long> best;

    // Strictly increasing positive lengths summing to `target`.
    auto descend = [&](auto&& self, int prev, int remaining_hops, int remaining_sum,
                       auto&& on_complete) -> void {
        if (remaining_hops == 0) {
            if (remaining_sum == 0)
                on_complete();
            return;
        }
        for (int next = prev + 1; next <= remaining_sum; ++next)
            self(self, next, remaining_hops - 1, remaining_sum - next, on_complete);
    };

    for (int k1 = 0; k1 <= d; ++k1) {
        const int target = d + 1 - k1;
        bool reachable = false;
        descend(descend, 0, t, target, [&reachable]() { reachable = true; });
        if (!reachable)
            continue;
        // Minimal admissible s1 for this column comes from the band
        // inequality with the full displacement target - t.
        const long long s1 = wall - (target - t);
        const long long band = s1 - k1;
        if (!best || band < *best)
            best = band;
    }
    return best;
}

void VerifyLimits::validate() const
{
    if (n_max < 2)
        throw ValidationError("n_max must be at least 2");
    if (d_max < 1)
        throw ValidationError("d_max must be at least 1");
    if (random_collections < 0 || random_tuples < 0 || random_point_sets < 0)
        throw ValidationError("case counts must be non-negative");
}

namespace {

// Shared case source for the collection-based suites: every antichain up
// to n = 5 plus the seeded random stream.
void for_each_collection(const VerifyLimits& limits, std::uint64_t salt,
                         const std::function<void(const SubsetCollection&)>& body)
{
    for (int n = 2; n <= std::min(5, limits.n_max); ++n)
        for (const SubsetCollection& I : antichain_collections(n))
            body(I);
    Rng rng(limits.seed + salt);
    for (int i = 0; i < limits.random_collections; ++i)
        body(random_collection(rng, 2, std::min(8, limits.n_max)));
}

}  // namespace

SuiteResult suite_rsigma_vs_rmin(const VerifyLimits& limits)
{
    limits.validate();
    SuiteResult suite{"rsigma-rmin-agreement", 0, {}};
    for_each_collection(limits, 0x5157, [&suite](const SubsetCollection& I) {
        ++suite.cases;
        const int expected = r_min(I);
        const int got = r_sigma(build_fan(build_complex(I)));
        if (got != expected)
            record_failure(suite, collection_brief(I) + " r_sigma=" + std::to_string(got) +
                                      " r_min=" + std::to_string(expected));
    });
    return suite;
}

SuiteResult suite_wedge_identity(const VerifyLimits& limits)
{
    limits.validate();
    SuiteResult suite{"wedge-product-identity", 0, {}};
    for_each_collection(limits, 0x57ED, [&suite](const SubsetCollection& I) {
        ++suite.cases;
        const WedgeIdentityResult result = wedge_identity_check(I);
        if (!result.holds)
            record_failure(suite, collection_brief(I) + " first failing pattern " +
                                      result.first_failing->bits());
    });
    return suite;
}

SuiteResult suite_band_scan(const VerifyLimits& limits,
                            const std::function<long long(int, int)>& expected_general,
                            const std::function<long long(int, int)>& expected_projective)
{
    limits.validate();
    SuiteResult suite{"band-scan-closed-form", 0, {}};
    const int r_hi = std::min(8, limits.n_max);
    const int d_hi = std::min(30, limits.d_max);
    for (int r = 2; r <= r_hi; ++r) {
        for (int d = 1; d <= d_hi; ++d) {
            ++suite.cases;
            try {
                const long long got =
                    band_scan(StabilityParams{r, r, d}, ScanMode::general);
                const long long want = expected_general(r, d);
                if (got != want)
                    record_failure(suite, "general r_min=" + std::to_string(r) +
                                              " d=" + std::to_string(d) + " scan=" +
                                              std::to_string(got) + " expected=" +
                                              std::to_string(want));
            } catch (const WindowError& e) {
                record_failure(suite, "general r_min=" + std::to_string(r) +
                                          " d=" + std::to_string(d) + " " + e.what());
            }
        }
    }
    for (int n = 2; n <= r_hi; ++n) {
        for (int d = 1; d <= d_hi; ++d) {
            ++suite.cases;
            try {
                const long long got =
                    band_scan(StabilityParams{n, n, d}, ScanMode::projective);
                const long long want = expected_projective(d, n);
                if (got != want)
                    record_failure(suite, "projective n=" + std::to_string(n) +
                                              " d=" + std::to_string(d) + " scan=" +
                                              std::to_string(got) + " expected=" +
                                              std::to_string(want));
            } catch (const WindowError& e) {
                record_failure(suite, "projective n=" + std::to_string(n) +
                                          " d=" + std::to_string(d) + " " + e.what());
            }
        }
    }
    return suite;
}

SuiteResult suite_band_scan(const VerifyLimits& limits)
{
    return suite_band_scan(
        limits, [](int r, int d) { return stability_dim(r, d); },
        [](int d, int n) { return stability_dim_projective(d, n); });
}

SuiteResult suite_vandermonde(const VerifyLimits& limits)
{
    limits.validate();
    SuiteResult suite{"vandermonde-rank", 0, {}};
    Rng rng(limits.seed + 0xFA4D);
    for (int i = 0; i < limits.random_point_sets; ++i) {
        ++suite.cases;
        const int k = static_cast<int>(rng.uniform(1, 8));
        const int d = static_cast<int>(rng.uniform(1, 8));
        std::vector<GaussianRational> points;
        while (static_cast<int>(points.size()) < k) {
            GaussianRational p = small_gaussian(rng);
            if (std::find(points.begin(), points.end(), p) == points.end())
                points.push_back(std::move(p));
        }
        const int rank = interpolation_rank(points, d);
        if (rank != std::min(k, d))
            record_failure(suite, "k=" + std::to_string(k) + " d=" + std::to_string(d) +
                                      " rank=" + std::to_string(rank));
    }
    return suite;
}

SuiteResult suite_stabilization(const VerifyLimits& limits)
{
    limits.validate();
    SuiteResult suite{"stabilization-closure", 0, {}};
    Rng rng(limits.seed + 0x57AB);
    for (int i = 0; i < limits.random_tuples; ++i) {
        ++suite.cases;
        const SubsetCollection I = random_collection(rng, 2, std::min(5, limits.n_max));
        const int d = static_cast<int>(rng.uniform(1, std::min(6, limits.d_max)));
        const MapTuple F = random_mapspace_member(rng, I, d);
        const MapTuple S = stabilize(F);
        bool ok = S.degree() == d + 1 && member_by_roots(S, I);
        for (int k = 0; k < S.n() && ok; ++k) {
            // Exactly one fresh point per component, strictly inside the
            // new vertical strip.
            int fresh = 0;
            for (const auto& e : S.roots()[k].entries()) {
                if (F.roots()[k].contains_point(e.point))
                    continue;
                ++fresh;
                if (e.multiplicity != 1 || !(e.point.re > d) || !(e.point.re < d + 1))
                    ok = false;
            }
            if (fresh != 1)
                ok = false;
        }
        if (!ok)
            record_failure(suite, collection_brief(I) + " d=" + std::to_string(d) +
                                      " stabilized tuple left the space");
    }
    return suite;
}

SuiteResult suite_orbit_partition(const VerifyLimits& limits)
{
    limits.validate();
    SuiteResult suite{"orbit-limit-partition", 0, {}};
    constexpr int kBox = 4;
    for (int n = 2; n <= std::min(4, limits.n_max); ++n) {
        std::vector<long long> u(static_cast<std::size_t>(n - 1), -kBox);
        while (true) {
            ++suite.cases;
            const IndexSet expected = orbit_limit(u, n);
            int interior_hits = 0;
            IndexSet found;
            const std::uint32_t limit_mask = std::uint32_t{1} << n;
            for (std::uint32_t mask = 0; mask + 1 < limit_mask; ++mask) {
                const Cone c{IndexSet::from_mask(mask)};
                if (cone_contains(u, c, n) == Containment::interior) {
                    ++interior_hits;
                    found = c.generators;
                }
            }
            if (interior_hits != 1 || !(found == expected)) {
                std::ostringstream os;
                os << "n=" << n << " u=(";
                for (std::size_t j = 0; j < u.size(); ++j)
                    os << (j ? "," : "") << u[j];
                os << ") interior_cones=" << interior_hits;
                record_failure(suite, os.str());
            }
            std::size_t pos = 0;
            while (pos < u.size() && u[pos] == kBox)
                u[pos++] = -kBox;
            if (pos == u.size())
                break;
            ++u[pos];
        }
    }
    return suite;
}

std::vector<SuiteResult> run_all_suites(const VerifyLimits& limits)
{
    limits.validate();
    std::vector<SuiteResult> suites;
    suites.push_back(suite_band_scan(limits));
    suites.push_back(suite_orbit_partition(limits));
    suites.push_back(suite_rsigma_vs_rmin(limits));
    suites.push_back(suite_stabilization(limits));
    suites.push_back(suite_vandermonde(limits));
    suites.push_back(suite_wedge_identity(limits));
    std::sort(suites.begin(), suites.end(),
              [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
    return suites;
}

}  // namespace toric
