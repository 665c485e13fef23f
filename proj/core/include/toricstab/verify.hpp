#ifndef TORICSTAB_VERIFY_HPP
#define TORICSTAB_VERIFY_HPP

#include "toricstab/arrangements.hpp"
#include "toricstab/mapspace.hpp"
#include "toricstab/stability.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace toric {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Deterministic RNG with portable bounded draws, so a seed pins the
/// same cases on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long long uniform(long long lo, long long hi);
    bool chance(int num, int den) { return uniform(1, den) <= num; }

private:
    std::mt19937_64 eng_;
};

// ---- generators ----------------------------------------------------------

/// A random valid collection with ambient dimension in [n_lo, n_hi].
SubsetCollection random_collection(Rng& rng, int n_lo, int n_hi, bool strict = true);

/// Every nonempty family of pairwise-incomparable subsets of [n] with
/// cardinality >= 2 (the inclusion-minimal normal forms of strict
/// collections). Exhaustive; intended for n <= 5.
std::vector<SubsetCollection> antichain_collections(int n);

/// A degree-d multiset of small Gaussian rationals; when `forced` is
/// given it occurs with positive multiplicity.
RootMultiset random_multiset(Rng& rng, int d,
                             const std::optional<GaussianRational>& forced = {});

/// An n-component degree-d root tuple of small random points.
MapTuple random_root_tuple(Rng& rng, int n, int d);

/// A random member of the degree-d map space for I whose roots all have
/// real part < d (the half-plane representatives the degree-raising map
/// acts on).
MapTuple random_mapspace_member(Rng& rng, const SubsetCollection& I, int d);

// ---- brute-force oracles -------------------------------------------------

/// Honest enumeration behind hop_band_min: scans every start column
/// 0 <= k <= d and every strictly increasing tuple of t hop lengths
/// reaching the unknown column, minimizing s - k.
std::optional<long long> hop_band_min_bruteforce(int r_min, int d, int t);

// ---- suites ---------------------------------------------------------------

struct VerifyLimits {
    int n_max = 5;
    int d_max = 10;
    std::uint64_t seed = kDefaultSeed;
    int random_collections = 10000;
    int random_tuples = 1000;
    int random_point_sets = 500;

    void validate() const;
};

struct SuiteResult {
    std::string name;
    long long cases = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

SuiteResult suite_rsigma_vs_rmin(const VerifyLimits& limits);
SuiteResult suite_wedge_identity(const VerifyLimits& limits);
SuiteResult suite_vandermonde(const VerifyLimits& limits);
SuiteResult suite_stabilization(const VerifyLimits& limits);
SuiteResult suite_orbit_partition(const VerifyLimits& limits);

/// Compares both scan modes against expectation functions; the defaults
/// are the closed forms, injectable so the failure path stays testable.
SuiteResult suite_band_scan(const VerifyLimits& limits,
                            const std::function<long long(int, int)>& expected_general,
                            const std::function<long long(int, int)>& expected_projective);
SuiteResult suite_band_scan(const VerifyLimits& limits);

/// All suites, ordered by name.
std::vector<SuiteResult> run_all_suites(const VerifyLimits& limits);

}  // namespace toric

#endif
