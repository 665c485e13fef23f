#ifndef TORICSTAB_STABILITY_HPP
#define TORICSTAB_STABILITY_HPP

#include "toricstab/arrangements.hpp"

#include <optional>
#include <vector>

namespace toric {

struct StabilityParams {
    int n = 2;      // ambient dimension
    int r_min = 2;  // minimum member cardinality of the generating family
    int d = 1;      // map degree

    void validate() const;
};

/// Stability dimension of the degree-d inclusion: (2*r_min - 3)*d - 2.
long long stability_dim(int r_min, int d);
long long stability_dim(const StabilityParams& p);

/// Sharpened stability dimension in the projective case:
/// (2n - 3)*(d + 1) - 1.
long long stability_dim_projective(int d, int n);

/// Rank of the affine bundle over the k-point stratum of the resolved
/// discriminant: 2n(d - k) + k - 1. Requires 1 <= k <= d.
long long bundle_rank(int n, int d, int k);

/// Dimension of the space of k labelled configurations:
/// 2(1 + n - r_min)k.
long long configuration_dim(int n, int r_min, int k);

/// Dimension of the extra stratum added by truncation; always equals
/// bundle_rank(n, d, d) + configuration_dim(n, r_min, d) + 1.
long long top_stratum_dim(int n, int r_min, int d);

/// Largest s for which the truncation column is forced to vanish:
/// the dimension bound 2nd + d - s > top_stratum_dim holds exactly for
/// s <= (2*r_min - 2)*d - 1. The ambient n cancels out of the closed
/// form; it is kept in the signature for the identity checks.
long long vanishing_threshold(int n, int r_min, int d);

/// Minimum band value s - k reachable from the unknown column through
/// exactly t differential hops of pairwise distinct lengths:
/// (2*r_min - 2)*d - (d + 1) + t. Empty (nullopt) when no t distinct
/// positive lengths fit, i.e. when t(t+1)/2 > d + 1.
std::optional<long long> hop_band_min(int r_min, int d, int t);

/// Connectivity of the target mapping space: 2*(r_min(I) - 2).
long long connectivity(const SubsetCollection& I);

enum class ScanMode { general, projective };

/// Where the unknown column starts in general mode. `truncation` uses the
/// extra-stratum dimension bound (the default, and the one all closed-form
/// comparisons are made against); `configuration` uses the sharper bound
/// coming from the configuration-space dimension one column further out,
/// which reproduces the projective-style dimension with n replaced by
/// r_min. Projective mode ignores this.
enum class SeedRule { truncation, configuration };

struct ScanWindow {
    int k_lo = 0;
    int k_hi = 0;
    int s_hi = 0;

    static ScanWindow standard(const StabilityParams& p);
    ScanWindow doubled() const;
};

enum class CellState : unsigned char { zero, known, seed, contaminated };

/// Finite (k, s) state table for one scan. Cells outside the window are
/// implicitly zero; the window self-check guards against that mattering.
class SpectralGrid {
public:
    SpectralGrid() = default;
    explicit SpectralGrid(const ScanWindow& w);

    const ScanWindow& window() const { return window_; }
    bool in_window(int k, int s) const;
    CellState state(int k, int s) const;
    void set_state(int k, int s, CellState st);

private:
    ScanWindow window_;
    std::vector<CellState> cells_;
};

struct BandScanReport {
    StabilityParams params;
    ScanMode mode = ScanMode::general;
    SpectralGrid grid;
    /// min(s - k) over the cells the result is read from: contaminated
    /// cells in general mode, the unknown column in projective mode.
    std::optional<long long> min_band;
    long long value = 0;        // min_band - 2 (general) or min_band - 1 (projective)
    long long closed_form = 0;  // stability_dim / stability_dim_projective
    bool agree = false;
    /// General mode also runs the variant where columns k < 0 may be
    /// contaminated; a disagreement with min_band is surfaced here.
    std::optional<long long> min_band_unclamped;
    bool clamp_sensitive = false;
};

/// One scan on one window; no window self-check, no error on an empty
/// result (min_band stays empty and value is meaningless then).
BandScanReport band_scan_report(const StabilityParams& p, ScanMode mode,
                                const ScanWindow& window,
                                SeedRule rule = SeedRule::truncation);

/// The scan result with the window self-check: the scan runs on the
/// given window and on its double, and a WindowError is thrown if the
/// two disagree or either finds nothing.
long long band_scan(const StabilityParams& p, ScanMode mode, const ScanWindow& window,
                    SeedRule rule = SeedRule::truncation);
long long band_scan(const StabilityParams& p, ScanMode mode);

}  // namespace toric

#endif
