#include "toricstab/stability.hpp"

#include <algorithm>
#include <string>

namespace toric {

void StabilityParams::validate() const
{
    if (n < 2)
        throw ValidationError("ambient dimension must be at least 2");
    if (r_min < 2 || r_min > n)
        throw ValidationError("r_min must satisfy 2 <= r_min <= n");
    if (d < 1)
        throw ValidationError("degree must be positive");
}

long long stability_dim(int r_min, int d)
{
    return (2LL * r_min - 3) * d - 2;
}

long long stability_dim(const StabilityParams& p)
{
    p.validate();
    return stability_dim(p.r_min, p.d);
}

long long stability_dim_projective(int d, int n)
{
    if (n < 2)
        throw ValidationError("ambient dimension must be at least 2");
    return (2LL * n - 3) * (d + 1) - 1;
}

long long bundle_rank(int n, int d, int k)
{
    if (k < 1 || k > d)
        throw ValidationError("bundle rank needs 1 <= k <= d");
    return 2LL * n * (d - k) + k - 1;
}

long long configuration_dim(int n, int r_min, int k)
{
    if (k < 1)
        throw ValidationError("configuration dimension needs k >= 1");
    return 2LL * (1 + n - r_min) * k;
}

long long top_stratum_dim(int n, int r_min, int d)
{
    if (d < 1)
        throw ValidationError("degree must be positive");
    return 2LL * n * d + 3LL * d - 2LL * r_min * d;
}

long long vanishing_threshold(int n, int r_min, int d)
{
    (void)n;
    if (d < 1)
        throw ValidationError("degree must be positive");
    return (2LL * r_min - 2) * d - 1;
}

std::optional<long long> hop_band_min(int r_min, int d, int t)
{
    if (r_min < 2 || d < 1 || t < 1)
        throw ValidationError("hop band needs r_min >= 2, d >= 1, t >= 1");
    // t distinct positive lengths need sum at least t(t+1)/2, and the
    // total displacement from a column k >= 0 to column d+1 is at most d+1.
    if (static_cast<long long>(t) * (t + 1) / 2 > d + 1)
        return std::nullopt;
    return (2LL * r_min - 2) * d - (d + 1) + t;
}

long long connectivity(const SubsetCollection& I)
{
    if (!I.strict)
        throw ValidationError("connectivity requires a strict collection");
    return 2LL * (r_min(I) - 2);
}

ScanWindow ScanWindow::standard(const StabilityParams& p)
{
    return ScanWindow{-5, p.d + 3, 6 * p.n * p.d};
}

ScanWindow ScanWindow::doubled() const
{
    // Contains the original window and at least doubles each extent.
    const int width = k_hi - k_lo + 1;
    return ScanWindow{k_lo - width, k_hi + width, 2 * s_hi};
}

SpectralGrid::SpectralGrid(const ScanWindow& w) : window_(w)
{
    if (w.k_lo > w.k_hi || w.s_hi < 0)
        throw ValidationError("degenerate scan window");
    cells_.assign(static_cast<std::size_t>(w.k_hi - w.k_lo + 1) *
                      static_cast<std::size_t>(w.s_hi + 1),
                  CellState::zero);
}

bool SpectralGrid::in_window(int k, int s) const
{
    return k >= window_.k_lo && k <= window_.k_hi && s >= 0 && s <= window_.s_hi;
}

CellState SpectralGrid::state(int k, int s) const
{
    return cells_[static_cast<std::size_t>(k - window_.k_lo) *
                      static_cast<std::size_t>(window_.s_hi + 1) +
                  static_cast<std::size_t>(s)];
}

void SpectralGrid::set_state(int k, int s, CellState st)
{
    cells_[static_cast<std::size_t>(k - window_.k_lo) *
               static_cast<std::size_t>(window_.s_hi + 1) +
           static_cast<std::size_t>(s)] = st;
}

namespace {

// Backward closure: a cell becomes contaminated when some differential
// d^t out of it, t >= 1, lands on a seed or contaminated cell. Targets
// sit at (k + t, s + t - 1), so scanning columns right to left settles
// every cell in one pass. Cells below `k_floor` are left untouched.
void propagate(SpectralGrid& grid, int d, int k_floor)
{
    const ScanWindow& w = grid.window();
    const int top_col = std::min(w.k_hi, d);
    for (int k = top_col; k >= k_floor; --k) {
        const int t_max = d + 1 - k;  // columns past d+1 are zero
        for (int s = 0; s <= w.s_hi; ++s) {
            if (grid.state(k, s) != CellState::known)
                continue;
            for (int t = 1; t <= t_max; ++t) {
                const int tk = k + t;
                const int ts = s + t - 1;
                if (ts > w.s_hi || tk > w.k_hi)
                    break;
                const CellState target = grid.state(tk, ts);
                if (target == CellState::seed || target == CellState::contaminated) {
                    grid.set_state(k, s, CellState::contaminated);
                    break;
                }
            }
        }
    }
}

std::optional<long long> min_band_over(const SpectralGrid& grid, CellState wanted,
                                       int k_floor)
{
    const ScanWindow& w = grid.window();
    std::optional<long long> best;
    for (int k = std::max(w.k_lo, k_floor); k <= w.k_hi; ++k) {
        for (int s = 0; s <= w.s_hi; ++s) {
            if (grid.state(k, s) != wanted)
                continue;
            const long long band = static_cast<long long>(s) - k;
            if (!best || band < *best)
                best = band;
            break;  // within a column, s - k grows with s
        }
    }
    return best;
}

long long seed_floor_for(const StabilityParams& p, ScanMode mode, SeedRule rule)
{
    if (mode == ScanMode::projective)
        return (2LL * p.n - 2) * (p.d + 1);  // dimension bound on the extra column
    if (rule == SeedRule::configuration)
        return (2LL * p.r_min - 2) * (p.d + 1);
    return (2LL * p.r_min - 2) * p.d;  // complement of the forced-zero range
}

SpectralGrid initial_grid(const StabilityParams& p, ScanMode mode, const ScanWindow& w,
                          SeedRule rule)
{
    SpectralGrid grid(w);
    const int d = p.d;
    const long long seed_floor = seed_floor_for(p, mode, rule);
    for (int k = std::max(w.k_lo, 0); k <= std::min(w.k_hi, d + 1); ++k) {
        for (int s = 0; s <= w.s_hi; ++s) {
            if (k == d + 1)
                grid.set_state(k, s, s >= seed_floor ? CellState::seed : CellState::zero);
            else
                grid.set_state(k, s, CellState::known);
        }
    }
    return grid;
}

}  // namespace

BandScanReport band_scan_report(const StabilityParams& p, ScanMode mode,
                                const ScanWindow& window, SeedRule rule)
{
    p.validate();
    BandScanReport report;
    report.params = p;
    report.mode = mode;
    if (mode == ScanMode::projective)
        report.closed_form = stability_dim_projective(p.d, p.n);
    else if (rule == SeedRule::configuration)
        report.closed_form = stability_dim_projective(p.d, p.r_min);
    else
        report.closed_form = stability_dim(p);

    report.grid = initial_grid(p, mode, window, rule);
    if (mode == ScanMode::general) {
        propagate(report.grid, p.d, std::max(window.k_lo, 0));
        report.min_band = min_band_over(report.grid, CellState::contaminated, 0);
        if (report.min_band)
            report.value = *report.min_band - 2;

        // Unclamped variant: negative columns may carry contamination too.
        SpectralGrid open_grid = initial_grid(p, mode, window, rule);
        for (int k = window.k_lo; k < 0; ++k)
            for (int s = 0; s <= window.s_hi; ++s)
                open_grid.set_state(k, s, CellState::known);
        propagate(open_grid, p.d, window.k_lo);
        report.min_band_unclamped =
            min_band_over(open_grid, CellState::contaminated, window.k_lo);
        report.clamp_sensitive = report.min_band != report.min_band_unclamped;
    } else {
        report.min_band = min_band_over(report.grid, CellState::seed, 0);
        if (report.min_band)
            report.value = *report.min_band - 1;
        report.min_band_unclamped = report.min_band;
    }
    report.agree = report.min_band && report.value == report.closed_form;
    return report;
}

long long band_scan(const StabilityParams& p, ScanMode mode, const ScanWindow& window,
                    SeedRule rule)
{
    const BandScanReport first = band_scan_report(p, mode, window, rule);
    const BandScanReport wide = band_scan_report(p, mode, window.doubled(), rule);
    if (!first.min_band || !wide.min_band)
        throw WindowError("band scan found no band; enlarge the window");
    if (first.value != wide.value)
        throw WindowError("band scan result changed under window doubling; enlarge the window");
    return first.value;
}

long long band_scan(const StabilityParams& p, ScanMode mode)
{
    return band_scan(p, mode, ScanWindow::standard(p));
}

}  // namespace toric
