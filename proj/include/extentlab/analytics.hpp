#pragma once

#include <map>
#include <string>
#include <vector>

#include "extentlab/ensemble.hpp"
#include "extentlab/station.hpp"
#include "extentlab/stats.hpp"
#include "extentlab/types.hpp"

namespace extentlab {

// Event families:
//   daily_over_ref[_persist]      value minus reference above c on each day of
//                                 a k-day window (k = 1, or 2..3 for persist)
//   decade_avg_over_ref           period mean minus reference above c
//   decade_diff                   primary-period mean minus base-period mean
//                                 above c (two equal-shape periods)
//   daily_increment[_persist]     same-day difference between rank-aligned
//                                 years of two equal-shape periods above c
enum class EventKind {
    daily_over_ref,
    daily_over_ref_persist,
    decade_avg_over_ref,
    decade_diff,
    daily_increment,
    daily_increment_persist
};

EventKind event_kind_from_string(const std::string& s);  // throws ValidationError
std::string to_string(EventKind kind);

struct EventSpec {
    std::string name;
    EventKind kind = EventKind::daily_over_ref;
    double threshold_c = 0.0;
    int window_days = 1;         // k; plain kinds require 1, persist kinds 2 or 3
    std::string reference;       // reference-surface name; empty when unused
    PeriodSelector period;       // primary period
    PeriodSelector period_base;  // base period (two-period kinds only)
    bool has_base = false;

    bool is_daily() const;
    bool is_decade() const;
    bool is_increment() const;
    bool uses_reference() const;
    // Internal consistency + period bounds; throws ValidationError.
    void validate(const SeasonConfig& season) const;
};

// Site-specific reference values r(s). Pooled mode holds one surface shared by
// every replicate (one row); otherwise one row per replicate. Daily-event
// kernels compare against the float32 copy so every backend takes identical
// branch decisions; period-mean events compare in double.
struct ReferenceSurface {
    std::string name;
    std::string provenance;
    bool pooled = true;
    std::size_t n_sites = 0;
    std::vector<double> values;    // row-major [row][site]
    std::vector<float> values_f32;

    std::size_t n_rows() const { return n_sites == 0 ? 0 : values.size() / n_sites; }
    const double* row(int b) const;     // row 0 when pooled
    const float* row_f32(int b) const;  // row 0 when pooled
};

// Mean over the period's (year, day) slots — pooled across replicates (the
// default, one fixed surface) or kept per replicate. Streams replicates
// through compensated per-site accumulators.
ReferenceSurface reference_mean(const Ensemble& ens, const PeriodSelector& period, bool pooled,
                                const std::string& name);

// Eq.-style primitives. `b` is the replicate, (t, l) the absolute 1-based
// year/day. These reload the replicate per call — spot checks and small
// fixtures, not the bulk path.
int event_indicator(const Ensemble& ens, const EventSpec& spec, const ReferenceSurface* ref,
                    int b, int s, int t, int l);
double event_probability(const Ensemble& ens, const EventSpec& spec, const ReferenceSurface* ref,
                         int s, int t, int l);

// Bulk evaluation over every replicate: the per-point period-averaged
// probability surface plus, for each requested region, the per-replicate
// period-averaged extents (the Monte Carlo posterior predictive sample).
struct EventResult {
    std::string event;
    std::vector<double> probability;                     // per grid point
    std::map<std::string, std::vector<double>> extents;  // region -> B values
    std::size_t n_defined_slots = 0;                     // averaging denominator
};

EventResult evaluate_event(const Ensemble& ens, const EventSpec& spec,
                           const ReferenceSurface* ref, const std::vector<std::string>& regions,
                           int n_threads);

// Per-site period mean / rank-aligned increment mean for one replicate, in
// double precision end to end (these two sides form an exact-identity pair:
// increment_mean == decade_mean(period) - decade_mean(period_base)).
std::vector<double> decade_mean(const Ensemble& ens, int b, const PeriodSelector& period);
std::vector<double> increment_mean(const Ensemble& ens, int b, const PeriodSelector& period,
                                   const PeriodSelector& period_base);

// Yearly average extents and their linear trend for a daily event. The point
// estimate fits the posterior-mean yearly extents; the uncertainty band comes
// from the per-replicate slope distribution (5%/95%).
struct TrendResult {
    std::vector<int> years;           // absolute 1-based year indices
    std::vector<double> mean_extent;  // posterior mean per year
    std::vector<double> lo, hi;       // per-year 5% / 95% quantiles
    double slope_of_means = 0.0;
    double slope_mean = 0.0;
    double slope_lo = 0.0, slope_hi = 0.0;
};

TrendResult yearly_extent_trend(const Ensemble& ens, const EventSpec& spec,
                                const ReferenceSurface* ref, const std::string& region,
                                int n_threads);

// Station-side (observed-data) analogues. The per-station reference is the
// observed mean over the period; NaN where a station has no usable day.
std::vector<double> empirical_reference(const std::vector<StationSeries>& stations,
                                        const PeriodSelector& period);

// Unweighted proportion of computable stations where the event holds at
// (t, l); a station is computable when its reference and every window day are
// observed. Daily kinds only. Throws ValidationError when no station is
// computable.
double empirical_extent(const std::vector<StationSeries>& stations, const EventSpec& spec,
                        const std::vector<double>& reference, int t, int l);

struct EmpiricalTrend {
    std::vector<int> years;
    std::vector<double> mean_extent;  // yearly average over computable slots
    double slope = 0.0;
};

// Yearly averages of the empirical extent over the event period's days
// (slots with no computable station are skipped) and their OLS trend.
EmpiricalTrend empirical_extent_trend(const std::vector<StationSeries>& stations,
                                      const EventSpec& spec,
                                      const std::vector<double>& reference);

struct PosteriorSummary {
    double mean = 0.0;
    double sd = 0.0;
    std::vector<double> probs;      // requested quantile levels
    std::vector<double> quantiles;  // matching values
    Histogram hist;
};

PosteriorSummary posterior_summary(const std::vector<double>& samples, std::vector<double> probs,
                                   int n_bins);

}  // namespace extentlab
