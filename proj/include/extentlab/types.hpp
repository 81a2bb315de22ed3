#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace extentlab {

// A point with an identifier: either a station or a grid cell centre.
struct Site {
    std::string id;
    double lon = 0.0;   // degrees east
    double lat = 0.0;   // degrees north
    double elev_m = 0.0;
};

// Study layout: a fixed warm-season window of consecutive calendar days,
// repeated for n_years consecutive years. Defaults follow the reference study:
// 153 days from May 1 (through Sep 30), years 1956-2015.
struct SeasonConfig {
    int start_year = 1956;
    int n_years = 60;
    int window_start_month = 5;
    int window_start_day = 1;
    int season_length = 153;

    int end_year() const { return start_year + n_years - 1; }
    void validate() const;  // throws ValidationError
    bool operator==(const SeasonConfig&) const = default;
};

// Position of a calendar day inside the study layout.
//   t   1-based year index (1 .. n_years)
//   l   1-based day-of-window index (1 .. season_length)
//   doy common-year day-of-year used by the seasonal harmonic; leap days never
//       shift it because the window is anchored to a fixed month/day.
struct DayIndex {
    int t = 0;
    int l = 0;
    int doy = 0;
};

struct CalendarDate {
    int year = 0;
    int month = 0;
    int day = 0;
    bool operator==(const CalendarDate&) const = default;
};

// Day-of-year of (month, day) in a non-leap year: May 1 -> 121.
int common_year_doy(int month, int day);

// Maps a calendar date to its window position. Throws ValidationError when the
// date is not a valid calendar date or lies outside the configured window/years.
DayIndex day_index(const SeasonConfig& season, const CalendarDate& date);

// Inverse of day_index on its range; exact round-trip.
CalendarDate date_of(const SeasonConfig& season, int t, int l);

// Harmonic day-of-year for window day l (independent of the year).
inline int harmonic_doy(const SeasonConfig& season, int l) {
    return common_year_doy(season.window_start_month, season.window_start_day) + l - 1;
}

// A rectangular set of (year, day) slots: the cross product years x days.
// Years are 1-based t indices, days are 1-based window-day indices; both sorted
// and unique. Never empty (enforced by constructors/factories).
struct PeriodSelector {
    std::vector<int> years;
    std::vector<int> days;

    std::size_t n_slots() const { return years.size() * days.size(); }
    void validate(const SeasonConfig& season) const;  // bounds + sorted-unique + non-empty
};

// The June-August slice of the window for the given study years.
// Throws ValidationError if the window does not intersect June 1 - Aug 31.
PeriodSelector jja_selector(const SeasonConfig& season, std::vector<int> t_years);

// Consecutive t indices for calendar years [first_year, last_year].
std::vector<int> year_range(const SeasonConfig& season, int first_year, int last_year);

}  // namespace extentlab
