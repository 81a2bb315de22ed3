#pragma once

#include <string>
#include <vector>

#include "extentlab/grid.hpp"
#include "extentlab/station.hpp"
#include "extentlab/types.hpp"

namespace extentlab {

// Daily station records read from one CSV file. Rows with valid dates that lie
// outside the configured window/years are skipped (and counted), because raw
// archives usually span the full calendar while the study uses a fixed warm
// season. Everything else that is wrong is a line-numbered ValidationError.
struct StationIngest {
    std::vector<StationSeries> stations;  // first-appearance order
    std::size_t n_rows = 0;               // data rows parsed
    std::size_t n_skipped = 0;            // valid rows outside the layout
};

// Header: station_id,lon,lat,elev_m,date,tmax_c. Dates are ISO-8601
// (YYYY-MM-DD); an empty tmax_c marks an observed-missing day. Errors:
// malformed rows, inconsistent station metadata, duplicate (station, date),
// out-of-bounds temperatures — all with the offending line number.
StationIngest ingest_stations(const std::string& path, const SeasonConfig& season);

// One row per observed slot (station order, then year, then day), floats at
// full precision (%.17g) so re-ingestion reproduces the series bit-exactly.
void export_stations_csv(const std::vector<StationSeries>& stations, const std::string& path);

// Bare site list (header station_id,lon,lat,elev_m) — the starting point for
// synthetic-truth simulation. Line-numbered errors; duplicate ids rejected.
std::vector<Site> ingest_sites(const std::string& path);

// Header: grid_id,lon,lat,elev_m,cell_area_km2,regions. The regions field is a
// semicolon-separated list of labels (may be empty); "ALL" is implicit and
// reserved. Line-numbered errors for malformed rows, non-positive areas,
// duplicate ids, duplicate labels within a row.
GridSpec ingest_grid(const std::string& path);

// Per-point surface (grid_id,lon,lat,value), 6 significant digits.
void write_surface_csv(const std::string& path, const GridSpec& grid,
                       const std::vector<double>& values);

// Per-replicate scalar draws (replicate,value), replicate 1-based.
void write_extent_csv(const std::string& path, const std::vector<double>& values);

// Generic table writer for summary/trend outputs: caller formats the cells.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

std::string format_sig6(double v);   // %.6g — the standard output precision
std::string format_exact(double v);  // %.17g — round-trip exact

}  // namespace extentlab
