#pragma once

#include <map>
#include <string>
#include <vector>

#include "extentlab/types.hpp"

namespace extentlab {

// Prediction grid: cell centres with areas and optional named region subsets.
// The pseudo-region "ALL" always exists and covers every point. Region weights
// are cell areas normalized within the region, so mixed-resolution grids (for
// example 4x4 km cells with a 1x1 km nest) contribute by area, not by count.
struct GridSpec {
    std::vector<Site> points;
    std::vector<double> cell_area_km2;
    std::map<std::string, std::vector<std::size_t>> regions;  // name -> sorted point indices

    std::size_t size() const { return points.size(); }

    // Throws ValidationError: empty grid, size mismatches, non-positive areas,
    // duplicate ids, region index out of range, or a region named ALL.
    void validate() const;

    std::vector<std::string> region_names() const;  // "ALL" first, then sorted labels
    bool has_region(const std::string& name) const;

    // Full-length weight vector: area-normalized inside the region, zero outside;
    // sums to 1. Throws ValidationError for unknown names.
    std::vector<double> region_weights(const std::string& name) const;
};

}  // namespace extentlab
