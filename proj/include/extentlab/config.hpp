#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "extentlab/analytics.hpp"
#include "extentlab/generate.hpp"
#include "extentlab/gibbs.hpp"
#include "extentlab/types.hpp"

namespace extentlab {

// Named period: calendar years plus a day selector ("jja", "all", or "A-B"
// window-day indices). Resolved against the season into a PeriodSelector.
struct PeriodConfig {
    int first_year = 0;
    int last_year = 0;
    std::string days = "jja";
};

struct ReferenceConfig {
    std::string period;  // period name
    bool pooled = true;
};

struct EventConfig {
    std::string kind;
    double threshold = 0.0;
    int window = 1;
    std::string reference;  // reference name (daily / decade_avg kinds)
    std::string period;     // period name (required)
    std::string base;       // base period name (two-period kinds)
};

struct TrendConfig {
    std::string event;
    std::string region = "ALL";
};

// Everything a run needs, parsed from one INI-style file: full-line comments
// (# or ;), [section] or [type name] headers, key = value pairs. Unknown
// sections, unknown keys, duplicate keys, and malformed values are
// line-numbered ValidationErrors. Cross-references between sections are
// resolved lazily by the resolve_* helpers so each subcommand only validates
// what it uses.
struct RunConfig {
    uint64_t seed = 1;              // [run] seed (CLI --seed overrides)
    int threads = 0;                // [run] threads; 0 = all hardware threads
    std::string output_dir = "out";  // [run] output

    std::string stations_path;  // [data] stations
    std::string grid_path;      // [data] grid
    std::string sites_path;     // [data] sites (simulate only)

    SeasonConfig season;  // [season]

    PriorConfig priors;               // [priors]
    McmcConfig mcmc;                  // [mcmc] (seed comes from `seed`)
    bool export_posterior_csv = false;  // [mcmc] export_csv

    GenerateConfig generation;  // [generation] (seed/threads come from run)

    TruthConfig truth;  // [truth] (season/seed come from run)

    std::map<std::string, PeriodConfig> periods;        // [period NAME]
    std::map<std::string, ReferenceConfig> references;  // [reference NAME]
    std::map<std::string, EventConfig> events;          // [event NAME]
    std::map<std::string, TrendConfig> trends;          // [trend NAME]

    std::vector<std::string> analysis_regions = {"ALL"};  // [analysis] regions
    std::vector<std::string> analysis_events;             // default: every event
    std::vector<std::string> analysis_trends;             // default: every trend
    bool analysis_empirical = false;  // also compute station-side extent trends
};

RunConfig load_config(const std::string& path);

// Name -> concrete selector/spec, resolved against cfg.season. Throw
// ValidationError on unknown names or inconsistent definitions.
PeriodSelector resolve_period(const RunConfig& cfg, const std::string& name);
EventSpec resolve_event(const RunConfig& cfg, const std::string& name);

}  // namespace extentlab
