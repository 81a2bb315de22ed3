#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "extentlab/grid.hpp"
#include "extentlab/types.hpp"

namespace extentlab {

// Metadata for a simulated ensemble over a prediction grid. Each replicate is
// one full simulation of days t_first..t_last (1-based year indices into the
// season layout) at every grid point, driven by one posterior draw.
struct EnsembleInfo {
    SeasonConfig season;
    GridSpec grid;
    int t_first = 1;
    int t_last = 1;
    int n_replicates = 0;
    uint64_t seed = 0;
    std::string source_hash;        // content hash of the posterior store file
    std::string kernels;            // kernel backend active when simulating
    double t_center = 0.0;
    double decay = 0.0;
    double proj_ref_lat = 0.0;
    std::vector<int> draw_indices;  // posterior draw used by each replicate

    int n_years() const { return t_last - t_first + 1; }
    int n_days() const { return n_years() * season.season_length; }
    std::size_t n_sites() const { return grid.size(); }
    // Values per replicate: sites x years x window days.
    std::size_t chunk_elems() const { return n_sites() * static_cast<std::size_t>(n_days()); }

    void validate() const;  // throws ValidationError
};

// Read access to simulated values. load_replicate fills `out` in day-major
// order: index (t_rel * season_length + l) * n_sites + s, where t_rel counts
// years from t_first and l counts window days, both 0-based. A day's values
// for all grid points are therefore contiguous. Implementations are safe to
// call concurrently from multiple threads.
class Ensemble {
public:
    virtual ~Ensemble() = default;
    const EnsembleInfo& info() const { return info_; }
    virtual void load_replicate(int b, std::vector<float>& out) const = 0;

protected:
    Ensemble() = default;
    explicit Ensemble(EnsembleInfo info);
    EnsembleInfo info_;
};

// In-memory ensemble; chunks use the on-disk site-major layout
// (s * n_days + t_rel * season_length + l).
class MemoryEnsemble final : public Ensemble {
public:
    MemoryEnsemble(EnsembleInfo info, std::vector<std::vector<float>> site_major_chunks);
    void load_replicate(int b, std::vector<float>& out) const override;

private:
    std::vector<std::vector<float>> chunks_;
};

// Ensemble backed by a file written by EnsembleWriter; reads use positioned
// I/O on a shared descriptor, so concurrent loads never interfere.
class FileEnsemble final : public Ensemble {
public:
    explicit FileEnsemble(const std::string& path);
    ~FileEnsemble() override;
    FileEnsemble(const FileEnsemble&) = delete;
    FileEnsemble& operator=(const FileEnsemble&) = delete;

    void load_replicate(int b, std::vector<float>& out) const override;

private:
    int fd_ = -1;
    uint64_t data_start_ = 0;
};

// Writes the ensemble file: fixed-size header (magic, version, manifest),
// then one site-major float32 chunk per replicate at a precomputed offset, so
// replicates may be written from different threads in any order. finalize()
// verifies every replicate arrived and appends the end marker; the file is
// unreadable until then.
class EnsembleWriter {
public:
    EnsembleWriter(const std::string& path, EnsembleInfo info);
    ~EnsembleWriter();
    EnsembleWriter(const EnsembleWriter&) = delete;
    EnsembleWriter& operator=(const EnsembleWriter&) = delete;

    const EnsembleInfo& info() const { return info_; }
    // `site_major` must hold exactly chunk_elems() finite values.
    void write_replicate(int b, const std::vector<float>& site_major);
    void finalize();

private:
    EnsembleInfo info_;
    std::string path_;
    int fd_ = -1;
    uint64_t data_start_ = 0;
    std::vector<char> written_;
    bool finalized_ = false;
};

// Reorders one replicate between the on-disk site-major layout and the
// analysis-facing day-major layout. `in` must hold n_sites * n_days values.
void site_major_to_day_major(std::size_t n_sites, std::size_t n_days,
                             const std::vector<float>& in, std::vector<float>& out);
void day_major_to_site_major(std::size_t n_sites, std::size_t n_days,
                             const std::vector<float>& in, std::vector<float>& out);

}  // namespace extentlab
