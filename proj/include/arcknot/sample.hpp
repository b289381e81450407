#pragma once

#include "arcknot/diagram.hpp"
#include "arcknot/trace.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace arcknot {

/// Integer directions with components in [-height, height], drawn from a
/// seeded mt19937_64. Zero vectors and directions on the trace set are
/// redrawn. Identical seeds give identical sequences on every platform.
std::vector<Direction> sample_directions(const TraceSet& trace, std::size_t count, std::uint64_t seed,
                                         long height = 1000);

struct SampleReport {
    std::size_t samples = 0;
    std::size_t circle_count = 0;
    std::size_t cone_count = 0;
    /// m^2 - m + 2 for m great circles.
    std::size_t bound = 0;
    /// Canonical code per sampled region, keyed by fingerprint.
    std::map<RegionFingerprint, std::vector<CanonicalCode>> codes_by_region;
    /// Sorted distinct codes over all samples.
    std::vector<CanonicalCode> distinct_codes;
    /// Every region produced a single code.
    bool stable = true;

    std::string to_string() const;
};

SampleReport sample_report(const ArcAnalysis& analysis, std::size_t count, std::uint64_t seed);

}  // namespace arcknot
