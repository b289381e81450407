#include "arcknot/sample.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace arcknot {

std::vector<Direction> sample_directions(const TraceSet& trace, std::size_t count, std::uint64_t seed, long height) {
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(2 * height + 1);
    auto draw = [&] { return static_cast<long>(rng() % span) - height; };
    std::vector<Direction> out;
    while (out.size() < count) {
        Vec3 v{Rat(draw()), Rat(draw()), Rat(draw())};
        if (v.is_zero()) continue;
        Direction u(v);
        if (!trace_hits(trace, u).empty()) continue;
        out.push_back(u);
    }
    return out;
}

SampleReport sample_report(const ArcAnalysis& analysis, std::size_t count, std::uint64_t seed) {
    SampleReport r;
    const TraceSet& trace = analysis.trace();
    r.samples = count;
    r.circle_count = trace.circles.size();
    r.cone_count = trace.cones.size();
    r.bound = r.circle_count * r.circle_count - r.circle_count + 2;

    const auto dirs = sample_directions(trace, count, seed);
    std::vector<CanonicalCode> codes(dirs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < dirs.size(); i = next++) codes[i] = diagram_of(analysis, dirs[i]);
    };
    const std::size_t threads = std::min<std::size_t>(dirs.size(), std::max(1U, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::set<CanonicalCode> distinct;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        auto& bucket = r.codes_by_region[sign_vector(trace, dirs[i])];
        if (std::find(bucket.begin(), bucket.end(), codes[i]) == bucket.end()) bucket.push_back(codes[i]);
        distinct.insert(codes[i]);
    }
    for (auto& [fp, bucket] : r.codes_by_region) {
        if (bucket.size() > 1) r.stable = false;
        std::sort(bucket.begin(), bucket.end());
    }
    r.distinct_codes.assign(distinct.begin(), distinct.end());
    return r;
}

std::string SampleReport::to_string() const {
    std::ostringstream out;
    out << "samples: " << samples << "\n"
        << "circles: " << circle_count << "\n"
        << "cones: " << cone_count << "\n"
        << "bound: " << bound << "\n"
        << "regions: " << codes_by_region.size() << "\n"
        << "distinct codes: " << distinct_codes.size() << "\n"
        << "stable: " << (stable ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < distinct_codes.size(); ++i) {
        std::size_t regions = 0;
        for (const auto& [fp, bucket] : codes_by_region)
            if (std::find(bucket.begin(), bucket.end(), distinct_codes[i]) != bucket.end()) ++regions;
        out << "code " << i << " regions=" << regions << "\n" << distinct_codes[i].text;
    }
    return out.str();
}

}  // namespace arcknot
