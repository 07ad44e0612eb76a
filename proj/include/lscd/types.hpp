#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lscd {

/// Internal vertex id, contiguous 0..n-1 within one Graph.
using Vertex = std::uint32_t;

/// Vertex id as it appears in input files (SNAP ids can be sparse and large).
using ExternalId = std::int64_t;

inline constexpr Vertex kInvalidVertex = static_cast<Vertex>(-1);

/// Malformed or unusable input data (files, ids, configs).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A detection run that could not produce a community (LP infeasible in
/// round 0, for example). Carries the reseeding round that failed.
class DetectionFailure : public std::runtime_error {
public:
    DetectionFailure(const std::string& what, int round)
        : std::runtime_error(what), round_(round) {}
    int round() const { return round_; }

private:
    int round_;
};

} // namespace lscd
