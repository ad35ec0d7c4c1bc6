#pragma once

#include <cstdint>
#include <string>

namespace hitcalc {

enum class Strategy { direct, recursive };

struct RunConfig {
    // Largest degree-space size (monomial count) a build may touch.
    uint64_t max_space = uint64_t(1) << 22;
    // direct: one full elimination of the degree space.
    // recursive: Singer-prefiltered elimination plus the Kameko splitting.
    Strategy strategy = Strategy::direct;
    // Generate the hit subspace from every Sq^k instead of only Sq^{2^i}.
    bool exhaustive_generators = false;
    // Track generator combinations so hit tests can report certificates.
    bool track_certificates = false;
    int threads = 1;
};

Strategy parse_strategy(const std::string& name);

}  // namespace hitcalc
