#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ord {

// One theorem rendition checked over a sweep of finite structures.
struct VerifyReport {
    std::string id;
    bool ok = false;
    long long cases = 0;      // structures examined
    std::string detail;       // summary, or the first counterexample
};

std::vector<std::string> verify_ids();

// Runs one rendition over all structures up to max_size (seed feeds the
// randomized sweeps; deterministic for a fixed seed). k narrows the pattern
// size for thm1.4; k < 0 sweeps {2, 3}. Throws UnknownTheoremId for unknown
// ids.
VerifyReport verify_theorem(const std::string& id, int max_size, std::uint64_t seed,
                            int k = -1);

} // namespace ord
