#pragma once

#include <vector>

#include "stablecoh/report.hpp"

namespace stablecoh {

struct VerifyOptions {
  int nmax = 4;
  int dmax = 17;
  unsigned threads = 0;  // 0: use STABLECOH_THREADS, else the hardware default
};

// Parallelism cap from STABLECOH_THREADS (0 = unset, 1 for unparseable values).
unsigned sweep_thread_cap();

// Every invariant suite, swept up to the given bounds.  Tasks fan out across a
// thread pool but reports come back in a fixed order with deterministic
// witnesses, so concurrency never affects output.
std::vector<VerificationReport> verify_all(const VerifyOptions& opts);

}  // namespace stablecoh
