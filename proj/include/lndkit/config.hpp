#ifndef LNDKIT_CONFIG_HPP
#define LNDKIT_CONFIG_HPP

#include <cstdint>

namespace lnd {

// Degree bounds and caps for every bounded search in the toolkit.
// Commands report the bound they ran under; results that depend on a bound
// say so ("minimal within bound B").
struct Bounds {
  unsigned nilpotency_cap = 64;     // per-generator iteration cap for LND checks
  unsigned seed_degree = 4;         // ansatz degree for pre-slice seed search
  unsigned solve_in_f_degree = 16;  // highest power of f tried by solve_in_f
  unsigned dependency_degree = 2;   // fiber-coefficient degree for dependency certificates
  unsigned kernel_evidence_degree = 3;  // bounded joint-kernel evidence search
  unsigned log_cap = 64;            // (sigma - id) nilpotency cap for log
  std::uint64_t rng_seed = 20090;   // seed for randomized evidence (variety points)
};

}  // namespace lnd

#endif  // LNDKIT_CONFIG_HPP
