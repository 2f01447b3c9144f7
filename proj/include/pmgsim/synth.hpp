#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "pmgsim/trace.hpp"
#include "pmgsim/types.hpp"

namespace pmgsim {

/// A synthetic family: one of the eight locality reasons, or a broad
/// type (I/II/III) resolved to a representative reason (a / b / f).
struct Family {
  Reason reason = Reason::A;
  static std::optional<Family> from_name(const std::string& s);
  const char* name() const { return to_string(reason); }
};

struct GenParams {
  std::uint32_t ctas = 0;          // 0 = family default
  std::uint32_t warps = 0;
  std::uint64_t log_updates = 0;   // approximate target, 0 = family default
  std::uint64_t data_updates = 0;
  std::uint32_t reuse_distance = 0;
  std::uint32_t stride = 0;
};

struct UnrealizableFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic in (family, params, seed). The produced trace, when
/// simulated, satisfies the requested reason's predicate and no earlier
/// predicate in the classifier's evaluation order.
Trace gen_synthetic(Family family, const GenParams& params, std::uint64_t seed);

/// Family-a phase followed by family-b phase in one kernel (the
/// mixed-phase adaptivity workload).
Trace gen_mixed_phase(const GenParams& params, std::uint64_t seed);

}  // namespace pmgsim
