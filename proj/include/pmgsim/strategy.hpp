#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pmgsim/types.hpp"

namespace pmgsim {

enum class StrategyKind : std::uint8_t {
  StaticTemporal,     // store+clwb for logs and data
  StaticNonTemporal,  // nt-store for logs, temporal for data
  PmSpec,             // loads temporal, stores non-temporal
  Bucl,               // bypass when coalescing degree exceeds threshold
  ThemisSimplified,   // nt logs + post-log fence elision
  Agpm,               // adaptive path selector
};

std::optional<StrategyKind> strategy_from_name(const std::string& name);
const char* strategy_name(StrategyKind k);

struct StrategyConfig {
  StrategyKind kind = StrategyKind::StaticTemporal;
  std::uint32_t bucl_threshold = 8;
};

/// Everything a baseline may consult for one PM store request.
struct DecideContext {
  MemOp op = MemOp::Store;
  MemRole role = MemRole::Plain;
  std::uint32_t degree_n = 1;
  bool l1_mshrs_exhausted = false;
};

class AgpmTracker;

/// Per-request path decision for the non-adaptive strategies; Agpm
/// delegates to the tracker's selector in the engine.
PathDecision decide(const StrategyConfig& cfg, const DecideContext& ctx);

struct TypeVerdict {
  double perf_t = 0.0;   // normalized execution time, temporal logs
  double perf_nt = 0.0;  // normalized execution time, nt logs
  double diff = 0.0;
  GpuType gpu_type = GpuType::III;
};

/// Table I: I if temporal wins by >5 normalized points, II if nt does,
/// III otherwise. Inputs are normalized times (lower = faster).
TypeVerdict classify_type(double perf_t, double perf_nt);

}  // namespace pmgsim
