#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pmgsim {

using Addr = std::uint64_t;
using Cycle = std::int64_t;

constexpr std::uint32_t kBlockBytes = 128;     // coalescing segment / cache line
constexpr std::uint32_t kSectorBytes = 32;     // demand-fetch granularity
constexpr std::uint32_t kSectorsPerBlock = kBlockBytes / kSectorBytes;
constexpr std::uint32_t kWarpSize = 32;

inline Addr block_base(Addr a) { return a & ~Addr(kBlockBytes - 1); }
inline std::uint32_t block_offset(Addr a) { return static_cast<std::uint32_t>(a & (kBlockBytes - 1)); }

enum class MemOp : std::uint8_t { Load, Store };
enum class MemRole : std::uint8_t { LogUpdate, DataUpdate, Plain };
enum class MemTarget : std::uint8_t { PM, DRAM };

enum class PathDecision : std::uint8_t { Temporal, NonTemporal };

enum class Reason : std::uint8_t { A, B, C, D, E, F, G, H };
enum class GpuType : std::uint8_t { I, II, III };

const char* to_string(MemOp op);
const char* to_string(MemRole role);
const char* to_string(MemTarget t);
const char* to_string(PathDecision p);
const char* to_string(Reason r);
const char* to_string(GpuType t);

/// Table IV's fixed reason -> type mapping (f is reported as III).
GpuType reason_type(Reason r);

/// 128-bit byte mask over one block, kept as two words.
struct ByteMask {
  std::uint64_t lo = 0, hi = 0;

  void set(std::uint32_t off) { (off < 64 ? lo : hi) |= 1ull << (off & 63); }
  bool test(std::uint32_t off) const { return ((off < 64 ? lo : hi) >> (off & 63)) & 1; }
  void set_range(std::uint32_t off, std::uint32_t len) {
    for (std::uint32_t i = 0; i < len; ++i) set(off + i);
  }
  ByteMask& operator|=(const ByteMask& o) { lo |= o.lo; hi |= o.hi; return *this; }
  ByteMask operator&(const ByteMask& o) const { return ByteMask{lo & o.lo, hi & o.hi}; }
  ByteMask operator~() const { return ByteMask{~lo, ~hi}; }
  bool any() const { return lo | hi; }
  bool none() const { return !any(); }
  bool operator==(const ByteMask&) const = default;
  int popcount() const;
  bool subset_of(const ByteMask& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
};

/// Round a byte mask up to whole 32-byte sectors (fetch granularity).
ByteMask sector_round(const ByteMask& m);

std::uint64_t mix64(std::uint64_t x);

}  // namespace pmgsim
