#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pmgsim/types.hpp"

namespace pmgsim {

struct CacheGeom {
  std::uint32_t size_kib = 0;
  std::uint32_t line_bytes = 128;
  std::uint32_t assoc = 0;
  std::uint32_t mshrs = 256;

  std::uint32_t lines() const { return size_kib * 1024 / line_bytes; }
  std::uint32_t sets() const { return lines() / assoc; }
};

/// Table V machine description plus the calibration constants of the
/// queueing timing model. Everything is overridable from a config file
/// with dotted keys (e.g. "l1d.size_kib = 24").
struct HierarchyConfig {
  std::uint32_t sm_count = 20;

  CacheGeom l1d{24, 128, 6, 256};     // write-evict / write-no-allocate
  CacheGeom l2{2048, 128, 16, 256};   // write-back / write-allocate, 16 partitions
  std::uint32_t l2_partitions = 16;

  std::uint32_t channels = 8;
  double core_ghz = 1.8;
  double icnt_ghz = 1.4;
  double mem_ghz = 1.2;
  double mem_bw_gbps = 307.0;         // aggregate, all channels
  std::uint32_t flit_bytes = 32;

  double nvm_read_ns = 160.0;
  double nvm_write_ns = 480.0;
  double dram_read_ns = 160.0;
  double dram_write_ns = 160.0;

  // calibration constants (core cycles)
  Cycle l1_hit_cycles = 28;
  Cycle l2_hit_cycles = 190;
  Cycle fence_cycles = 20;
  Cycle l1_port_cycles = 1;
  Cycle l2_port_cycles = 2;
  Cycle l2_miss_detect_cycles = 20;

  std::uint32_t wpq_capacity = 64;    // entries per channel
  std::uint32_t inflight_window = 64; // outstanding mem instrs per SM
  bool nt_invalidate = false;

  Addr pm_base = 0x1'0000'0000ull;
  Addr pm_size = 0x4000'0000ull;
  Addr dram_base = 0;
  Addr dram_size = 0x4000'0000ull;

  Cycle nvm_read_cycles() const { return static_cast<Cycle>(nvm_read_ns * core_ghz + 0.5); }
  Cycle nvm_write_cycles() const { return static_cast<Cycle>(nvm_write_ns * core_ghz + 0.5); }
  Cycle dram_read_cycles() const { return static_cast<Cycle>(dram_read_ns * core_ghz + 0.5); }
  Cycle dram_write_cycles() const { return static_cast<Cycle>(dram_write_ns * core_ghz + 0.5); }

  /// DRAM channel occupancy for `bytes`, bandwidth-served.
  Cycle dram_occupancy(std::uint32_t bytes) const;
  /// Interconnect occupancy for `bytes` rounded up to whole flits, in core cycles.
  Cycle icnt_occupancy(std::uint32_t bytes) const;
  std::uint32_t flits(std::uint32_t bytes) const { return (bytes + flit_bytes - 1) / flit_bytes; }

  std::uint32_t partition_of(Addr block) const {
    return static_cast<std::uint32_t>((block / kBlockBytes) % l2_partitions);
  }
  std::uint32_t channel_of(Addr block) const {
    return partition_of(block) / (l2_partitions / channels);
  }

  bool in_pm(Addr a) const { return a >= pm_base && a < pm_base + pm_size; }
  bool in_dram(Addr a) const { return a >= dram_base && a < dram_base + dram_size; }
};

enum class MetricFormula : std::uint8_t { Rehit, PaperLiteral };

struct AgpmConfig {
  std::uint32_t sets = 512;
  std::uint32_t counter_bits = 5;        // saturate at 2^bits - 1
  std::uint32_t tag_bits = 57;
  std::uint32_t warmup_logs = 100;
  std::uint64_t initial_threshold = 10000;
  MetricFormula metric_formula = MetricFormula::Rehit;
  bool saturate = true;                  // test mode can disable

  std::uint32_t counter_max() const { return (1u << counter_bits) - 1; }
  std::uint32_t entries() const { return sets * 2; }
};

struct SimConfig {
  HierarchyConfig hier;
  AgpmConfig agpm;

  /// Parse "dotted.key = value" lines; '#' starts a comment.
  static SimConfig from_file(const std::string& path);
  static SimConfig from_string(const std::string& text);
  void apply(const std::string& key, const std::string& value);
  void dump(std::ostream& os) const;
};

}  // namespace pmgsim
