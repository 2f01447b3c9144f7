#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pmgsim/agpm.hpp"
#include "pmgsim/config.hpp"
#include "pmgsim/types.hpp"

namespace pmgsim {

enum class HitLevel : std::uint8_t { L1D, L2, Memory };
enum class PersistSource : std::uint8_t { Log, Data, Flag };

struct PersistRecord {
  Cycle accepted = 0;       // WPQ acceptance = durability (ADR)
  std::uint64_t seq = 0;    // FIFO tie-break
  Addr block = 0;
  ByteMask mask;
  std::array<std::uint8_t, kBlockBytes> bytes{};
  PersistSource source = PersistSource::Data;
  std::uint32_t cta = 0;
  std::uint32_t tx = 0;
};

struct AccessResult {
  HitLevel hit_level = HitLevel::Memory;
  Cycle complete = 0;
  Cycle durable_at = -1;  // -1: not yet durable
};

struct CacheLine {
  Addr tag = 0;            // block address
  ByteMask valid;          // byte-granular (whole sectors on fetch)
  ByteMask dirty;          // subset of valid
  std::uint64_t lru_stamp = 0;
  bool present = false;
};

struct PersistTag {
  PersistSource source = PersistSource::Data;
  std::uint32_t cta = 0;
  std::uint32_t tx = 0;
};

struct HierarchyStats {
  std::uint64_t l1_hits = 0, l1_misses = 0;
  std::uint64_t l2_hits = 0, l2_misses = 0;
  std::uint64_t bytes_s2m = 0, bytes_m2s = 0;
  std::uint64_t wpq_entries = 0, wpq_bytes = 0;
  std::uint64_t nvm_reads = 0, dram_reads = 0;
  std::uint64_t l2_writebacks = 0;
};

/// Per-SM L1Ds, shared L2 partitions, DRAM and NVM channels with
/// write-pending queues, and the volatile byte values needed to
/// materialize durable writes. Single-threaded, deterministic.
class GpuHierarchy {
 public:
  using EvictionHook = std::function<void(CacheLevel, std::uint32_t set, Addr victim)>;

  GpuHierarchy(const HierarchyConfig& cfg, AgpmTracker* tracker);

  /// Cached-path access of one segment transaction.
  AccessResult access_temporal(std::uint32_t sm, Addr block, const ByteMask& mask,
                               MemOp op, bool is_pm, bool is_log, Cycle t,
                               const std::uint8_t* store_bytes, const PersistTag& tag);

  /// Cache-bypassing PM store: probes (for tracking / optional
  /// invalidation) but never allocates; durable at WPQ acceptance.
  AccessResult store_nontemporal(std::uint32_t sm, Addr block, const ByteMask& mask,
                                 bool is_log, Cycle t,
                                 const std::uint8_t* store_bytes, const PersistTag& tag);

  /// Write back the block's dirty bytes (if any) to the WPQ; the line
  /// stays resident clean. No-op on clean/absent blocks.
  AccessResult clwb(std::uint32_t sm, Addr block, Cycle t, const PersistTag& tag);

  /// Pull the block's dirty bytes out of L2 without persisting them
  /// (path-change temporal->nt: the nt store carries them instead).
  ByteMask steal_dirty(Addr block, std::array<std::uint8_t, kBlockBytes>& out);

  bool l1_mshrs_exhausted(std::uint32_t sm, Cycle t) const;

  /// All queued work done (final WPQ drain, outstanding channel time).
  Cycle quiesce() const;

  const std::vector<PersistRecord>& persist_trace() const { return persists_; }
  std::vector<PersistRecord> take_persist_trace() { return std::move(persists_); }
  const HierarchyStats& stats() const { return stats_; }
  const HierarchyConfig& config() const { return cfg_; }
  void set_eviction_hook(EvictionHook h) { evict_hook_ = std::move(h); }

  /// Earliest possible durability of a persist issued now (Themis elision).
  Cycle min_persist_travel() const { return cfg_.l2_hit_cycles; }

 private:
  struct CacheSet { std::vector<CacheLine> ways; };
  struct Cache {
    CacheGeom geom;
    std::vector<CacheSet> sets;
    std::uint64_t stamp = 0;
    std::uint32_t set_of(Addr block) const { return std::uint32_t((block / kBlockBytes) % geom.sets()); }
    CacheLine* find(Addr block);
    CacheLine* victim(Addr block);  // LRU within the set
  };
  struct Channel {
    Cycle read_free = 0;
    Cycle write_free = 0;
    std::deque<Cycle> drain_done;   // completion times, FIFO
    std::uint64_t accepted = 0;
  };
  struct Partition {
    Cycle port_free = 0;
    Cycle s2m_free = 0;
    Cycle m2s_free = 0;
  };
  struct SmState {
    Cycle l1_port_free = 0;
    std::vector<Cycle> miss_ring;  // outstanding-miss completions (MSHR model)
    std::size_t miss_pos = 0;
  };

  Cycle wpq_accept(std::uint32_t ch, Cycle t);
  void push_persist(Addr block, const ByteMask& mask,
                    const std::array<std::uint8_t, kBlockBytes>& bytes,
                    Cycle accepted, const PersistTag& tag);
  void writeback_victim(const CacheLine& line, Cycle t);
  Cycle l2_stage(std::uint32_t part, Cycle t, std::uint32_t req_bytes);

  HierarchyConfig cfg_;
  AgpmTracker* tracker_;
  std::vector<Cache> l1_;        // one per SM
  Cache l2_;                     // sets span all partitions
  std::vector<SmState> sms_;
  std::vector<Partition> parts_;
  std::vector<Channel> chans_;
  std::vector<PersistRecord> persists_;
  std::uint64_t persist_seq_ = 0;
  HierarchyStats stats_;
  EvictionHook evict_hook_;
  // byte values of L2-resident blocks, keyed by block address
  std::unordered_map<Addr, std::array<std::uint8_t, kBlockBytes>> l2_bytes_;
};

}  // namespace pmgsim
