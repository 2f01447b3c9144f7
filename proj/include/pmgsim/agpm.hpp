#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pmgsim/config.hpp"
#include "pmgsim/types.hpp"

namespace pmgsim {

enum class CacheLevel : std::uint8_t { L1, L2 };
enum class AgpmWay : std::uint8_t { Log, All };

/// One tracked 128-byte block: per-byte reference counters, a block
/// counter and the path-change mark (bit 0 = last path was temporal).
struct AgpmEntry {
  Addr tag = 0;
  std::array<std::uint8_t, kBlockBytes> byte_counters{};
  std::uint32_t block_counter = 0;
  std::uint8_t path_change_mark = 0;
};

/// The ten Table II variables.
struct LocalityMetrics {
  std::uint64_t l1d_t_all = 0, l1d_t_log = 0, l1d_s_all = 0, l1d_s_log = 0;
  std::uint64_t l2_t_all = 0, l2_t_log = 0, l2_s_all = 0, l2_s_log = 0;
  std::uint64_t all = 0, log = 0;

  bool l1d_all_zero() const { return !l1d_t_all && !l1d_t_log && !l1d_s_all && !l1d_s_log; }
  bool l2_all_zero() const { return !l2_t_all && !l2_t_log && !l2_s_all && !l2_s_log; }
};

/// 2-way (log/all) set-associative counter sketch with a reservation
/// buffer backing store; one instance per cache level.
class AgpmBuffer {
 public:
  explicit AgpmBuffer(const AgpmConfig& cfg);

  /// A PM request reached this level. Creates (or refills) the all-way
  /// entry and, for log requests, the log-way entry. Only genuinely new
  /// entries get the +1 initialization of the requested bytes; refilled
  /// entries fall under the subsequent-request rules.
  /// Returns true when a reservation-buffer refill happened (timing hook).
  bool record_pm_request(Addr block, const ByteMask& bytes, bool is_log);

  /// A request hit the cache at this level. Bumps counters of tracked
  /// blocks: byte counter 0 -> block counter only; byte counter > 0 ->
  /// byte + block counters. Log way is touched only by log requests.
  void notify_hit(Addr block, const ByteMask& bytes, bool is_log);

  const AgpmEntry* peek(AgpmWay way, Addr block) const;
  AgpmEntry* find_for_mark(Addr block);  // log-way entry, live or reserved

  void accumulate(const AgpmConfig& cfg, AgpmWay way,
                  std::uint64_t& temporal, std::uint64_t& spatial) const;
  void flush();  // period / kernel end: drop live entries and reservations

  std::uint64_t refill_count() const { return refills_; }

 private:
  struct Set {
    std::optional<AgpmEntry> log_way;
    std::optional<AgpmEntry> all_way;
  };
  std::optional<AgpmEntry>& slot(AgpmWay way, Addr block);
  void bump(AgpmEntry& e, const ByteMask& bytes);

  AgpmConfig cfg_;
  std::vector<Set> sets_;
  // spilled entries, keyed by block; counts survive capacity eviction
  std::map<Addr, AgpmEntry> reserved_log_;
  std::map<Addr, AgpmEntry> reserved_all_;
  std::uint64_t refills_ = 0;

  friend class AgpmTracker;
};

struct SizeReport {
  std::uint64_t bits_per_entry;
  std::uint64_t bytes_per_buffer;
  std::uint64_t total_bytes;
  std::uint64_t kib_per_buffer() const { return bytes_per_buffer / 1024; }
  std::uint64_t total_kib() const { return total_bytes / 1024; }
};

SizeReport size_report(const AgpmConfig& cfg);

Reason classify_reason(const LocalityMetrics& m, bool uses_shared_memory);
PathDecision reason_to_path(Reason r);

/// CWPPR-driven logging-period threshold update (±10%, nearest int, min 100).
std::uint64_t update_threshold(std::uint64_t threshold, double cwppr_prev, double cwppr_sampling);

struct PeriodState {
  std::uint64_t threshold = 10000;
  std::uint64_t log_count_this_period = 0;
  double cwppr_prev = 0.0;
  double cwppr_current = 0.0;
  std::uint64_t period_index = 0;

  // CWPPR accumulation for the running period
  std::uint64_t wait_cycles = 0;
  std::uint64_t completed_requests = 0;

  double sample_cwppr() const {
    return completed_requests ? double(wait_cycles) / double(completed_requests) : cwppr_prev;
  }
};

/// Both level buffers plus totals and the period controller: everything
/// the path selector consults.
class AgpmTracker {
 public:
  explicit AgpmTracker(const AgpmConfig& cfg);

  bool on_pm_request(CacheLevel lvl, Addr block, const ByteMask& bytes, bool is_log);
  void on_hit(CacheLevel lvl, Addr block, const ByteMask& bytes, bool is_pm, bool is_log);
  void count_access(bool is_log) { ++total_all_; if (is_log) { ++total_log_; ++period_.log_count_this_period; } }

  LocalityMetrics compute_metrics() const;

  /// Path decision for one log update (warm-up, classify, mark upkeep).
  /// `flip` reports a change against the block's path-change mark.
  PathDecision select_path(Addr block, bool uses_shared_memory, bool* flip_to_nt, bool* flip_to_t);

  void record_wait(Cycle waited) { period_.wait_cycles += static_cast<std::uint64_t>(waited); ++period_.completed_requests; }
  bool period_expired() const { return period_.log_count_this_period >= period_.threshold; }
  void end_period();
  void on_kernel_begin(std::optional<std::uint64_t> log_hint);
  void on_kernel_end() { end_period(); }

  const PeriodState& period() const { return period_; }
  std::uint64_t total_log() const { return total_log_; }
  std::uint64_t total_all() const { return total_all_; }
  std::uint64_t refill_count() const { return l1_.refill_count() + l2_.refill_count(); }
  std::array<std::uint64_t, 8> reason_histogram{};  // select_path outcomes

  const AgpmConfig& config() const { return cfg_; }

 private:
  AgpmConfig cfg_;
  AgpmBuffer l1_;
  AgpmBuffer l2_;
  std::uint64_t total_all_ = 0;
  std::uint64_t total_log_ = 0;
  std::uint64_t logs_seen_ = 0;  // kernel-lifetime, for warm-up
  PeriodState period_;
};

}  // namespace pmgsim
