#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmgsim/hierarchy.hpp"
#include "pmgsim/types.hpp"

namespace pmgsim {

constexpr std::uint32_t kLogSlotBytes = 32;       // one slot per 4-byte data granule
constexpr std::uint32_t kLogGranule = 4;
constexpr std::uint32_t kLogRecordHeader = 12;    // addr(8) + len(4)
constexpr std::uint8_t kFlagNone = 0, kFlagInTx = 1, kFlagComplete = 2;

/// Byte-addressable PM state, page-backed for cheap copy/compare.
class PMImage {
 public:
  std::uint8_t read(Addr a) const;
  void write(Addr a, std::uint8_t v);
  void write_block(Addr block, const ByteMask& mask,
                   const std::array<std::uint8_t, kBlockBytes>& bytes);
  bool operator==(const PMImage&) const = default;

 private:
  static constexpr Addr kPageBytes = 4096;
  std::map<Addr, std::vector<std::uint8_t>> pages_;
};

enum class TxPhase : std::uint8_t { LoggingPhase, InTx, Completing, Complete };

/// Where a transaction's durable footprint lives: everything recovery
/// and the atomicity check need to audit it.
struct TxAudit {
  std::uint32_t cta = 0;
  std::uint32_t tx = 0;
  Addr flag_addr = 0;
  std::vector<std::pair<Addr, std::uint32_t>> log_records;  // (slot addr, old-value len)
  // expected data values, byte-granular
  std::vector<Addr> data_addrs;
  std::vector<std::uint8_t> pre_bytes;
  std::vector<std::uint8_t> post_bytes;
};

struct RunLayout {
  std::vector<TxAudit> txs;  // engine emission order (per-CTA ascending)
};

using PersistTrace = std::vector<PersistRecord>;

/// Replay exactly the first `point` durable writes (ADR: accepted WPQ
/// entries survive; everything else is lost).
PMImage crash_at(const PersistTrace& pt, std::size_t point);
PMImage crash_at(const PersistTrace& pt, std::size_t point, const PMImage& base);

struct RecoveryReport {
  std::uint64_t rolled_back = 0;
  std::uint64_t kept = 0;
  std::vector<std::string> unrecoverable;  // torn/corrupt log entries
};

/// Undo recovery: complete -> keep; inTx -> apply log records in reverse
/// (checksum-validated), clear flag; no flag -> discard partial log.
PMImage recover(const PMImage& image, const RunLayout& layout, RecoveryReport* report = nullptr);

struct AtomicityViolation {
  std::uint32_t cta = 0, tx = 0;
  Addr addr = 0;
  std::uint8_t expected_pre = 0, expected_post = 0, actual = 0;
};

struct AtomicityReport {
  bool ok = true;
  std::vector<AtomicityViolation> violations;
};

/// All-or-nothing check: every transaction's data bytes are either all
/// pre-tx or all post-tx in the recovered image.
AtomicityReport check_atomicity(const PMImage& recovered, const RunLayout& layout);

/// Log-record plumbing shared by the engine and recovery.
std::uint32_t log_checksum(Addr target, std::uint32_t len, const std::uint8_t* old_bytes);
void encode_log_record(Addr target, std::uint32_t len, const std::uint8_t* old_bytes,
                       std::uint8_t* slot /* kLogSlotBytes */);
struct DecodedRecord {
  Addr target;
  std::uint32_t len;
  std::array<std::uint8_t, 16> old_bytes;
};
std::optional<DecodedRecord> decode_log_record(const std::uint8_t* slot);

}  // namespace pmgsim
