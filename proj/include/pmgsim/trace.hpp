#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmgsim/types.hpp"

namespace pmgsim {

struct KernelMeta {
  std::uint32_t kernel_id = 0;
  std::string name;
  bool uses_shared_memory = false;
  std::uint32_t cta_count = 1;
  std::uint32_t warp_size = kWarpSize;
};

struct MemInstr {
  MemOp op = MemOp::Load;
  MemRole role = MemRole::Plain;
  std::uint32_t warp_id = 0;
  MemTarget target = MemTarget::DRAM;
  std::vector<std::pair<Addr, std::uint32_t>> thread_addrs;  // (byte address, size)
};

enum class EventKind : std::uint8_t {
  KernelBegin, KernelEnd, TxBegin, TxCommit, Fence, SyncThreads, MemInstr
};

struct TraceEvent {
  EventKind kind = EventKind::KernelBegin;
  std::uint32_t kernel_id = 0;
  std::uint32_t cta_id = 0;
  std::optional<std::uint32_t> tx_id;
  MemInstr mem;  // valid when kind == MemInstr
};

struct Trace {
  std::vector<KernelMeta> kernels;
  std::vector<TraceEvent> events;
  std::optional<std::uint64_t> log_count_hint;  // "TRCv1 logs=<n>"

  const KernelMeta* kernel(std::uint32_t id) const;
};

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line, int column, const std::string& what);
};

struct Violation {
  std::size_t event_index;
  std::string rule;
  std::string detail;
};

/// One 128-byte segment transaction of a coalesced warp access.
struct SegmentAccess {
  Addr segment;    // 128-byte aligned
  ByteMask bytes;
};

struct CoalescedInstr {
  std::vector<SegmentAccess> transactions;
  std::uint32_t degree_n() const { return static_cast<std::uint32_t>(transactions.size()); }
};

Trace parse_trace(std::istream& in);
Trace parse_trace_file(const std::string& path);
Trace parse_trace_string(const std::string& text);

void serialize(const Trace& t, std::ostream& os);
std::string serialize(const Trace& t);

/// Group arbitrary (addr, size) accesses into 128-byte segment transactions.
CoalescedInstr coalesce_accesses(const std::vector<std::pair<Addr, std::uint32_t>>& accesses);
CoalescedInstr coalesce(const MemInstr& instr);

std::vector<Violation> validate(const Trace& t);

}  // namespace pmgsim
