#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acolb {

enum class EventKind {
  Spawn,
  Select,
  Acquire,
  Refuse,
  Deposit,
  Evaporate,
  Return,
  Kill,
  Fail
};

std::string_view event_kind_name(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view name);

// One simulation event. Events within a run are totally ordered by their
// position in the trace; -1 marks an inapplicable id field.
struct TraceEvent {
  std::int64_t step = 0;
  EventKind kind = EventKind::Spawn;
  int ant = -1;
  int scheduler = -1;
  int server = -1;
  // Select: sampled probability; Deposit: trail value after the deposit.
  std::optional<double> value;

  bool operator==(const TraceEvent&) const = default;
};

using Trace = std::vector<TraceEvent>;

// Fixed decimal formatting used by every serialized number in the project:
// nine decimal places, so byte-level diffs are stable across platforms.
std::string format_fixed(double x);

// Line-delimited JSON, one event per line, keys always in the order
//   step, kind, ant, scheduler, server, value
// with inapplicable fields omitted, e.g.
//   {"step":4,"kind":"Deposit","ant":7,"scheduler":1,"server":30,"value":0.015000000}
std::string trace_line(const TraceEvent& event);
void write_trace(std::ostream& out, const Trace& trace);

// Throws std::runtime_error on malformed lines.
TraceEvent parse_trace_line(std::string_view line);
Trace read_trace(std::istream& in);

}  // namespace acolb
