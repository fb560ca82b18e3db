#include "acolb/trace.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace acolb {

namespace {

constexpr std::string_view kKindNames[] = {
    "Spawn", "Select", "Acquire",   "Refuse", "Deposit",
    "Evaporate", "Return", "Kill", "Fail"};

}  // namespace

std::string_view event_kind_name(EventKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

std::optional<EventKind> parse_event_kind(std::string_view name) {
  for (int k = 0; k < static_cast<int>(std::size(kKindNames)); ++k) {
    if (kKindNames[k] == name) return static_cast<EventKind>(k);
  }
  return std::nullopt;
}

std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", x);
  return buf;
}

std::string trace_line(const TraceEvent& event) {
  std::string line;
  line.reserve(96);
  line += "{\"step\":";
  line += std::to_string(event.step);
  line += ",\"kind\":\"";
  line += event_kind_name(event.kind);
  line += '"';
  if (event.ant >= 0) {
    line += ",\"ant\":";
    line += std::to_string(event.ant);
  }
  if (event.scheduler >= 0) {
    line += ",\"scheduler\":";
    line += std::to_string(event.scheduler);
  }
  if (event.server >= 0) {
    line += ",\"server\":";
    line += std::to_string(event.server);
  }
  if (event.value.has_value()) {
    line += ",\"value\":";
    line += format_fixed(*event.value);
  }
  line += '}';
  return line;
}

void write_trace(std::ostream& out, const Trace& trace) {
  for (const TraceEvent& event : trace) {
    out << trace_line(event) << '\n';
  }
}

TraceEvent parse_trace_line(std::string_view line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::runtime_error("trace: malformed line: " + std::string(line));
  }
  TraceEvent event;
  if (!j.contains("step") || !j.contains("kind")) {
    throw std::runtime_error("trace: line misses step/kind: " +
                             std::string(line));
  }
  event.step = j.at("step").get<std::int64_t>();
  auto kind = parse_event_kind(j.at("kind").get<std::string>());
  if (!kind.has_value()) {
    throw std::runtime_error("trace: unknown event kind in: " +
                             std::string(line));
  }
  event.kind = *kind;
  if (j.contains("ant")) event.ant = j.at("ant").get<int>();
  if (j.contains("scheduler")) event.scheduler = j.at("scheduler").get<int>();
  if (j.contains("server")) event.server = j.at("server").get<int>();
  if (j.contains("value")) event.value = j.at("value").get<double>();
  return event;
}

Trace read_trace(std::istream& in) {
  Trace trace;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    trace.push_back(parse_trace_line(line));
  }
  return trace;
}

}  // namespace acolb
