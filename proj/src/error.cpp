#include "orr/error.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "orr/caps.hpp"

namespace orr {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::CapacityTooLarge: return "CapacityTooLarge";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::RRViolation: return "RRViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Cancelled: return "Cancelled";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

Caps Caps::parse(std::string_view text, Caps base) {
  Caps caps = base;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "cap entry without '=': " + std::string(item));
    std::string_view key = item.substr(0, eq);
    std::string_view val = item.substr(eq + 1);
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), n);
    if (ec != std::errc{} || ptr != val.data() + val.size() || n < 0)
      throw Error(ErrorCode::ParseError, "bad cap value: " + std::string(item));
    auto un = static_cast<std::size_t>(n);
    if (key == "chi") caps.chi_vertices = un;
    else if (key == "partial") caps.partial_edges = un;
    else if (key == "full") caps.full_edges = un;
    else if (key == "rank") caps.rank_vertices = un;
    else if (key == "rank_degree") caps.rank_degree = n;
    else if (key == "distance") caps.distance_edges = un;
    else if (key == "mfmc") caps.mfmc_capacity = n;
    else throw Error(ErrorCode::ParseError, "unknown cap key: " + std::string(key));
  }
  return caps;
}

Caps Caps::from_env() {
  const char* env = std::getenv("ORIENT_RR_CAPS");
  if (env == nullptr) return Caps{};
  return parse(env);
}

}  // namespace orr
