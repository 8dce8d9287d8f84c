#include "tiered/errors.hpp"

#include <charconv>
#include <cstdlib>

namespace tiered {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NotSpanningTree: return "NotSpanningTree";
    case ErrorKind::NonSurjectiveTiering: return "NonSurjectiveTiering";
    case ErrorKind::TooFewTiers: return "TooFewTiers";
    case ErrorKind::OverlappingVertexSets: return "OverlappingVertexSets";
    case ErrorKind::NotACutVertex: return "NotACutVertex";
    case ErrorKind::InvalidAttachment: return "InvalidAttachment";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotToppleable: return "NotToppleable";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::EmptyPath: return "EmptyPath";
    case ErrorKind::InvalidLPP: return "InvalidLPP";
    case ErrorKind::NotGParking: return "NotGParking";
    case ErrorKind::WrongSink: return "WrongSink";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::VertexNotInSubset: return "VertexNotInSubset";
    case ErrorKind::NonPolynomialResult: return "NonPolynomialResult";
    case ErrorKind::NotCompleteTiered: return "NotCompleteTiered";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

std::uint64_t parse_number(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw Error(ErrorKind::ParseError, "cap '" + std::string(key) + "' is not a number");
  return out;
}

}  // namespace

Caps Caps::parse(std::string_view text, Caps base) {
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::ParseError, "cap entry '" + std::string(item) + "' lacks '='");
    auto key = item.substr(0, eq);
    auto value = parse_number(key, item.substr(eq + 1));
    if (key == "trees") base.spanning_trees = value;
    else if (key == "edges") base.slim_edges = static_cast<int>(value);
    else if (key == "subset") base.subset_vertices = static_cast<int>(value);
    else if (key == "rank") base.rank_vertices = static_cast<int>(value);
    else throw Error(ErrorKind::ParseError, "unknown cap '" + std::string(key) + "'");
  }
  return base;
}

Caps Caps::parse(std::string_view text) { return parse(text, Caps{}); }

Caps Caps::from_environment() { return from_environment(Caps{}); }

Caps Caps::from_environment(Caps base) {
  const char* env = std::getenv("TIERED_CAPS");
  return env ? parse(env, base) : base;
}

}  // namespace tiered
