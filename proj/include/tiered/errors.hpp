#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiered {

enum class ErrorKind {
  InvalidGraph,
  NotATree,
  DisconnectedGraph,
  NotSpanningTree,
  NonSurjectiveTiering,
  TooFewTiers,
  OverlappingVertexSets,
  NotACutVertex,
  InvalidAttachment,
  UnknownVertex,
  NotToppleable,
  NotStable,
  CapExceeded,
  BadCharacter,
  EmptyPath,
  InvalidLPP,
  NotGParking,
  WrongSink,
  BadPartition,
  VertexNotInSubset,
  NonPolynomialResult,
  NotCompleteTiered,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Resource limits. Every exhaustive routine checks the relevant field
// before doing work and throws CapExceeded instead of truncating.
struct Caps {
  std::uint64_t spanning_trees = 10'000'000;
  int slim_edges = 20;        // edge count for slim-subgraph and forest enumeration
  int subset_vertices = 20;   // non-sink vertices for the 2^n subset test
  int rank_vertices = 10;     // vertices for exact graded-rank computations

  // Parses "trees=N,edges=N,subset=N,rank=N"; unknown keys are rejected.
  static Caps parse(std::string_view text, Caps base);
  static Caps parse(std::string_view text);
  // Applies TIERED_CAPS when set.
  static Caps from_environment(Caps base);
  static Caps from_environment();
};

}  // namespace tiered
