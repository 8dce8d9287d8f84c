#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tiered/errors.hpp"
#include "tiered/sandpile.hpp"
#include "tiered/tiered_graph.hpp"

namespace tiered {

// A word in E and N.
class LatticePath {
 public:
  LatticePath() = default;
  // Throws BadCharacter, EmptyPath.
  static LatticePath parse(std::string_view steps);

  const std::string& steps() const { return steps_; }
  int width() const { return width_; }
  int height() const { return height_; }
  std::string render() const { return steps_; }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::string steps_;
  int width_ = 0;
  int height_ = 0;
};

enum class Colour { Blue, Black, Red };
std::string_view to_string(Colour c);

// (U1, U2, U3) with |U2| = 1: blue, black and red labels.
struct OrderedSetPartition {
  std::vector<int> blue, black, red;  // each sorted

  int size() const { return static_cast<int>(blue.size() + black.size() + red.size()); }
  int sink() const { return black.front(); }
  Colour colour_of(int label) const;

  // "1,2|3|4,5"; empty blocks allowed. Throws ParseError.
  static OrderedSetPartition parse(std::string_view text);
  std::string to_string() const;
  // Throws BadPartition unless the blocks partition 1..k with one black label.
  void validate() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

// Every ordered partition of 1..k with a single black label.
std::vector<OrderedSetPartition> ordered_partitions(int k);

// Complete tiered graph with blue < black < red tiers (empty tiers dropped).
TieredGraph polyomino_graph(const OrderedSetPartition& u);

struct CellLabel {
  int column = 0;
  int row = 0;
  int label = 0;
  Colour colour = Colour::Blue;
  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

// Cells are (column, row) from the bottom-left. The upper path carries the
// red labels (at the left end of each row), the lower path the blue labels
// (at the bottom of each column); the black label sits in cell (0, 0).
struct LabelledPolyomino {
  LatticePath upper;
  LatticePath lower;
  std::vector<CellLabel> labels;  // sorted by (column, row)
  OrderedSetPartition parts;

  friend bool operator==(const LabelledPolyomino&, const LabelledPolyomino&) = default;
};

// Empty when valid: equal dimensions, paths meeting only at their ends,
// labels on the correct cells, columns increasing upward, rows decreasing
// rightward.
std::vector<std::string> validate_lpp(const LabelledPolyomino& p);

// Unlabelled cells whose row label exceeds their column label.
int area(const LabelledPolyomino& p);

// Starts with the black row, then alternates east runs to the blue path and
// north runs to the red path.
LatticePath bounce_path(const LabelledPolyomino& p);

// Labels of the bounce path's runs: blue labels of each east run, red labels
// of each north run; the black label is omitted.
std::vector<int> toppling_order(const LabelledPolyomino& p);

// G-parking configuration on polyomino_graph(parts) with the black sink.
// Blue j: adjacent row labels below j's row. Red j: adjacent column labels
// left of j's column. Throws InvalidLPP.
Configuration alpha(const LabelledPolyomino& p);

// Inverse of alpha by burning from the sink. Throws WrongSink, NotGParking,
// BadPartition.
LabelledPolyomino alpha_inverse(const Configuration& c, const OrderedSetPartition& u, const Caps& caps = {});

// All labelled polyominoes over u. Throws CapExceeded when their number
// (the tree count of polyomino_graph(u)) exceeds caps.spanning_trees.
std::vector<LabelledPolyomino> enumerate_lpp(const OrderedSetPartition& u, const Caps& caps = {});

// Whole-grid counts of adjacent labels above (blue) or right of (red) each
// label; deg(sink) at the sink. Equals max_stable - alpha off the sink.
IntVector white_square_counts(const LabelledPolyomino& p);

// Fires the sink on max_stable - alpha, then topples toppling_order(p) in
// turn. True when every toppling is legal and the start is restored.
bool replay_toppling_order(const LabelledPolyomino& p);

// For the first label j of the toppling order with I = {j}:
// alpha(j) - deg(j) == alpha(j) - deg_A(j) + deg_I(j), where deg_A counts
// the grid cells pairing j with an adjacent label and deg_I those pairing
// it with a label of I.
bool first_toppling_identity(const LabelledPolyomino& p);

std::string render_ascii(const LabelledPolyomino& p);

}  // namespace tiered
