#include "tiered/polyomino.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "tiered/spanning.hpp"

namespace tiered {

LatticePath LatticePath::parse(std::string_view steps) {
  if (steps.empty()) throw Error(ErrorKind::EmptyPath, "a lattice path needs at least one step");
  LatticePath p;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const char ch = steps[k];
    if (ch == 'E') ++p.width_;
    else if (ch == 'N') ++p.height_;
    else throw Error(ErrorKind::BadCharacter, "step " + std::to_string(k) + " is '" + std::string(1, ch) + "'");
  }
  p.steps_ = std::string(steps);
  return p;
}

std::string_view to_string(Colour c) {
  switch (c) {
    case Colour::Blue: return "blue";
    case Colour::Black: return "black";
    case Colour::Red: return "red";
  }
  return "?";
}

Colour OrderedSetPartition::colour_of(int label) const {
  if (std::binary_search(blue.begin(), blue.end(), label)) return Colour::Blue;
  if (std::binary_search(black.begin(), black.end(), label)) return Colour::Black;
  if (std::binary_search(red.begin(), red.end(), label)) return Colour::Red;
  throw Error(ErrorKind::BadPartition, "label " + std::to_string(label) + " is in no block");
}

OrderedSetPartition OrderedSetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks(1);
  std::string_view rest = text;
  std::string number;
  auto flush = [&]() {
    if (number.empty()) return;
    int value = 0;
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc{} || ptr != number.data() + number.size())
      throw Error(ErrorKind::ParseError, "bad label '" + number + "'");
    blocks.back().push_back(value);
    number.clear();
  };
  for (char ch : rest) {
    if (ch == '|') {
      flush();
      blocks.emplace_back();
    } else if (ch == ',') {
      if (number.empty()) throw Error(ErrorKind::ParseError, "empty label in '" + std::string(text) + "'");
      flush();
    } else if (ch != ' ') {
      number.push_back(ch);
    }
  }
  flush();
  if (blocks.size() != 3) throw Error(ErrorKind::ParseError, "expected three blocks separated by '|'");
  OrderedSetPartition u{blocks[0], blocks[1], blocks[2]};
  for (auto* b : {&u.blue, &u.black, &u.red}) std::sort(b->begin(), b->end());
  return u;
}

std::string OrderedSetPartition::to_string() const {
  std::ostringstream os;
  auto block = [&](const std::vector<int>& b) {
    for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
  };
  block(blue);
  os << '|';
  block(black);
  os << '|';
  block(red);
  return os.str();
}

void OrderedSetPartition::validate() const {
  if (black.size() != 1) throw Error(ErrorKind::BadPartition, "the black block must hold exactly one label");
  std::vector<int> all;
  for (auto* b : {&blue, &black, &red}) all.insert(all.end(), b->begin(), b->end());
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k + 1))
      throw Error(ErrorKind::BadPartition, "blocks do not partition 1.." + std::to_string(all.size()));
}

std::vector<OrderedSetPartition> ordered_partitions(int k) {
  std::vector<OrderedSetPartition> out;
  for (int sink = 1; sink <= k; ++sink) {
    std::vector<int> rest;
    for (int x = 1; x <= k; ++x)
      if (x != sink) rest.push_back(x);
    for (std::uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
      OrderedSetPartition u;
      u.black = {sink};
      for (std::size_t i = 0; i < rest.size(); ++i) ((mask >> i) & 1u ? u.blue : u.red).push_back(rest[i]);
      out.push_back(std::move(u));
    }
  }
  return out;
}

TieredGraph polyomino_graph(const OrderedSetPartition& u) {
  u.validate();
  const int shift = u.blue.empty() ? 1 : 0;
  std::vector<int> tier(u.size());
  for (int v : u.blue) tier[v - 1] = 1;
  for (int v : u.black) tier[v - 1] = 2 - shift;
  for (int v : u.red) tier[v - 1] = 3 - shift;
  return complete_tiered_graph(tier);
}

namespace {

// Column bottoms/tops and row lefts/rights of the region between the paths.
struct Shape {
  int m = 0, n = 0;
  std::vector<int> bottom, top, left, right;

  bool inside(int c, int r) const { return c >= 0 && c < m && r >= bottom[c] && r <= top[c]; }
};

// Paths of equal size that meet only at their endpoints.
std::string shape_problem(const LatticePath& upper, const LatticePath& lower) {
  if (upper.width() != lower.width() || upper.height() != lower.height())
    return "upper path is " + std::to_string(upper.width()) + "x" + std::to_string(upper.height()) +
           " but lower path is " + std::to_string(lower.width()) + "x" + std::to_string(lower.height());
  if (upper.width() < 1 || upper.height() < 1) return "polyomino needs at least one column and one row";
  int hu = 0, hl = 0;
  const std::size_t len = upper.steps().size();
  for (std::size_t k = 0; k + 1 < len; ++k) {
    hu += upper.steps()[k] == 'N';
    hl += lower.steps()[k] == 'N';
    if (hu <= hl) return "paths touch after step " + std::to_string(k + 1);
  }
  return {};
}

Shape shape_of(const LatticePath& upper, const LatticePath& lower) {
  Shape s;
  s.m = upper.width();
  s.n = upper.height();
  s.bottom.assign(s.m, 0);
  s.top.assign(s.m, 0);
  s.left.assign(s.n, 0);
  s.right.assign(s.n, 0);
  int x = 0, y = 0;
  for (char ch : lower.steps()) {
    if (ch == 'E') s.bottom[x++] = y;
    else s.right[y++] = x - 1;
  }
  x = y = 0;
  for (char ch : upper.steps()) {
    if (ch == 'N') s.left[y++] = x;
    else s.top[x++] = y - 1;
  }
  return s;
}

// Shape plus the label owning each column (at its bottom) and row (at its
// left end); both index 0 hold the black label.
struct Frame : Shape {
  std::vector<int> column_label, row_label;
  std::vector<int> column_of, row_of;  // by label: column (blue) or row (red), -1 otherwise

  bool labelled(int c, int r) const { return (r == bottom[c]) || (c == left[r]); }
};

Frame frame_of(const LabelledPolyomino& p) {
  auto problems = validate_lpp(p);
  if (!problems.empty()) throw Error(ErrorKind::InvalidLPP, problems.front());
  Frame f;
  static_cast<Shape&>(f) = shape_of(p.upper, p.lower);
  f.column_label.assign(f.m, 0);
  f.row_label.assign(f.n, 0);
  const int k = p.parts.size();
  f.column_of.assign(k + 1, -1);
  f.row_of.assign(k + 1, -1);
  for (const CellLabel& l : p.labels) {
    if (l.colour != Colour::Red) {
      f.column_label[l.column] = l.label;
      if (l.colour == Colour::Blue) f.column_of[l.label] = l.column;
    }
    if (l.colour != Colour::Blue) {
      f.row_label[l.row] = l.label;
      if (l.colour == Colour::Red) f.row_of[l.label] = l.row;
    }
  }
  return f;
}

LabelledPolyomino assemble(const std::vector<int>& bottom, const std::vector<int>& left,
                           const std::vector<int>& column_label, const std::vector<int>& row_label,
                           const OrderedSetPartition& parts) {
  const int m = static_cast<int>(bottom.size()), n = static_cast<int>(left.size());
  std::string lower, upper;
  int y = 0;
  for (int c = 0; c < m; ++c) {
    for (; y < bottom[c]; ++y) lower += 'N';
    lower += 'E';
  }
  for (; y < n; ++y) lower += 'N';
  int x = 0;
  for (int r = 0; r < n; ++r) {
    for (; x < left[r]; ++x) upper += 'E';
    upper += 'N';
  }
  for (; x < m; ++x) upper += 'E';
  LabelledPolyomino p;
  p.upper = LatticePath::parse(upper);
  p.lower = LatticePath::parse(lower);
  p.parts = parts;
  p.labels.push_back({0, 0, column_label[0], Colour::Black});
  for (int c = 1; c < m; ++c) p.labels.push_back({c, bottom[c], column_label[c], Colour::Blue});
  for (int r = 1; r < n; ++r) p.labels.push_back({left[r], r, row_label[r], Colour::Red});
  std::sort(p.labels.begin(), p.labels.end(), [](const CellLabel& a, const CellLabel& b) {
    return std::tie(a.column, a.row) < std::tie(b.column, b.row);
  });
  return p;
}

}  // namespace

std::vector<std::string> validate_lpp(const LabelledPolyomino& p) {
  std::vector<std::string> out;
  if (auto problem = shape_problem(p.upper, p.lower); !problem.empty()) {
    out.push_back(problem);
    return out;
  }
  try {
    p.parts.validate();
  } catch (const Error& e) {
    out.push_back(e.what());
    return out;
  }
  const Shape s = shape_of(p.upper, p.lower);
  if (p.parts.blue.size() != static_cast<std::size_t>(s.m - 1))
    out.push_back(std::to_string(s.m) + " columns need " + std::to_string(s.m - 1) + " blue labels");
  if (p.parts.red.size() != static_cast<std::size_t>(s.n - 1))
    out.push_back(std::to_string(s.n) + " rows need " + std::to_string(s.n - 1) + " red labels");
  if (!out.empty()) return out;

  std::map<std::pair<int, int>, Colour> slot;
  slot[{0, 0}] = Colour::Black;
  for (int c = 1; c < s.m; ++c) slot[{c, s.bottom[c]}] = Colour::Blue;
  for (int r = 1; r < s.n; ++r) slot[{s.left[r], r}] = Colour::Red;

  std::map<std::pair<int, int>, int> at;
  std::vector<int> placed(p.parts.size() + 1, 0);
  for (const CellLabel& l : p.labels) {
    const std::string where = "label " + std::to_string(l.label) + " at (" + std::to_string(l.column) + "," +
                              std::to_string(l.row) + ")";
    if (l.label < 1 || l.label > p.parts.size()) {
      out.push_back(where + " is outside 1.." + std::to_string(p.parts.size()));
      continue;
    }
    if (++placed[l.label] > 1) out.push_back(where + " repeats an earlier label");
    auto it = slot.find({l.column, l.row});
    if (it == slot.end()) {
      out.push_back(where + " is not on a labelled cell");
      continue;
    }
    if (it->second != l.colour)
      out.push_back(where + " is " + std::string(to_string(l.colour)) + " on a " + std::string(to_string(it->second)) + " cell");
    if (p.parts.colour_of(l.label) != l.colour)
      out.push_back(where + " has colour " + std::string(to_string(l.colour)) + " but its block is " +
                    std::string(to_string(p.parts.colour_of(l.label))));
    if (!at.emplace(std::make_pair(l.column, l.row), l.label).second) out.push_back(where + " shares its cell");
  }
  for (const auto& [cell, colour] : slot)
    if (!at.count(cell))
      out.push_back(std::string(to_string(colour)) + " cell (" + std::to_string(cell.first) + "," +
                    std::to_string(cell.second) + ") has no label");
  if (!out.empty()) return out;

  std::vector<std::vector<std::pair<int, int>>> by_row(s.n), by_column(s.m);
  for (const auto& [cell, label] : at) {
    by_column[cell.first].push_back({cell.second, label});
    by_row[cell.second].push_back({cell.first, label});
  }
  for (int c = 0; c < s.m; ++c) {
    std::sort(by_column[c].begin(), by_column[c].end());
    for (std::size_t k = 1; k < by_column[c].size(); ++k)
      if (by_column[c][k].second < by_column[c][k - 1].second)
        out.push_back("column " + std::to_string(c) + " decreases from " + std::to_string(by_column[c][k - 1].second) +
                      " to " + std::to_string(by_column[c][k].second));
  }
  for (int r = 0; r < s.n; ++r) {
    std::sort(by_row[r].begin(), by_row[r].end());
    for (std::size_t k = 1; k < by_row[r].size(); ++k)
      if (by_row[r][k].second > by_row[r][k - 1].second)
        out.push_back("row " + std::to_string(r) + " increases from " + std::to_string(by_row[r][k - 1].second) +
                      " to " + std::to_string(by_row[r][k].second));
  }
  return out;
}

int area(const LabelledPolyomino& p) {
  const Frame f = frame_of(p);
  int count = 0;
  for (int c = 0; c < f.m; ++c)
    for (int r = f.bottom[c]; r <= f.top[c]; ++r)
      if (!f.labelled(c, r) && f.row_label[r] > f.column_label[c]) ++count;
  return count;
}

namespace {

// Visits each run of the bounce path: (true, columns [from, to)) for east
// runs, (false, rows [from, to)) for north runs. Row 0 is consumed first.
template <typename Visit>
void walk_bounce(const Frame& f, Visit visit) {
  int x = 0, y = 1;
  visit(false, 0, 1);
  while (x < f.m || y < f.n) {
    const int nx = static_cast<int>(std::count_if(f.bottom.begin(), f.bottom.end(), [&](int b) { return b < y; }));
    visit(true, x, nx);
    const int ny = static_cast<int>(std::count_if(f.left.begin(), f.left.end(), [&](int l) { return l < nx; }));
    visit(false, y, ny);
    if (nx == x && ny == y) throw Error(ErrorKind::InvalidLPP, "bounce path stalls");
    x = nx;
    y = ny;
  }
}

}  // namespace

LatticePath bounce_path(const LabelledPolyomino& p) {
  const Frame f = frame_of(p);
  std::string steps;
  walk_bounce(f, [&](bool east, int from, int to) { steps.append(to - from, east ? 'E' : 'N'); });
  return LatticePath::parse(steps);
}

std::vector<int> toppling_order(const LabelledPolyomino& p) {
  const Frame f = frame_of(p);
  std::vector<int> order;
  walk_bounce(f, [&](bool east, int from, int to) {
    for (int k = std::max(from, 1); k < to; ++k) order.push_back(east ? f.column_label[k] : f.row_label[k]);
  });
  return order;
}

Configuration alpha(const LabelledPolyomino& p) {
  const Frame f = frame_of(p);
  Configuration c = Configuration::zero(p.parts.size(), p.parts.sink());
  for (int col = 1; col < f.m; ++col) {
    const int j = f.column_label[col];
    for (int r = 0; r < f.bottom[col]; ++r) c[j] += f.row_label[r] > j;
  }
  for (int row = 1; row < f.n; ++row) {
    const int j = f.row_label[row];
    for (int col = 0; col < f.left[row]; ++col) c[j] += f.column_label[col] < j;
  }
  return c;
}

IntVector white_square_counts(const LabelledPolyomino& p) {
  const Frame f = frame_of(p);
  const TieredGraph g = polyomino_graph(p.parts);
  IntVector w = IntVector::Zero(p.parts.size());
  for (int col = 1; col < f.m; ++col) {
    const int j = f.column_label[col];
    for (int r = f.bottom[col] + 1; r < f.n; ++r) w(j - 1) += f.row_label[r] > j;
  }
  for (int row = 1; row < f.n; ++row) {
    const int j = f.row_label[row];
    for (int col = f.left[row] + 1; col < f.m; ++col) w(j - 1) += f.column_label[col] < j;
  }
  w(p.parts.sink() - 1) = g.graph.degree(p.parts.sink());
  return w;
}

bool replay_toppling_order(const LabelledPolyomino& p) {
  const Graph g = polyomino_graph(p.parts).graph;
  const Vertex sink = p.parts.sink();
  const Configuration start = complement(g, alpha(p));
  IntVector r = start.grains;
  for (Vertex w : g.neighbours(sink)) r(w - 1) += 1;
  std::vector<char> seen(g.vertex_count() + 1, 0);
  for (int v : toppling_order(p)) {
    if (v == sink || seen[v] || r(v - 1) < g.degree(v)) return false;
    seen[v] = 1;
    r -= delta(g, v);
    r(sink - 1) = 0;
  }
  return std::count(seen.begin(), seen.end(), 1) == g.vertex_count() - 1 && r == start.grains;
}

bool first_toppling_identity(const LabelledPolyomino& p) {
  const auto order = toppling_order(p);
  if (order.empty()) return true;
  const Frame f = frame_of(p);
  const Graph g = polyomino_graph(p.parts).graph;
  const int j = order.front();
  const std::int64_t a = alpha(p)[j];
  int deg_a = 0, deg_i = 0;
  if (f.column_of[j] >= 0) {
    for (int r = 0; r < f.n; ++r) {
      deg_a += f.row_label[r] > j;
      deg_i += f.row_label[r] == j;
    }
  } else {
    for (int c = 0; c < f.m; ++c) {
      deg_a += f.column_label[c] < j;
      deg_i += f.column_label[c] == j;
    }
  }
  return a - g.degree(j) == a - deg_a + deg_i;
}

LabelledPolyomino alpha_inverse(const Configuration& c, const OrderedSetPartition& u, const Caps& caps) {
  const TieredGraph tg = polyomino_graph(u);
  const Graph& g = tg.graph;
  const int k = u.size();
  if (c.grains.size() != k) throw Error(ErrorKind::UnknownVertex, "configuration size differs from the label count");
  if (c.sink != u.sink())
    throw Error(ErrorKind::WrongSink, "sink " + std::to_string(c.sink) + " is not the black label " + std::to_string(u.sink()));
  const bool parking = k - 1 <= caps.subset_vertices ? is_g_parking(g, c, caps) : is_superstable(g, c);
  if (!parking) throw Error(ErrorKind::NotGParking, "configuration is not G-parking");

  // Rows and columns are placed as labels burn. Blue j burns once c(j)+1
  // adjacent rows are placed and sits on the row that completed the count;
  // red j likewise with columns.
  std::vector<int> column_label{u.sink()}, row_label{u.sink()}, bottom{0}, left{0};
  std::vector<char> placed(k + 1, 0);
  placed[u.sink()] = 1;
  std::vector<int> seen(k + 1, 0), ready_at(k + 1, -1);
  auto note_row = [&](int r) {
    for (int j : u.blue)
      if (!placed[j] && ready_at[j] < 0 && row_label[r] > j && ++seen[j] == c[j] + 1) ready_at[j] = r;
  };
  auto note_column = [&](int col) {
    for (int j : u.red)
      if (!placed[j] && ready_at[j] < 0 && column_label[col] < j && ++seen[j] == c[j] + 1) ready_at[j] = col;
  };
  note_row(0);
  note_column(0);
  while (true) {
    int best = 0;
    for (int j : u.blue)
      if (!placed[j] && ready_at[j] >= 0 &&
          (!best || std::make_pair(ready_at[j], -j) < std::make_pair(ready_at[best], -best)))
        best = j;
    if (best) {
      placed[best] = 1;
      column_label.push_back(best);
      bottom.push_back(ready_at[best]);
      note_column(static_cast<int>(column_label.size()) - 1);
      continue;
    }
    for (int j : u.red)
      if (!placed[j] && ready_at[j] >= 0 &&
          (!best || std::make_pair(ready_at[j], j) < std::make_pair(ready_at[best], best)))
        best = j;
    if (!best) break;
    placed[best] = 1;
    row_label.push_back(best);
    left.push_back(ready_at[best]);
    note_row(static_cast<int>(row_label.size()) - 1);
  }
  if (std::count(placed.begin() + 1, placed.end(), 1) != k)
    throw Error(ErrorKind::NotGParking, "burning stopped before reaching every label");
  LabelledPolyomino p = assemble(bottom, left, column_label, row_label, u);
  if (!(alpha(p) == c)) throw Error(ErrorKind::NotGParking, "reconstruction does not reproduce the configuration");
  return p;
}

std::vector<LabelledPolyomino> enumerate_lpp(const OrderedSetPartition& u, const Caps& caps) {
  const TieredGraph tg = polyomino_graph(u);
  if (count_spanning_trees(tg.graph) > caps.spanning_trees)
    throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(caps.spanning_trees) + " labelled polyominoes (cap trees)");
  const int m = static_cast<int>(u.blue.size()) + 1, n = static_cast<int>(u.red.size()) + 1;

  // Weakly increasing sequences starting at 0 with values below `bound`.
  auto monotone = [](int length, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> seq{0};
    std::function<void()> rec = [&]() {
      if (static_cast<int>(seq.size()) == length) {
        out.push_back(seq);
        return;
      }
      for (int v = seq.back(); v < bound; ++v) {
        seq.push_back(v);
        rec();
        seq.pop_back();
      }
    };
    rec();
    return out;
  };

  std::vector<LabelledPolyomino> out;
  std::vector<int> column_label(m, 0), row_label(n, 0);
  std::vector<char> used(u.size() + 1, 0);
  column_label[0] = row_label[0] = u.sink();
  for (const auto& bottom : monotone(m, n)) {
    for (const auto& left : monotone(n, m)) {
      {
        LabelledPolyomino probe = assemble(bottom, left, column_label, row_label, u);
        if (!shape_problem(probe.upper, probe.lower).empty()) continue;
      }
      std::function<void(int)> rows = [&](int r) {
        if (r == n) {
          out.push_back(assemble(bottom, left, column_label, row_label, u));
          return;
        }
        for (int j : u.red) {
          if (used[j] || column_label[left[r]] > j) continue;
          if (left[r - 1] == left[r] && r - 1 >= 1 && row_label[r - 1] > j) continue;
          bool ok = true;
          for (int col = 1; col < m && ok; ++col)
            if (bottom[col] == r && column_label[col] > j) ok = false;
          if (!ok) continue;
          used[j] = 1;
          row_label[r] = j;
          rows(r + 1);
          used[j] = 0;
        }
      };
      std::function<void(int)> columns = [&](int col) {
        if (col == m) {
          rows(1);
          return;
        }
        for (int j : u.blue) {
          if (used[j]) continue;
          if (bottom[col] == 0 && u.sink() < j) continue;
          if (col - 1 >= 1 && bottom[col - 1] == bottom[col] && column_label[col - 1] < j) continue;
          used[j] = 1;
          column_label[col] = j;
          columns(col + 1);
          used[j] = 0;
        }
      };
      columns(1);
    }
  }
  return out;
}

std::string render_ascii(const LabelledPolyomino& p) {
  const Frame f = frame_of(p);
  std::ostringstream os;
  for (int r = f.n - 1; r >= 0; --r) {
    for (int c = 0; c < f.m; ++c) {
      std::string cell;
      if (!f.inside(c, r)) cell = "";
      else if (r == f.bottom[c]) cell = std::to_string(f.column_label[c]);
      else if (c == f.left[r]) cell = std::to_string(f.row_label[r]);
      else cell = f.row_label[r] > f.column_label[c] ? "*" : ".";
      os << std::string(4 - std::min<std::size_t>(cell.size(), 3), ' ') << cell;
    }
    os << '\n';
  }
  os << "blue " << (p.parts.blue.empty() ? "-" : "") ;
  for (std::size_t k = 0; k < p.parts.blue.size(); ++k) os << (k ? "," : "") << p.parts.blue[k];
  os << "  black " << p.parts.sink() << "  red " << (p.parts.red.empty() ? "-" : "");
  for (std::size_t k = 0; k < p.parts.red.size(); ++k) os << (k ? "," : "") << p.parts.red[k];
  os << '\n';
  return os.str();
}

}  // namespace tiered
