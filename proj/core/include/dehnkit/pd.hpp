#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dehnkit {

/// Malformed PD text. `position` is the byte offset where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Syntactically fine input that does not describe a link diagram.
class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A slot is one of the four half-edges at a crossing. Position = 4*crossing + slot.
using Position = int;
inline constexpr Position kNoPosition = -1;
inline int crossing_of(Position p) { return p / 4; }
inline int slot_of(Position p) { return p % 4; }
inline Position position(int crossing, int slot) { return 4 * crossing + ((slot % 4) + 4) % 4; }

/// `IN(k, f)`: split piece k sits inside face f of another piece.
struct Nesting {
  int piece = 0;
  int face = 0;
  bool operator==(const Nesting&) const = default;
};

struct Edge {
  Position tail = kNoPosition;  // slot the edge leaves from
  Position head = kNoPosition;  // slot the edge enters
  int component = 0;            // link component
  bool circle = false;          // zero-crossing unknot component
};

/// Oriented link diagram given by PD code.
///
/// Slots at each crossing are listed counterclockwise starting with the
/// incoming under-strand, so slot 0 enters, slot 2 leaves, and the over-strand
/// runs between slots 1 and 3. Edges are numbered 0..E-1 internally and
/// labelled 1..E in text. Zero-crossing circles get the labels after the
/// crossing edges and are oriented counterclockwise.
///
/// A "piece" is a connected component of the underlying projection; a
/// diagram with more than one piece is split.
class LinkDiagram {
 public:
  /// Validates and orients a raw PD description.
  /// `tokens` lists, in input order, either a crossing index or -1 for an O circle.
  LinkDiagram(std::vector<std::array<int, 4>> crossings, int num_circles, std::vector<int> token_order,
              std::vector<Nesting> nesting);

  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_circles() const { return num_circles_; }
  int num_components() const { return static_cast<int>(components_.size()); }
  int num_pieces() const { return static_cast<int>(pieces_.size()); }

  const std::vector<std::array<int, 4>>& crossings() const { return crossings_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edges of each link component in traversal order.
  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::vector<Nesting>& nesting() const { return nesting_; }
  const std::vector<int>& token_order() const { return token_order_; }

  int edge_at(Position p) const { return crossings_[crossing_of(p)][slot_of(p)]; }
  /// The other slot occupied by the edge at p.
  Position partner(Position p) const;
  /// Edge id of the i-th zero-crossing circle.
  int circle_edge(int i) const { return 2 * num_crossings() + i; }

  /// True when the over-strand runs from slot 1 to slot 3.
  bool over_runs_1_to_3(int crossing) const;
  /// Writhe sign of a crossing (+1 right-handed).
  int crossing_sign(int crossing) const;

  /// Pieces: crossings and circle edges belonging to each connected part of
  /// the projection, numbered by first appearance in the input.
  struct Piece {
    std::vector<int> crossings;
    std::vector<int> edges;
    int circle = -1;  // circle index if the piece is a lone O
  };
  const std::vector<Piece>& pieces() const { return pieces_; }
  int piece_of_edge(int e) const { return piece_of_edge_[e]; }
  int piece_of_crossing(int c) const { return piece_of_edge_[crossings_[c][0]]; }

  /// Same diagram with one crossing's over/under information swapped.
  LinkDiagram with_crossing_changed(int crossing) const;

  /// Canonical PD text: `X[a,b,c,d]` terms, `O` tokens, `IN(k,f)` directives.
  std::string to_pd() const;

 private:
  void orient();
  void build_pieces();

  std::vector<std::array<int, 4>> crossings_;
  int num_circles_ = 0;
  std::vector<int> token_order_;
  std::vector<Nesting> nesting_;
  std::vector<std::array<Position, 2>> occurrences_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> components_;
  std::vector<Piece> pieces_;
  std::vector<int> piece_of_edge_;
};

/// Parse PD text such as "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]".
/// Grammar: whitespace separated `X[a,b,c,d]` (positive integers), `O`
/// (zero-crossing circle) and `IN(k,f)` nesting directives. Commas between
/// terms and an optional `PD[...]` wrapper are accepted.
LinkDiagram parse_pd(std::string_view text);

}  // namespace dehnkit
