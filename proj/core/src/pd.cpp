#include "dehnkit/pd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace dehnkit {
namespace {

class PdLexer {
 public:
  explicit PdLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_blanks();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  long integer() {
    skip_blanks();
    std::size_t start = pos_;
    bool negative = pos_ < text_.size() && text_[pos_] == '-';
    if (negative) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start + (negative ? 1 : 0)) throw ParseError("expected integer", start);
    if (pos_ - start > 9) throw ParseError("integer too large", start);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }
  std::size_t pos() const { return pos_; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  PdLexer lex(text);
  if (lex.done()) throw ParseError("empty input", 0);

  bool wrapped = lex.accept("PD[");
  std::vector<std::array<long, 4>> raw;
  std::vector<int> tokens;
  std::vector<Nesting> nesting;
  int circles = 0;

  while (!lex.done()) {
    if (wrapped && lex.peek() == ']') {
      lex.accept("]");
      wrapped = false;
      continue;
    }
    std::size_t start = lex.pos();
    if (lex.accept("X[")) {
      std::vector<long> slots;
      slots.push_back(lex.integer());
      while (true) {
        lex.skip_blanks();
        if (lex.peek() == ',') {
          lex.accept(",");
          slots.push_back(lex.integer());
        } else {
          break;
        }
      }
      lex.expect(']');
      if (slots.size() != 4)
        throw ParseError("crossing needs 4 slots, got " + std::to_string(slots.size()), start);
      for (long v : slots)
        if (v <= 0) throw ParseError("edge labels must be positive integers", start);
      tokens.push_back(static_cast<int>(raw.size()));
      raw.push_back({slots[0], slots[1], slots[2], slots[3]});
    } else if (lex.accept("IN(")) {
      long k = lex.integer();
      lex.expect(',');
      long f = lex.integer();
      lex.expect(')');
      if (k < 0 || f < 0) throw ParseError("IN directive needs non-negative indices", start);
      nesting.push_back({static_cast<int>(k), static_cast<int>(f)});
    } else if (lex.accept("O")) {
      char next = lex.peek();
      if (std::isalnum(static_cast<unsigned char>(next)) || next == '[' || next == '(')
        throw ParseError("unexpected token", start);
      tokens.push_back(-1);
      ++circles;
    } else {
      throw ParseError("unexpected token", start);
    }
  }
  if (wrapped) throw ParseError("unterminated PD[", text.size());
  if (raw.empty() && circles == 0) throw ParseError("no crossings or circles", 0);

  // Normalize labels to 0..E-1 by sorted order; each must appear exactly twice.
  std::map<long, int> count;
  for (const auto& x : raw)
    for (long v : x) ++count[v];
  std::map<long, int> id;
  for (const auto& [label, n] : count) {
    if (n != 2)
      throw DiagramError("edge label " + std::to_string(label) + " appears " + std::to_string(n) +
                         " times; every edge must appear exactly twice");
    int next = static_cast<int>(id.size());
    id[label] = next;
  }
  std::vector<std::array<int, 4>> crossings;
  crossings.reserve(raw.size());
  for (const auto& x : raw) crossings.push_back({id[x[0]], id[x[1]], id[x[2]], id[x[3]]});
  return LinkDiagram(std::move(crossings), circles, std::move(tokens), std::move(nesting));
}

LinkDiagram::LinkDiagram(std::vector<std::array<int, 4>> crossings, int num_circles, std::vector<int> token_order,
                         std::vector<Nesting> nesting)
    : crossings_(std::move(crossings)),
      num_circles_(num_circles),
      token_order_(std::move(token_order)),
      nesting_(std::move(nesting)) {
  const int c = num_crossings();
  if (c == 0 && num_circles_ == 0) throw DiagramError("diagram has no crossings and no circles");
  if (token_order_.empty()) {
    for (int i = 0; i < c; ++i) token_order_.push_back(i);
    for (int i = 0; i < num_circles_; ++i) token_order_.push_back(-1);
  }
  occurrences_.assign(static_cast<std::size_t>(2 * c), {kNoPosition, kNoPosition});
  for (int x = 0; x < c; ++x) {
    for (int s = 0; s < 4; ++s) {
      int e = crossings_[x][s];
      if (e < 0 || e >= 2 * c) throw DiagramError("edge ids must be 0.." + std::to_string(2 * c - 1));
      auto& occ = occurrences_[e];
      if (occ[0] == kNoPosition)
        occ[0] = position(x, s);
      else if (occ[1] == kNoPosition)
        occ[1] = position(x, s);
      else
        throw DiagramError("edge " + std::to_string(e + 1) + " appears more than twice");
    }
  }
  for (int e = 0; e < 2 * c; ++e)
    if (occurrences_[e][1] == kNoPosition)
      throw DiagramError("edge " + std::to_string(e + 1) + " appears only once");
  orient();
  build_pieces();
  for (const auto& n : nesting_)
    if (n.piece < 0 || n.piece >= num_pieces())
      throw DiagramError("IN(" + std::to_string(n.piece) + "," + std::to_string(n.face) + "): no such piece");
}

Position LinkDiagram::partner(Position p) const {
  const auto& occ = occurrences_[edge_at(p)];
  return occ[0] == p ? occ[1] : occ[0];
}

void LinkDiagram::orient() {
  const int c = num_crossings();
  edges_.assign(static_cast<std::size_t>(2 * c + num_circles_), Edge{});
  std::vector<char> seen(static_cast<std::size_t>(2 * c), 0);
  std::vector<std::vector<int>> comps;

  for (int start = 0; start < 2 * c; ++start) {
    if (seen[start]) continue;
    // Trace the strand with an arbitrary direction: enter at occurrence[0].
    std::vector<std::pair<int, Position>> trace;  // (edge, head position)
    int e = start;
    Position head = occurrences_[e][0];
    while (true) {
      trace.emplace_back(e, head);
      seen[e] = 1;
      Position next_tail = position(crossing_of(head), slot_of(head) + 2);
      e = edge_at(next_tail);
      const auto& occ = occurrences_[e];
      head = occ[0] == next_tail ? occ[1] : occ[0];
      if (e == start) {
        if (next_tail != (occurrences_[start][0] == trace.front().second ? occurrences_[start][1]
                                                                          : occurrences_[start][0]))
          throw DiagramError("strand through edge " + std::to_string(start + 1) + " does not close up");
        break;
      }
      if (seen[e]) throw DiagramError("strand through edge " + std::to_string(start + 1) + " revisits an edge");
    }
    // Decide the direction from the under-strand slots, if any.
    int votes_forward = 0, votes_backward = 0;
    for (const auto& [edge, h] : trace) {
      Position t = occurrences_[edge][0] == h ? occurrences_[edge][1] : occurrences_[edge][0];
      if (slot_of(h) == 0 || slot_of(t) == 2) ++votes_forward;
      if (slot_of(h) == 2 || slot_of(t) == 0) ++votes_backward;
    }
    bool forward = true;
    if (votes_forward && votes_backward)
      throw DiagramError("inconsistent orientation along the strand through edge " + std::to_string(start + 1) +
                         ": under-strands disagree");
    if (votes_backward) {
      forward = false;
    } else if (!votes_forward && trace.size() > 1) {
      // Over-only component: follow increasing labels.
      forward = trace[1].first < trace.back().first;
    }
    std::vector<int> comp;
    if (forward) {
      for (const auto& [edge, h] : trace) {
        edges_[edge].head = h;
        edges_[edge].tail = occurrences_[edge][0] == h ? occurrences_[edge][1] : occurrences_[edge][0];
        comp.push_back(edge);
      }
    } else {
      for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        const auto& [edge, h] = *it;
        edges_[edge].tail = h;
        edges_[edge].head = occurrences_[edge][0] == h ? occurrences_[edge][1] : occurrences_[edge][0];
        comp.push_back(edge);
      }
      // Start the cycle at the smallest edge.
      std::rotate(comp.begin(), comp.end() - 1, comp.end());
    }
    comps.push_back(std::move(comp));
  }
  for (int i = 0; i < num_circles_; ++i) {
    int e = circle_edge(i);
    edges_[e].circle = true;
    comps.push_back({e});
  }
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  for (std::size_t j = 0; j < comps.size(); ++j)
    for (int e : comps[j]) edges_[e].component = static_cast<int>(j);
  components_ = std::move(comps);
}

void LinkDiagram::build_pieces() {
  const int c = num_crossings();
  std::vector<int> parent(static_cast<std::size_t>(c));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < 2 * c; ++e) {
    int a = find(crossing_of(occurrences_[e][0])), b = find(crossing_of(occurrences_[e][1]));
    if (a != b) parent[a] = b;
  }
  std::map<int, int> piece_of_root;
  piece_of_edge_.assign(edges_.size(), -1);
  int circle = 0;
  for (int tok : token_order_) {
    if (tok < 0) {
      Piece p;
      p.circle = circle;
      p.edges.push_back(circle_edge(circle));
      piece_of_edge_[circle_edge(circle)] = static_cast<int>(pieces_.size());
      pieces_.push_back(std::move(p));
      ++circle;
      continue;
    }
    int root = find(tok);
    auto [it, inserted] = piece_of_root.try_emplace(root, static_cast<int>(pieces_.size()));
    if (inserted) pieces_.emplace_back();
    pieces_[it->second].crossings.push_back(tok);
  }
  for (auto& p : pieces_) {
    if (p.circle >= 0) continue;
    std::sort(p.crossings.begin(), p.crossings.end());
  }
  for (int e = 0; e < 2 * c; ++e) {
    int pc = piece_of_root.at(find(crossing_of(occurrences_[e][0])));
    piece_of_edge_[e] = pc;
    pieces_[pc].edges.push_back(e);
  }
}

bool LinkDiagram::over_runs_1_to_3(int crossing) const {
  return edges_[crossings_[crossing][1]].head == position(crossing, 1);
}

int LinkDiagram::crossing_sign(int crossing) const { return over_runs_1_to_3(crossing) ? -1 : 1; }

LinkDiagram LinkDiagram::with_crossing_changed(int crossing) const {
  auto xs = crossings_;
  const auto old = xs.at(static_cast<std::size_t>(crossing));
  if (over_runs_1_to_3(crossing))
    xs[crossing] = {old[1], old[2], old[3], old[0]};
  else
    xs[crossing] = {old[3], old[0], old[1], old[2]};
  return LinkDiagram(std::move(xs), num_circles_, token_order_, nesting_);
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream out;
  bool first = true;
  int circle = 0;
  for (int tok : token_order_) {
    if (!first) out << ' ';
    first = false;
    if (tok < 0) {
      out << 'O';
      ++circle;
      continue;
    }
    const auto& x = crossings_[tok];
    out << "X[" << x[0] + 1 << ',' << x[1] + 1 << ',' << x[2] + 1 << ',' << x[3] + 1 << ']';
  }
  for (const auto& n : nesting_) out << " IN(" << n.piece << ',' << n.face << ')';
  return out.str();
}

}  // namespace dehnkit
