#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "planarcanon/rotation.hpp"

namespace planarcanon {

// Relational structure of the pebble game: a plain graph, a graph with the
// rotation ternary relation, or a graph with the layout ternary+quaternary
// relations.
class Structure {
 public:
  enum class Kind { graph, rotation, layout };

  static Structure graph(Graph g);
  static Structure rotation(RotationSystem r);
  static Structure layout(LayoutSystem l);

  Kind kind() const { return kind_; }
  const Graph& g() const { return g_; }
  int size() const { return g_.vertex_count(); }

  bool ternary(int a, int b, int c) const;
  bool quaternary(int b1, int a1, int a2, int b2) const;

  const RotationSystem* rot() const { return rot_.get(); }

  // Cached all-pairs BFS distances (used by strategies and adversaries).
  const std::vector<Dist>& dists(int v) const;

 private:
  Structure() = default;
  Kind kind_ = Kind::graph;
  Graph g_;
  std::shared_ptr<const RotationSystem> rot_;
  std::shared_ptr<const LayoutSystem> lay_;
  std::shared_ptr<std::vector<std::vector<Dist>>> dist_cache_;
};

// Pebble placements: slot -> vertex or -1 (off board); the same slots are
// on board on both sides.
struct GamePosition {
  int k = 0;
  std::vector<int> left, right;
  int rounds = 0;

  static GamePosition empty(int k);
  bool on_board(int slot) const { return left[slot] != -1; }
  int on_board_count() const;
};

struct Violation {
  std::string relation;     // "equality" | "edge" | "ternary" | "quaternary"
  std::vector<int> slots;
};

bool partial_iso(const Structure& a, const Structure& b, const GamePosition& pos,
                 Violation* why = nullptr);

// ---------------------------------------------------------------------------
// Exact game-value solver (memoized minimax, small instances only).

struct SolveOutcome {
  enum class Kind { spoiler_wins, survives, budget_exceeded };
  Kind kind;
  int rounds = 0;  // winning round count when spoiler_wins
};

class DepthSolver {
 public:
  DepthSolver(const Structure& a, const Structure& b, int k,
              std::size_t memo_budget = 1u << 24);

  SolveOutcome solve(int rmax);
  SolveOutcome solve(int rmax, const GamePosition& start);

  // value_r query: can Spoiler force a win within r rounds from `pos`?
  bool spoiler_wins_within(const GamePosition& pos, int r);

  const Structure& a() const { return a_; }
  const Structure& b() const { return b_; }
  int pebbles() const { return k_; }

 private:
  using Key = unsigned __int128;
  struct Entry {
    int win_at = 1 << 29;   // minimal r with a forced win, if known
    int survive_at = -1;    // maximal r with survival proven
    signed char pi = -1;    // cached partial-isomorphism flag
  };
  struct KeyHash {
    std::size_t operator()(Key k) const;
  };

  // Positions are keyed by the sorted multiset of (left,right) pebble pairs;
  // pebble slots are interchangeable, so this quotient is value-preserving.
  using Multiset = std::vector<std::pair<int, int>>;
  static Key encode(const Multiset& m);
  Multiset from_position(const GamePosition& pos) const;

  bool wins_within(Multiset& m, int r);
  bool multiset_partial_iso(const Multiset& m) const;

  const Structure a_, b_;
  int k_;
  std::size_t budget_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
};

// ---------------------------------------------------------------------------
// Match engine: scripted Spoiler strategies vs pluggable Duplicator
// adversaries, producing replayable transcripts.

struct Move {
  int side;   // 0 = left structure, 1 = right structure
  int slot;
  int vertex;
};

struct SpoilerClaim {};  // current position already violates partial iso

using SpoilerAction = std::variant<Move, SpoilerClaim>;

struct PlayView {
  const Structure& a;
  const Structure& b;
  const GamePosition& pos;
  int rmax;
};

class SpoilerStrategy {
 public:
  virtual ~SpoilerStrategy() = default;
  virtual SpoilerAction next(const PlayView& view) = 0;
};

class DuplicatorAdversary {
 public:
  virtual ~DuplicatorAdversary() = default;
  virtual int respond(const PlayView& view, const Move& move) = 0;
};

struct TranscriptMove {
  int side;
  int pebble;
  int vertex;
};

struct Transcript {
  int k = 0;
  int rmax = 0;
  std::vector<TranscriptMove> moves;
  std::string winner;  // "spoiler" | "duplicator"
  int round = 0;
  std::string violation;  // which relation broke, when Spoiler wins
  std::string error;      // strategy precondition failure, if any
};

Transcript play(const Structure& a, const Structure& b, SpoilerStrategy& spoiler,
                DuplicatorAdversary& duplicator, int k, int rmax,
                GamePosition start);

// ---------------------------------------------------------------------------
// Scripted Spoiler strategies.

// Halving strategy: from pebbled pairs (slot_u, slot_v) with unequal
// distances (the smaller one finite), wins within ceil(log2 d) rounds using
// three pebbles.
std::unique_ptr<SpoilerStrategy> spoiler_halving(int slot_u, int slot_v,
                                                 int spare_slot);

// Metric guard: as halving, plus the extra move when one side is infinite
// and the other finite but larger than |V| of the infinite side. Reuses the
// three slots.
std::unique_ptr<SpoilerStrategy> spoiler_metric_guard(int slot_u, int slot_v,
                                                      int spare_slot);

// Generalized halving over designated vertex-tuple sequences. Slots:
// aligned_slots and conflict_slots each hold one t-tuple per side at start
// (aligned on (seq_a[0], seq_b[0]); conflict pair must disagree with the
// sequences at some index > 0); scratch_slots are free. The endgame factory
// receives the aligned index and the two slot groups once the interval
// shrinks to one step.
struct EndgameContext {
  int aligned_index;               // alpha: conflict sits at alpha+1
  std::vector<int> aligned_slots;  // holds (seq_a[alpha], seq_b[alpha])
  std::vector<int> conflict_slots;
  bool conflict_designated_left;   // which side matches its sequence
};
using EndgameFactory =
    std::function<std::unique_ptr<SpoilerStrategy>(const EndgameContext&)>;

std::unique_ptr<SpoilerStrategy> spoiler_generalized_halving(
    std::vector<std::vector<int>> seq_a, std::vector<std::vector<int>> seq_b,
    int start_conflict_index, std::vector<int> aligned_slots,
    std::vector<int> conflict_slots, std::vector<int> scratch_slots,
    EndgameFactory endgame);

// Coordinate strategy on rotation-system structures (5 pebbles, slots 0-4).
std::unique_ptr<SpoilerStrategy> spoiler_coordinate_strategy();

// Optimal Spoiler play backed by an exact solver.
std::unique_ptr<SpoilerStrategy> spoiler_solver(DepthSolver& solver);

// ---------------------------------------------------------------------------
// Duplicator adversaries.

std::unique_ptr<DuplicatorAdversary> duplicator_optimal(DepthSolver& solver);
std::unique_ptr<DuplicatorAdversary> duplicator_greedy_metric();
std::unique_ptr<DuplicatorAdversary> duplicator_random(std::uint32_t seed);

}  // namespace planarcanon
