#include "planarcanon/game.hpp"

#include <algorithm>

#include "planarcanon/coords.hpp"
#include <map>
#include <random>

namespace planarcanon {

// ---------------------------------------------------------------------------
// Structure

Structure Structure::graph(Graph g) {
  Structure s;
  s.kind_ = Kind::graph;
  s.g_ = std::move(g);
  return s;
}

Structure Structure::rotation(RotationSystem r) {
  Structure s;
  s.kind_ = Kind::rotation;
  s.g_ = r.graph();
  s.rot_ = std::make_shared<RotationSystem>(std::move(r));
  return s;
}

Structure Structure::layout(LayoutSystem l) {
  Structure s;
  s.kind_ = Kind::layout;
  s.g_ = l.graph();
  s.lay_ = std::make_shared<LayoutSystem>(std::move(l));
  return s;
}

bool Structure::ternary(int a, int b, int c) const {
  switch (kind_) {
    case Kind::graph:
      return false;
    case Kind::rotation:
      if (!g_.has_edge(a, b) || !g_.has_edge(a, c)) return false;
      return rot_->succ(a, b) == c;
    case Kind::layout: {
      if (b == c || !g_.has_edge(a, b) || !g_.has_edge(a, c)) return false;
      auto nb = lay_->cyc_neighbors(a, b);
      return nb[0] == c || nb[1] == c;
    }
  }
  return false;
}

bool Structure::quaternary(int b1, int a1, int a2, int b2) const {
  if (kind_ != Kind::layout) return false;
  return lay_->quad(b1, a1, a2, b2);
}

const std::vector<Dist>& Structure::dists(int v) const {
  if (!dist_cache_) {
    auto cache = std::make_shared<std::vector<std::vector<Dist>>>();
    cache->reserve(g_.vertex_count());
    for (int s = 0; s < g_.vertex_count(); ++s)
      cache->push_back(bfs_distances(g_, s));
    const_cast<Structure*>(this)->dist_cache_ = std::move(cache);
  }
  return (*dist_cache_)[v];
}

// ---------------------------------------------------------------------------
// Positions and partial isomorphism

GamePosition GamePosition::empty(int k) {
  GamePosition p;
  p.k = k;
  p.left.assign(k, -1);
  p.right.assign(k, -1);
  return p;
}

int GamePosition::on_board_count() const {
  int c = 0;
  for (int v : left)
    if (v != -1) ++c;
  return c;
}

namespace {

bool pairs_partial_iso(const Structure& a, const Structure& b,
                       const std::vector<std::pair<int, int>>& ps,
                       const std::vector<int>* slots, Violation* why) {
  const int s = static_cast<int>(ps.size());
  auto report = [&](const char* rel, std::initializer_list<int> idx) {
    if (!why) return;
    why->relation = rel;
    why->slots.clear();
    for (int i : idx) why->slots.push_back(slots ? (*slots)[i] : i);
  };
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      const bool eql = ps[i].first == ps[j].first;
      const bool eqr = ps[i].second == ps[j].second;
      if (eql != eqr) {
        report("equality", {i, j});
        return false;
      }
      if (eql) continue;
      if (a.g().has_edge(ps[i].first, ps[j].first) !=
          b.g().has_edge(ps[i].second, ps[j].second)) {
        report("edge", {i, j});
        return false;
      }
    }
  if (a.kind() != Structure::Kind::graph) {
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        for (int h = 0; h < s; ++h)
          if (a.ternary(ps[i].first, ps[j].first, ps[h].first) !=
              b.ternary(ps[i].second, ps[j].second, ps[h].second)) {
            report("ternary", {i, j, h});
            return false;
          }
  }
  if (a.kind() == Structure::Kind::layout) {
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        for (int h = 0; h < s; ++h)
          for (int e = 0; e < s; ++e)
            if (a.quaternary(ps[i].first, ps[j].first, ps[h].first, ps[e].first) !=
                b.quaternary(ps[i].second, ps[j].second, ps[h].second, ps[e].second)) {
              report("quaternary", {i, j, h, e});
              return false;
            }
  }
  return true;
}

}  // namespace

bool partial_iso(const Structure& a, const Structure& b, const GamePosition& pos,
                 Violation* why) {
  if (a.kind() != b.kind())
    fail(ErrorCode::Precondition, "structures of different kinds");
  std::vector<std::pair<int, int>> ps;
  std::vector<int> slots;
  for (int i = 0; i < pos.k; ++i) {
    if ((pos.left[i] == -1) != (pos.right[i] == -1))
      fail(ErrorCode::Precondition, "one-sided pebble placement");
    if (pos.left[i] != -1) {
      ps.emplace_back(pos.left[i], pos.right[i]);
      slots.push_back(i);
    }
  }
  return pairs_partial_iso(a, b, ps, &slots, why);
}

// ---------------------------------------------------------------------------
// DepthSolver

std::size_t DepthSolver::KeyHash::operator()(Key k) const {
  std::uint64_t lo = static_cast<std::uint64_t>(k);
  std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
  std::uint64_t x = lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x517cc1b727220a95ULL);
  x ^= x >> 32;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 29;
  return static_cast<std::size_t>(x);
}

DepthSolver::DepthSolver(const Structure& a, const Structure& b, int k,
                         std::size_t memo_budget)
    : a_(a), b_(b), k_(k), budget_(memo_budget) {
  if (k < 1) fail(ErrorCode::Precondition, "need at least one pebble");
  if (k > 8 || a.size() > 255 || b.size() > 255)
    fail(ErrorCode::PositionBudget, "instance too large for the exact solver");
  if (a.kind() != b.kind())
    fail(ErrorCode::Precondition, "structures of different kinds");
}

DepthSolver::Key DepthSolver::encode(const Multiset& m) {
  Key key = 1;  // sentinel bit distinguishes sizes
  for (auto [l, r] : m) {
    key <<= 16;
    key |= static_cast<Key>((l << 8) | r);
  }
  return key;
}

DepthSolver::Multiset DepthSolver::from_position(const GamePosition& pos) const {
  Multiset m;
  for (int i = 0; i < pos.k; ++i)
    if (pos.left[i] != -1) m.emplace_back(pos.left[i], pos.right[i]);
  std::sort(m.begin(), m.end());
  return m;
}

bool DepthSolver::multiset_partial_iso(const Multiset& m) const {
  return pairs_partial_iso(a_, b_, m, nullptr, nullptr);
}

bool DepthSolver::wins_within(Multiset& m, int r) {
  if (memo_.size() > budget_)
    fail(ErrorCode::PositionBudget, "solver position budget exceeded");
  Entry& e = memo_[encode(m)];  // node addresses are stable across inserts
  if (e.pi == -1) {
    e.pi = multiset_partial_iso(m) ? 1 : 0;
    if (!e.pi) e.win_at = 0;
  }
  if (r >= e.win_at) return true;
  if (r <= e.survive_at) return false;
  // Here pi holds and r >= 1.

  const int s = static_cast<int>(m.size());
  const bool must_remove = (s == k_);
  // With a free slot, removing a pebble never helps Spoiler (the kept
  // position dominates), so removals are enumerated only at full boards.
  const int remove_options = must_remove ? s : 1;
  for (int rm = 0; rm < remove_options; ++rm) {
    if (must_remove && rm > 0 && m[rm] == m[rm - 1]) continue;
    Multiset base = m;
    if (must_remove) base.erase(base.begin() + rm);
    for (int side = 0; side < 2; ++side) {
      const int nv = (side == 0) ? a_.size() : b_.size();
      const int nresp = (side == 0) ? b_.size() : a_.size();
      for (int w = 0; w < nv; ++w) {
        bool all = true;
        for (int u = 0; u < nresp && all; ++u) {
          Multiset child = base;
          child.emplace_back(side == 0 ? w : u, side == 0 ? u : w);
          std::sort(child.begin(), child.end());
          if (!wins_within(child, r - 1)) all = false;
        }
        if (all) {
          Entry& e2 = memo_[encode(m)];
          e2.win_at = std::min(e2.win_at, r);
          return true;
        }
      }
    }
  }
  Entry& e3 = memo_[encode(m)];
  e3.survive_at = std::max(e3.survive_at, r);
  return false;
}

bool DepthSolver::spoiler_wins_within(const GamePosition& pos, int r) {
  Multiset m = from_position(pos);
  return wins_within(m, r);
}

SolveOutcome DepthSolver::solve(int rmax) {
  return solve(rmax, GamePosition::empty(k_));
}

SolveOutcome DepthSolver::solve(int rmax, const GamePosition& start) {
  try {
    for (int r = 0; r <= rmax; ++r)
      if (spoiler_wins_within(start, r)) return {SolveOutcome::Kind::spoiler_wins, r};
    return {SolveOutcome::Kind::survives, rmax};
  } catch (const Error& err) {
    if (err.code() == ErrorCode::PositionBudget)
      return {SolveOutcome::Kind::budget_exceeded, 0};
    throw;
  }
}

// ---------------------------------------------------------------------------
// Match engine

Transcript play(const Structure& a, const Structure& b, SpoilerStrategy& spoiler,
                DuplicatorAdversary& duplicator, int k, int rmax,
                GamePosition start) {
  Transcript t;
  t.k = k;
  t.rmax = rmax;
  GamePosition pos = start;
  pos.k = k;
  pos.left.resize(k, -1);
  pos.right.resize(k, -1);
  PlayView view{a, b, pos, rmax};

  for (;;) {
    Violation why;
    if (!partial_iso(a, b, pos, &why)) {
      t.winner = "spoiler";
      t.round = pos.rounds;
      t.violation = why.relation;
      return t;
    }
    if (pos.rounds >= rmax) {
      t.winner = "duplicator";
      t.round = rmax;
      return t;
    }
    SpoilerAction action;
    try {
      action = spoiler.next(view);
    } catch (const Error& e) {
      t.error = e.what();
      t.winner = "duplicator";
      t.round = pos.rounds;
      return t;
    }
    if (std::holds_alternative<SpoilerClaim>(action)) {
      // The engine already verified the position is consistent.
      t.error = "spoiler claimed a win at a consistent position";
      t.winner = "duplicator";
      t.round = pos.rounds;
      return t;
    }
    Move mv = std::get<Move>(action);
    if (mv.slot < 0 || mv.slot >= k)
      fail(ErrorCode::Precondition, "move uses a slot outside the pebble budget");
    (mv.side == 0 ? pos.left : pos.right)[mv.slot] = mv.vertex;
    t.moves.push_back({mv.side, mv.slot, mv.vertex});
    int resp = duplicator.respond(view, mv);
    (mv.side == 0 ? pos.right : pos.left)[mv.slot] = resp;
    t.moves.push_back({1 - mv.side, mv.slot, resp});
    ++pos.rounds;
  }
}

// ---------------------------------------------------------------------------
// Shared helpers for strategies

namespace {

// Lexicographically smallest geodesic between two vertices.
std::vector<int> lex_geodesic(const Graph& g, int from, int to) {
  auto dist = bfs_distances(g, to);
  if (!is_finite(dist[from]))
    fail(ErrorCode::Precondition, "no path between the endpoints");
  std::vector<int> path{from};
  int cur = from;
  while (cur != to) {
    for (int w : g.neighbors(cur))
      if (dist[w] + 1 == dist[cur]) {
        cur = w;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

const Structure& side_structure(const PlayView& v, int side) {
  return side == 0 ? v.a : v.b;
}

int slot_vertex(const PlayView& v, int side, int slot) {
  return side == 0 ? v.pos.left[slot] : v.pos.right[slot];
}

// ---------------------------------------------------------------------------
// Halving

class HalvingSpoiler : public SpoilerStrategy {
 public:
  HalvingSpoiler(int su, int sv, int sp) : su_(su), sv_(sv), sp_(sp) {}

  SpoilerAction next(const PlayView& view) override {
    if (!initialized_) init(view);
    if (awaiting_) reassign(view);
    const Dist dw = pair_dist(view, work_);
    const Dist dother = pair_dist(view, 1 - work_);
    if (dw >= dother)
      fail(ErrorCode::Internal, "halving invariant broken");
    if (dw <= 1)
      fail(ErrorCode::Internal, "halving asked to move at a decided position");
    const Structure& s = side_structure(view, work_);
    int u = slot_vertex(view, work_, su_);
    int v = slot_vertex(view, work_, sv_);
    auto path = lex_geodesic(s.g(), u, v);
    int mid = path[(path.size() - 1 + 1) / 2];  // ceil(d/2) steps from u
    awaiting_ = true;
    return Move{work_, sp_, mid};
  }

 private:
  void init(const PlayView& view) {
    initialized_ = true;
    Dist da = pair_dist(view, 0);
    Dist db = pair_dist(view, 1);
    if (da == db)
      fail(ErrorCode::Precondition, "halving needs unequal pebbled distances");
    if (!is_finite(std::min(da, db)))
      fail(ErrorCode::Precondition, "halving needs one finite distance");
    work_ = (da < db) ? 0 : 1;
  }

  Dist pair_dist(const PlayView& view, int side) const {
    const Structure& s = side_structure(view, side);
    return s.dists(slot_vertex(view, side, su_))[slot_vertex(view, side, sv_)];
  }

  Dist dist_between(const PlayView& view, int side, int slot1, int slot2) const {
    const Structure& s = side_structure(view, side);
    return s.dists(slot_vertex(view, side, slot1))[slot_vertex(view, side, slot2)];
  }

  void reassign(const PlayView& view) {
    awaiting_ = false;
    // Keep the half with a strictly smaller work-side distance.
    Dist w1 = dist_between(view, work_, su_, sp_);
    Dist o1 = dist_between(view, 1 - work_, su_, sp_);
    if (w1 < o1) {
      std::swap(sv_, sp_);  // pair becomes (u, mid); old v slot is spare
      return;
    }
    Dist w2 = dist_between(view, work_, sp_, sv_);
    Dist o2 = dist_between(view, 1 - work_, sp_, sv_);
    if (w2 < o2) {
      std::swap(su_, sp_);  // pair becomes (mid, v)
      return;
    }
    fail(ErrorCode::Internal, "no half kept the distance gap");
  }

  int su_, sv_, sp_;
  int work_ = 0;
  bool initialized_ = false;
  bool awaiting_ = false;
};

// ---------------------------------------------------------------------------
// Metric guard

class MetricGuardSpoiler : public SpoilerStrategy {
 public:
  MetricGuardSpoiler(int su, int sv, int sp) : su_(su), sv_(sv), sp_(sp) {}

  SpoilerAction next(const PlayView& view) override {
    if (inner_) return inner_->next(view);
    Dist da = dist(view, 0);
    Dist db = dist(view, 1);
    if (da == db)
      fail(ErrorCode::Precondition, "metric guard needs unequal distances");
    if (placed_extra_) {
      // Pair (u, w) now straddles the sides; halve on (su, sp).
      inner_ = std::make_unique<HalvingSpoiler>(su_, sp_, sv_);
      return inner_->next(view);
    }
    const int inf_side = is_finite(da) ? (is_finite(db) ? -1 : 1) : 0;
    if (inf_side == -1 ||
        std::min(da, db) <= side_structure(view, inf_side).size()) {
      inner_ = std::make_unique<HalvingSpoiler>(su_, sv_, sp_);
      return inner_->next(view);
    }
    // d is infinite on one side and larger than that side's order on the
    // other: pebble the geodesic vertex at distance n from u'.
    const int fin = 1 - inf_side;
    const int n = side_structure(view, inf_side).size();
    const Structure& s = side_structure(view, fin);
    auto path = lex_geodesic(s.g(), slot_vertex(view, fin, su_),
                             slot_vertex(view, fin, sv_));
    placed_extra_ = true;
    return Move{fin, sp_, path[n]};
  }

 private:
  Dist dist(const PlayView& view, int side) const {
    const Structure& s = side_structure(view, side);
    return s.dists(slot_vertex(view, side, su_))[slot_vertex(view, side, sv_)];
  }

  int su_, sv_, sp_;
  bool placed_extra_ = false;
  std::unique_ptr<SpoilerStrategy> inner_;
};

// ---------------------------------------------------------------------------
// Generalized halving

class GeneralizedHalvingSpoiler : public SpoilerStrategy {
 public:
  GeneralizedHalvingSpoiler(std::vector<std::vector<int>> seq_a,
                            std::vector<std::vector<int>> seq_b,
                            int start_conflict, std::vector<int> aligned,
                            std::vector<int> conflict, std::vector<int> scratch,
                            EndgameFactory endgame)
      : seq_a_(std::move(seq_a)),
        seq_b_(std::move(seq_b)),
        alpha_(0),
        beta_(start_conflict),
        aligned_(std::move(aligned)),
        conflict_(std::move(conflict)),
        scratch_(std::move(scratch)),
        endgame_factory_(std::move(endgame)) {
    if (seq_a_.empty() || seq_a_.size() != seq_b_.size())
      fail(ErrorCode::Precondition, "sequence sizes disagree");
    t_ = static_cast<int>(seq_a_[0].size());
    for (const auto& tup : seq_a_)
      if (static_cast<int>(tup.size()) != t_)
        fail(ErrorCode::Precondition, "ragged tuple sequence");
    for (const auto& tup : seq_b_)
      if (static_cast<int>(tup.size()) != t_)
        fail(ErrorCode::Precondition, "ragged tuple sequence");
    if (beta_ <= alpha_ || beta_ >= static_cast<int>(seq_a_.size()))
      fail(ErrorCode::Precondition, "conflict index out of range");
    if (static_cast<int>(aligned_.size()) != t_ ||
        static_cast<int>(conflict_.size()) != t_ ||
        static_cast<int>(scratch_.size()) != t_)
      fail(ErrorCode::Precondition, "slot group sizes must equal the tuple size");
  }

  SpoilerAction next(const PlayView& view) override {
    if (endgame_) return endgame_->next(view);
    if (!checked_start_) check_start(view);
    if (pebbling_ < t_ && pebbling_ >= 0) return pebble_component(view);
    if (pebbling_ == t_) classify(view);
    if (beta_ - alpha_ == 1) {
      EndgameContext ctx{alpha_, aligned_, conflict_, designated_left_};
      endgame_ = endgame_factory_(ctx);
      if (!endgame_)
        fail(ErrorCode::Precondition, "endgame factory returned nothing");
      return endgame_->next(view);
    }
    mid_ = (alpha_ + beta_) / 2;
    pebbling_ = 0;
    return pebble_component(view);
  }

 private:
  void check_start(const PlayView& view) {
    checked_start_ = true;
    for (int c = 0; c < t_; ++c) {
      if (slot_vertex(view, 0, aligned_[c]) != seq_a_[alpha_][c] ||
          slot_vertex(view, 1, aligned_[c]) != seq_b_[alpha_][c])
        fail(ErrorCode::Precondition, "aligned slots do not match the sequences");
    }
    bool left_match = true, right_match = true;
    for (int c = 0; c < t_; ++c) {
      if (slot_vertex(view, 0, conflict_[c]) != seq_a_[beta_][c]) left_match = false;
      if (slot_vertex(view, 1, conflict_[c]) != seq_b_[beta_][c]) right_match = false;
    }
    if (left_match == right_match)
      fail(ErrorCode::Precondition,
           "conflict pair must match its sequence on exactly one side");
    designated_left_ = left_match;
  }

  SpoilerAction pebble_component(const PlayView&) {
    const int side = designated_left_ ? 0 : 1;
    const auto& seq = designated_left_ ? seq_a_ : seq_b_;
    Move mv{side, scratch_[pebbling_], seq[mid_][pebbling_]};
    ++pebbling_;
    return mv;
  }

  void classify(const PlayView& view) {
    pebbling_ = -1;
    const int other = designated_left_ ? 1 : 0;
    const auto& oseq = designated_left_ ? seq_b_ : seq_a_;
    bool aligned_resp = true;
    for (int c = 0; c < t_; ++c)
      if (slot_vertex(view, other, scratch_[c]) != oseq[mid_][c])
        aligned_resp = false;
    if (aligned_resp) {
      std::swap(aligned_, scratch_);
      alpha_ = mid_;
    } else {
      std::swap(conflict_, scratch_);
      beta_ = mid_;
    }
  }

  std::vector<std::vector<int>> seq_a_, seq_b_;
  int alpha_, beta_, t_ = 1, mid_ = -1;
  int pebbling_ = -1;  // component being pebbled, -1 when idle
  bool checked_start_ = false;
  bool designated_left_ = true;
  std::vector<int> aligned_, conflict_, scratch_;
  EndgameFactory endgame_factory_;
  std::unique_ptr<SpoilerStrategy> endgame_;
};

// ---------------------------------------------------------------------------
// Coordinate strategy (rotation structures, 5 pebbles)

class CoordinateSpoiler : public SpoilerStrategy {
 public:
  SpoilerAction next(const PlayView& view) override {
    if (sub_) return sub_->next(view);
    switch (phase_) {
      case Phase::origin_a: {
        require_rotations(view);
        auto e = view.a.g().edges().front();
        a_ = e.first;
        b_ = e.second;
        phase_ = Phase::origin_b;
        return Move{0, 0, a_};
      }
      case Phase::origin_b:
        phase_ = Phase::pick_target;
        return Move{0, 1, b_};
      case Phase::pick_target:
        return pick_target(view);
      case Phase::loop:
        return loop_step(view);
      case Phase::probe:
        return probe_step(view);
    }
    fail(ErrorCode::Internal, "unreachable");
  }

 private:
  enum class Phase { origin_a, origin_b, pick_target, loop, probe };
  enum class Probe { none, matching_pair, matching_triple, case1, case2_u, case2_w };

  void require_rotations(const PlayView& view) {
    if (view.a.kind() != Structure::Kind::rotation ||
        view.b.kind() != Structure::Kind::rotation)
      fail(ErrorCode::Precondition, "coordinate strategy needs rotation structures");
  }

  const CoordinateCode& codes(const PlayView& view, int side) {
    auto& cache = code_cache_[side];
    int oa = slot_vertex(view, side, oa_), ob = slot_vertex(view, side, ob_);
    if (!cache || cache->origin_a != oa || cache->origin_b != ob)
      cache = std::make_unique<CoordinateCode>(
          global_coords(*side_structure(view, side).rot(), oa, ob));
    return *cache;
  }

  // After pebbling the origin edge: either some coordinate value exists on
  // exactly one side (pebble it), or the coordinatization matches and we
  // probe the matching for a relation it fails to preserve.
  SpoilerAction pick_target(const PlayView& view) {
    const auto& ca = codes(view, 0);
    const auto& cb = codes(view, 1);
    auto sorted = [](const CoordinateCode& c) {
      std::vector<std::vector<int>> v = c.coord;
      std::sort(v.begin(), v.end());
      return v;
    };
    auto sa = sorted(ca), sb = sorted(cb);
    for (int v = 0; v < view.a.size(); ++v)
      if (!std::binary_search(sb.begin(), sb.end(), ca.coord[v])) {
        phase_ = Phase::loop;
        tv_ = 2;
        free_ = {3, 4};
        return Move{0, 2, v};
      }
    for (int v = 0; v < view.b.size(); ++v)
      if (!std::binary_search(sa.begin(), sa.end(), cb.coord[v])) {
        phase_ = Phase::loop;
        tv_ = 2;
        free_ = {3, 4};
        return Move{1, 2, v};
      }

    // Coordinates match; build f and look for a broken relation.
    const int n = view.a.size();
    std::vector<int> f(n);
    std::map<std::vector<int>, int> by_code;
    for (int v = 0; v < n; ++v) by_code[cb.coord[v]] = v;
    for (int v = 0; v < n; ++v) f[v] = by_code.at(ca.coord[v]);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (view.a.g().has_edge(p, q) != view.b.g().has_edge(f[p], f[q])) {
          probe_ = Probe::matching_pair;
          probe_tuple_ = {p, q};
          probe_expect_ = {f[p], f[q]};
          probe_done_ = 0;
          phase_ = Phase::probe;
          return probe_step(view);
        }
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          if (view.a.ternary(p, q, r) != view.b.ternary(f[p], f[q], f[r])) {
            probe_ = Probe::matching_triple;
            probe_tuple_ = {p, q, r};
            probe_expect_ = {f[p], f[q], f[r]};
            probe_done_ = 0;
            phase_ = Phase::probe;
            return probe_step(view);
          }
    fail(ErrorCode::Precondition, "rotation systems are isomorphic");
  }

  // Pebbles the mismatch tuple one vertex per round. If Duplicator deviates
  // from f, the deviating vertex has differing coordinates and the loop
  // takes over; if she follows f throughout, the final position violates
  // the mismatched relation and the engine ends the game.
  SpoilerAction probe_step(const PlayView& view) {
    if (probe_done_ > 0) {
      int slot = 1 + probe_done_;  // tuple pebbles go to slots 2,3,4
      int got = slot_vertex(view, 1, slot);
      if (got != probe_expect_[probe_done_ - 1]) {
        tv_ = slot;
        free_.clear();
        for (int s = 2; s <= 4; ++s)
          if (s != slot) free_.push_back(s);
        phase_ = Phase::loop;
        return loop_step(view);
      }
    }
    if (probe_done_ == static_cast<int>(probe_tuple_.size()))
      fail(ErrorCode::Internal, "relation mismatch did not end the game");
    Move mv{0, 2 + probe_done_, probe_tuple_[probe_done_]};
    ++probe_done_;
    return mv;
  }

  SpoilerAction loop_step(const PlayView& view) {
    if (probe_ == Probe::case1) return case1_followup(view);
    if (probe_ == Probe::case2_u) return case2_u_followup(view);
    if (probe_ == Probe::case2_w) return case2_w_followup(view);
    return loop_iterate(view);
  }

  Dist d_target(const PlayView& view, int side) {
    const Structure& s = side_structure(view, side);
    return s.dists(slot_vertex(view, side, oa_))[slot_vertex(view, side, tv_)];
  }

  SpoilerAction loop_iterate(const PlayView& view) {
    Dist da = d_target(view, 0), db = d_target(view, 1);
    if (da != db) {
      sub_ = std::make_unique<HalvingSpoiler>(oa_, tv_, free_[0]);
      return sub_->next(view);
    }
    const auto& ca = codes(view, 0);
    const auto& cb = codes(view, 1);
    int v = slot_vertex(view, 0, tv_), vp = slot_vertex(view, 1, tv_);
    if (ca.coord[v] == cb.coord[vp])
      fail(ErrorCode::Internal, "coordinate loop without a code mismatch");
    if (da == 1) {
      // Local coordinate disagreement: halve along the rotation cycles.
      sub_ = std::make_unique<CycleHalving>(oa_, ob_, tv_, free_[0]);
      return sub_->next(view);
    }
    // Midpoints of the extreme-left paths on both sides.
    const RotationSystem& ra = *view.a.rot();
    const RotationSystem& rb = *view.b.rot();
    PathSeq pa = decode_coordinate_path(ra, ca.origin_a, ca.origin_b, ca.coord[v]);
    PathSeq pb = decode_coordinate_path(rb, cb.origin_a, cb.origin_b, cb.coord[vp]);
    const int half = static_cast<int>((da + 1) / 2);
    u_mid_ = pa.verts[half];
    u_mid_p_ = pb.verts[half];
    w_pred_ = pa.verts[half - 1];
    w_pred_p_ = pb.verts[half - 1];
    const auto& cu = ca.coord[u_mid_];
    const auto& cup = cb.coord[u_mid_p_];
    if (cu != cup) {
      probe_ = Probe::case1;
      case1_side_ = (cu < cup) ? 0 : 1;
      int m = (case1_side_ == 0) ? u_mid_ : u_mid_p_;
      return Move{case1_side_, free_[0], m};
    }
    probe_ = Probe::case2_u;
    return Move{0, free_[0], u_mid_};
  }

  SpoilerAction case1_followup(const PlayView& view) {
    probe_ = Probe::none;
    int resp_side = 1 - case1_side_;
    int placed = slot_vertex(view, case1_side_, free_[0]);
    int resp = slot_vertex(view, resp_side, free_[0]);
    const Structure& ss = side_structure(view, case1_side_);
    const Structure& rs = side_structure(view, resp_side);
    Dist d_placed = ss.dists(slot_vertex(view, case1_side_, oa_))[placed];
    Dist d_resp = rs.dists(slot_vertex(view, resp_side, oa_))[resp];
    if (d_placed != d_resp) {
      sub_ = std::make_unique<HalvingSpoiler>(oa_, free_[0], free_[1]);
      return sub_->next(view);
    }
    const auto& cs = codes(view, case1_side_);
    const auto& cr = codes(view, resp_side);
    if (cs.coord[placed] == cr.coord[resp]) {
      // Responder strayed left of the extreme-left path: the target
      // distances now disagree and plain halving finishes.
      sub_ = std::make_unique<HalvingSpoiler>(free_[0], tv_, free_[1]);
      return sub_->next(view);
    }
    std::swap(tv_, free_[0]);
    return loop_iterate(view);
  }

  SpoilerAction case2_u_followup(const PlayView& view) {
    int resp = slot_vertex(view, 1, free_[0]);
    Dist du = view.a.dists(slot_vertex(view, 0, oa_))[u_mid_];
    Dist dr = view.b.dists(slot_vertex(view, 1, oa_))[resp];
    if (du != dr) {
      probe_ = Probe::none;
      sub_ = std::make_unique<HalvingSpoiler>(oa_, free_[0], free_[1]);
      return sub_->next(view);
    }
    if (resp != u_mid_p_) {
      // Codes must differ (coordinates are injective); restart on (u, resp).
      probe_ = Probe::none;
      std::swap(tv_, free_[0]);
      return loop_iterate(view);
    }
    probe_ = Probe::case2_w;
    return Move{0, free_[1], w_pred_};
  }

  SpoilerAction case2_w_followup(const PlayView& view) {
    probe_ = Probe::none;
    int resp = slot_vertex(view, 1, free_[1]);
    Dist dw = view.a.dists(slot_vertex(view, 0, oa_))[w_pred_];
    Dist dr = view.b.dists(slot_vertex(view, 1, oa_))[resp];
    if (dw != dr) {
      sub_ = std::make_unique<HalvingSpoiler>(oa_, free_[1], tv_);
      return sub_->next(view);
    }
    if (resp != w_pred_p_) {
      // New target (w_pred, resp) at a halved distance.
      std::swap(tv_, free_[1]);
      return loop_iterate(view);
    }
    // Both midpoint and predecessor matched: the split identity moves the
    // origin to (u, w) and halves the target distance.
    int new_oa = free_[0], new_ob = free_[1];
    free_ = {oa_, ob_};
    oa_ = new_oa;
    ob_ = new_ob;
    code_cache_[0].reset();
    code_cache_[1].reset();
    return loop_iterate(view);
  }

  // Halving along the successor cycle at the pebbled anchor vertex.
  class CycleHalving : public SpoilerStrategy {
   public:
    CycleHalving(int anchor, int s_slot, int t_slot, int spare)
        : anchor_(anchor), s_(s_slot), t_(t_slot), sp_(spare) {}

    SpoilerAction next(const PlayView& view) override {
      if (!init_) {
        init_ = true;
        int sa = steps(view, 0), sb = steps(view, 1);
        if (sa == sb) fail(ErrorCode::Internal, "cycle halving without a gap");
        work_ = (sa < sb) ? 0 : 1;
      }
      if (awaiting_) reassign(view);
      int sw = steps(view, work_);
      if (sw <= 1)
        fail(ErrorCode::Internal, "cycle halving at a decided position");
      const Structure& s = side_structure(view, work_);
      const RotationSystem& r = *s.rot();
      int a = slot_vertex(view, work_, anchor_);
      int cur = slot_vertex(view, work_, s_);
      for (int i = 0; i < (sw + 1) / 2; ++i) cur = r.succ(a, cur);
      awaiting_ = true;
      return Move{work_, sp_, cur};
    }

   private:
    int steps(const PlayView& view, int side) const {
      const Structure& st = side_structure(view, side);
      const RotationSystem& r = *st.rot();
      int a = slot_vertex(view, side, anchor_);
      int from = slot_vertex(view, side, s_);
      int to = slot_vertex(view, side, t_);
      int cur = from;
      for (int i = 1; i <= st.g().degree(a); ++i) {
        cur = r.succ(a, cur);
        if (cur == to) return i;
      }
      fail(ErrorCode::Internal, "cycle steps undefined");
    }

    int steps_between(const PlayView& view, int side, int slot1, int slot2) const {
      const Structure& st = side_structure(view, side);
      const RotationSystem& r = *st.rot();
      int a = slot_vertex(view, side, anchor_);
      int from = slot_vertex(view, side, slot1);
      int to = slot_vertex(view, side, slot2);
      int cur = from;
      for (int i = 1; i <= st.g().degree(a); ++i) {
        cur = r.succ(a, cur);
        if (cur == to) return i;
      }
      fail(ErrorCode::Internal, "cycle steps undefined");
    }

    void reassign(const PlayView& view) {
      awaiting_ = false;
      int w1 = steps_between(view, work_, s_, sp_);
      int o1 = steps_between(view, 1 - work_, s_, sp_);
      if (w1 < o1) {
        std::swap(t_, sp_);
        return;
      }
      int w2 = steps_between(view, work_, sp_, t_);
      int o2 = steps_between(view, 1 - work_, sp_, t_);
      if (w2 < o2) {
        std::swap(s_, sp_);
        return;
      }
      fail(ErrorCode::Internal, "no cycle half kept the gap");
    }

    int anchor_, s_, t_, sp_;
    int work_ = 0;
    bool init_ = false;
    bool awaiting_ = false;
  };

  Phase phase_ = Phase::origin_a;
  Probe probe_ = Probe::none;
  int a_ = -1, b_ = -1;
  int oa_ = 0, ob_ = 1, tv_ = 2;
  std::vector<int> free_{3, 4};
  std::vector<int> probe_tuple_, probe_expect_;
  int probe_done_ = 0;
  int case1_side_ = 0;
  int u_mid_ = -1, u_mid_p_ = -1, w_pred_ = -1, w_pred_p_ = -1;
  std::unique_ptr<CoordinateCode> code_cache_[2];
  std::unique_ptr<SpoilerStrategy> sub_;
};

// ---------------------------------------------------------------------------
// Solver-backed strategy and adversaries

class SolverSpoiler : public SpoilerStrategy {
 public:
  explicit SolverSpoiler(DepthSolver& solver) : solver_(solver) {}

  SpoilerAction next(const PlayView& view) override {
    const int budget = view.rmax - view.pos.rounds;
    GamePosition pos = view.pos;
    for (int slot = 0; slot < pos.k; ++slot)
      for (int side = 0; side < 2; ++side) {
        const int nv = side == 0 ? view.a.size() : view.b.size();
        const int nr = side == 0 ? view.b.size() : view.a.size();
        for (int w = 0; w < nv; ++w) {
          bool all = true;
          for (int u = 0; u < nr && all; ++u) {
            GamePosition child = pos;
            (side == 0 ? child.left : child.right)[slot] = w;
            (side == 0 ? child.right : child.left)[slot] = u;
            if (!solver_.spoiler_wins_within(child, budget - 1)) all = false;
          }
          if (all) return Move{side, slot, w};
        }
      }
    fail(ErrorCode::Precondition, "no forced win within the round budget");
  }

 private:
  DepthSolver& solver_;
};

class OptimalDuplicator : public DuplicatorAdversary {
 public:
  explicit OptimalDuplicator(DepthSolver& solver) : solver_(solver) {}

  int respond(const PlayView& view, const Move& move) override {
    const int remaining = view.rmax - view.pos.rounds - 1;
    const int other = 1 - move.side;
    const int n = other == 0 ? view.a.size() : view.b.size();
    int best = 0, best_horizon = -1;
    for (int u = 0; u < n; ++u) {
      GamePosition child = view.pos;
      (other == 0 ? child.left : child.right)[move.slot] = u;
      if (!solver_.spoiler_wins_within(child, remaining)) return u;
      int h = 0;
      while (h < remaining && solver_.spoiler_wins_within(child, h) == false) ++h;
      // h = first r at which Spoiler wins; larger is better.
      if (h > best_horizon) {
        best_horizon = h;
        best = u;
      }
    }
    return best;
  }

 private:
  DepthSolver& solver_;
};

class GreedyMetricDuplicator : public DuplicatorAdversary {
 public:
  int respond(const PlayView& view, const Move& move) override {
    const int other = 1 - move.side;
    const Structure& placed_s = side_structure(view, move.side);
    const Structure& resp_s = side_structure(view, other);
    const int n = resp_s.size();
    int best = 0, best_cost = -1;
    for (int u = 0; u < n; ++u) {
      int cost = 0;
      for (int slot = 0; slot < view.pos.k; ++slot) {
        if (slot == move.slot || !view.pos.on_board(slot)) continue;
        int xv = slot_vertex(view, move.side, slot);
        int yv = slot_vertex(view, other, slot);
        Dist dm = placed_s.dists(move.vertex)[xv];
        Dist dr = resp_s.dists(u)[yv];
        if (dm != dr) ++cost;
        if ((move.vertex == xv) != (u == yv)) ++cost;
      }
      if (best_cost == -1 || cost < best_cost) {
        best_cost = cost;
        best = u;
      }
    }
    return best;
  }
};

class RandomDuplicator : public DuplicatorAdversary {
 public:
  explicit RandomDuplicator(std::uint32_t seed) : rng_(seed) {}

  int respond(const PlayView& view, const Move& move) override {
    const int n = move.side == 0 ? view.b.size() : view.a.size();
    return static_cast<int>(rng_below(rng_, static_cast<std::uint32_t>(n)));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace

std::unique_ptr<SpoilerStrategy> spoiler_halving(int slot_u, int slot_v,
                                                 int spare_slot) {
  return std::make_unique<HalvingSpoiler>(slot_u, slot_v, spare_slot);
}

std::unique_ptr<SpoilerStrategy> spoiler_metric_guard(int slot_u, int slot_v,
                                                      int spare_slot) {
  return std::make_unique<MetricGuardSpoiler>(slot_u, slot_v, spare_slot);
}

std::unique_ptr<SpoilerStrategy> spoiler_generalized_halving(
    std::vector<std::vector<int>> seq_a, std::vector<std::vector<int>> seq_b,
    int start_conflict_index, std::vector<int> aligned_slots,
    std::vector<int> conflict_slots, std::vector<int> scratch_slots,
    EndgameFactory endgame) {
  return std::make_unique<GeneralizedHalvingSpoiler>(
      std::move(seq_a), std::move(seq_b), start_conflict_index,
      std::move(aligned_slots), std::move(conflict_slots),
      std::move(scratch_slots), std::move(endgame));
}

std::unique_ptr<SpoilerStrategy> spoiler_coordinate_strategy() {
  return std::make_unique<CoordinateSpoiler>();
}

std::unique_ptr<SpoilerStrategy> spoiler_solver(DepthSolver& solver) {
  return std::make_unique<SolverSpoiler>(solver);
}

std::unique_ptr<DuplicatorAdversary> duplicator_optimal(DepthSolver& solver) {
  return std::make_unique<OptimalDuplicator>(solver);
}

std::unique_ptr<DuplicatorAdversary> duplicator_greedy_metric() {
  return std::make_unique<GreedyMetricDuplicator>();
}

std::unique_ptr<DuplicatorAdversary> duplicator_random(std::uint32_t seed) {
  return std::make_unique<RandomDuplicator>(seed);
}

}  // namespace planarcanon
