#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "didp/errors.hpp"

namespace didp::bench {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Instance text is a whitespace-separated token stream; line breaks carry
// no meaning. Every parser below documents its token order.
class TokenReader {
 public:
  explicit TokenReader(std::string_view text) {
    std::size_t k = 0;
    while (k < text.size()) {
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      std::size_t start = k;
      while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k > start) tokens_.push_back(text.substr(start, k - start));
    }
    if (tokens_.empty()) throw ParseError("empty instance text");
  }

  bool done() const { return pos_ == tokens_.size(); }

  std::int64_t integer(const std::string& what) {
    std::string_view t = next(what);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
      throw ParseError("expected an integer for " + what + ", got '" + std::string(t) + "'");
    return v;
  }

  std::int64_t nonneg(const std::string& what) {
    std::int64_t v = integer(what);
    if (v < 0) throw ParseError(what + " must be nonnegative, got " + std::to_string(v));
    return v;
  }

  std::size_t count(const std::string& what) { return static_cast<std::size_t>(nonneg(what)); }

  double real(const std::string& what) {
    std::string_view t = next(what);
    double v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || !std::isfinite(v))
      throw ParseError("expected a finite number for " + what + ", got '" + std::string(t) + "'");
    return v;
  }

  Matrix matrix(std::size_t rows, std::size_t cols, const std::string& what) {
    Matrix m(rows, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] = integer(what + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    return m;
  }

  std::vector<std::int64_t> row(std::size_t n, const std::string& what) {
    std::vector<std::int64_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = integer(what + "[" + std::to_string(i) + "]");
    return r;
  }

  void finish() {
    if (!done()) throw ParseError("unexpected trailing token '" + std::string(tokens_[pos_]) + "'");
  }

 private:
  std::string_view next(const std::string& what) {
    if (done()) throw ParseError("instance text ends before " + what);
    return tokens_[pos_++];
  }

  std::vector<std::string_view> tokens_;
  std::size_t pos_ = 0;
};

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ModelError(msg);
}

inline void require_square(const Matrix& c, std::size_t n, const std::string& what) {
  require(c.size() == n, what + " must have " + std::to_string(n) + " rows");
  for (const auto& r : c) require(r.size() == n, what + " must have " + std::to_string(n) + " columns");
}

inline void require_nonneg(const Matrix& c, const std::string& what) {
  for (const auto& r : c)
    for (auto v : r) require(v >= 0, what + " must be nonnegative");
}

inline void require_nonneg(const std::vector<std::int64_t>& v, const std::string& what) {
  for (auto x : v) require(x >= 0, what + " must be nonnegative");
}

inline Matrix floyd_warshall(const Matrix& c) {
  Matrix d = c;
  std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Cheapest arc into / out of each node, ignoring the diagonal. Isolated
// nodes (n = 1) get 0.
inline std::vector<std::int64_t> min_in(const Matrix& c) {
  std::size_t n = c.size();
  std::vector<std::int64_t> r(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::int64_t> best;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j && (!best || c[k][j] < *best)) best = c[k][j];
    r[j] = best.value_or(0);
  }
  return r;
}

inline std::vector<std::int64_t> min_out(const Matrix& c) {
  std::size_t n = c.size();
  std::vector<std::int64_t> r(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::int64_t> best;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j && (!best || c[j][k] < *best)) best = c[j][k];
    r[j] = best.value_or(0);
  }
  return r;
}

// Kahn's algorithm; true when the predecessor relation has no cycle.
inline bool acyclic(const std::vector<std::vector<std::size_t>>& preds) {
  std::size_t n = preds.size();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t j = 0; j < n; ++j)
    for (auto i : preds[j]) {
      succ[i].push_back(j);
      ++indeg[j];
    }
  std::vector<std::size_t> ready;
  for (std::size_t j = 0; j < n; ++j)
    if (!indeg[j]) ready.push_back(j);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t i = ready.back();
    ready.pop_back();
    ++seen;
    for (auto j : succ[i])
      if (!--indeg[j]) ready.push_back(j);
  }
  return seen == n;
}

inline void add_pred(std::vector<std::vector<std::size_t>>& preds, std::size_t before, std::size_t after) {
  auto& p = preds[after];
  if (std::find(p.begin(), p.end(), before) == p.end()) p.push_back(before);
  std::sort(p.begin(), p.end());
}

// Reads "i j" pairs (i before j) until the stream ends.
inline std::vector<std::vector<std::size_t>> read_precedences(TokenReader& in, std::size_t n) {
  std::vector<std::vector<std::size_t>> preds(n);
  while (!in.done()) {
    std::size_t i = in.count("precedence source");
    std::size_t j = in.count("precedence target");
    require(i < n && j < n, "precedence pair " + std::to_string(i) + " " + std::to_string(j) + " out of range");
    require(i != j, "precedence pair relates a task to itself");
    add_pred(preds, i, j);
  }
  return preds;
}

}  // namespace detail

// ---------------------------------------------------------------- TSPTW

struct TsptwInstance {
  std::size_t n = 0;  // nodes including the depot 0
  Matrix c;
  std::vector<std::int64_t> a, b;
  Matrix cstar;
  std::vector<std::int64_t> cin, cout;

  void derive() {
    detail::require(n >= 1, "TSPTW needs at least the depot");
    detail::require_square(c, n, "travel time matrix");
    detail::require_nonneg(c, "travel times");
    detail::require(a.size() == n && b.size() == n, "one time window per node is required");
    cstar = detail::floyd_warshall(c);
    cin = detail::min_in(c);
    cout = detail::min_out(c);
  }
};

// n; n*n travel times (row i = from i); n lines "a_i b_i".
inline TsptwInstance parse_tsptw(std::string_view text) {
  TokenReader in(text);
  TsptwInstance x;
  x.n = in.count("n");
  x.c = in.matrix(x.n, x.n, "c");
  for (std::size_t i = 0; i < x.n; ++i) {
    x.a.push_back(in.integer("a"));
    x.b.push_back(in.integer("b"));
  }
  in.finish();
  x.derive();
  return x;
}

// ---------------------------------------------------------------- CVRP

struct CvrpInstance {
  std::size_t n = 0;  // nodes including the depot 0
  std::size_t m = 0;  // vehicles
  std::int64_t q = 0;
  std::vector<std::int64_t> demand;  // demand[0] is 0
  Matrix c;
  std::vector<std::int64_t> cin, cout;

  void derive() {
    detail::require(n >= 1, "CVRP needs at least the depot");
    detail::require(m >= 1, "CVRP needs at least one vehicle");
    detail::require_square(c, n, "travel time matrix");
    detail::require_nonneg(c, "travel times");
    detail::require(demand.size() == n, "one demand per node is required");
    detail::require_nonneg(demand, "demands");
    detail::require(demand[0] == 0, "the depot has no demand");
    for (std::size_t i = 0; i < n; ++i)
      detail::require(demand[i] <= q, "demand of customer " + std::to_string(i) + " exceeds the capacity");
    cin = detail::min_in(c);
    cout = detail::min_out(c);
  }
};

// "n m q"; n demands (depot first, 0); n*n travel times.
inline CvrpInstance parse_cvrp(std::string_view text) {
  TokenReader in(text);
  CvrpInstance x;
  x.n = in.count("n");
  x.m = in.count("m");
  x.q = in.nonneg("q");
  x.demand = in.row(x.n, "demand");
  x.c = in.matrix(x.n, x.n, "c");
  in.finish();
  x.derive();
  return x;
}

// ---------------------------------------------------------------- m-PDTSP

struct Commodity {
  std::size_t pickup = 0, delivery = 0;
  std::int64_t amount = 0;
};

struct MpdtspInstance {
  std::size_t n = 0;  // 0 is the start, n-1 the end
  std::int64_t q = 0;
  Matrix c;                             // 0 where there is no edge
  std::vector<std::vector<bool>> edge;  // the arc set A
  std::vector<Commodity> commodities;
  std::vector<std::int64_t> delta;             // net load change on arrival
  std::vector<std::vector<std::size_t>> preds;  // pickups that must precede j
  std::vector<std::int64_t> cin, cout;         // over existing arcs only

  void derive() {
    detail::require(n >= 2, "m-PDTSP needs distinct start and end nodes");
    detail::require_square(c, n, "travel time matrix");
    detail::require_nonneg(c, "travel times");
    detail::require(q >= 0, "capacity must be nonnegative");
    delta.assign(n, 0);
    preds.assign(n, {});
    for (const auto& k : commodities) {
      detail::require(k.pickup < n && k.delivery < n, "commodity node out of range");
      detail::require(k.pickup != k.delivery, "commodity picked up and delivered at the same node");
      detail::require(k.amount >= 0, "commodity amounts must be nonnegative");
      detail::require(k.pickup != n - 1 && k.delivery != 0, "commodities cannot be picked up at the end or delivered at the start");
      delta[k.pickup] += k.amount;
      delta[k.delivery] -= k.amount;
      detail::add_pred(preds, k.pickup, k.delivery);
    }
    detail::require(detail::acyclic(preds), "commodity dependencies are cyclic");
    cin.assign(n, 0);
    cout.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<std::int64_t> in_best, out_best;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        if (edge[k][j] && (!in_best || c[k][j] < *in_best)) in_best = c[k][j];
        if (edge[j][k] && (!out_best || c[j][k] < *out_best)) out_best = c[j][k];
      }
      cin[j] = in_best.value_or(0);
      cout[j] = out_best.value_or(0);
    }
  }

  // Drops arcs that no tour can use: into the start, out of the end, and
  // j -> i whenever i must be visited before j. Shrinks the model without
  // changing its optimum.
  void remove_useless_edges() {
    for (std::size_t i = 0; i < n; ++i) {
      edge[i][0] = false;
      edge[n - 1][i] = false;
      edge[i][i] = false;
    }
    for (std::size_t j = 0; j < n; ++j)
      for (auto i : preds[j]) edge[j][i] = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!edge[i][j]) c[i][j] = 0;
    derive();
  }
};

// "n m q"; n*n travel times with -1 for a missing arc; m lines
// "pickup delivery amount".
inline MpdtspInstance parse_mpdtsp(std::string_view text, bool preprocess_edges = false) {
  TokenReader in(text);
  MpdtspInstance x;
  x.n = in.count("n");
  std::size_t m = in.count("m");
  x.q = in.nonneg("q");
  Matrix raw = in.matrix(x.n, x.n, "c");
  x.c.assign(x.n, std::vector<std::int64_t>(x.n, 0));
  x.edge.assign(x.n, std::vector<bool>(x.n, false));
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) {
      if (raw[i][j] == -1) continue;
      if (raw[i][j] < 0) throw ParseError("travel times must be nonnegative or -1");
      x.edge[i][j] = i != j;
      x.c[i][j] = i != j ? raw[i][j] : 0;
    }
  for (std::size_t k = 0; k < m; ++k) {
    Commodity cm;
    cm.pickup = in.count("pickup");
    cm.delivery = in.count("delivery");
    cm.amount = in.nonneg("amount");
    x.commodities.push_back(cm);
  }
  in.finish();
  x.derive();
  if (preprocess_edges) x.remove_useless_edges();
  return x;
}

// ---------------------------------------------------------------- OPTW

struct OptwInstance {
  std::size_t n = 0;  // nodes including the depot 0
  Matrix c;           // service times already folded in
  std::vector<std::int64_t> a, b, profit;
  Matrix cstar;
  std::vector<std::int64_t> cin, cout;

  void derive() {
    detail::require(n >= 1, "OPTW needs at least the depot");
    detail::require_square(c, n, "travel time matrix");
    detail::require_nonneg(c, "travel times");
    detail::require(a.size() == n && b.size() == n && profit.size() == n, "one window and profit per node is required");
    detail::require_nonneg(profit, "profits");
    cstar = detail::floyd_warshall(c);
    cin = detail::min_in(c);
    cout = detail::min_out(c);
  }

  // Efficiency of collecting profit j per unit of the cheapest arc in / out.
  // Infinite when that arc is free.
  double efficiency_in(std::size_t j) const {
    return cin[j] > 0 ? static_cast<double>(profit[j]) / static_cast<double>(cin[j])
                      : std::numeric_limits<double>::infinity();
  }
  double efficiency_out(std::size_t j) const {
    return cout[j] > 0 ? static_cast<double>(profit[j]) / static_cast<double>(cout[j])
                       : std::numeric_limits<double>::infinity();
  }
};

// n; n*n travel times; n lines "a_i b_i p_i" (the depot's profit is ignored
// and must be 0).
inline OptwInstance parse_optw(std::string_view text) {
  TokenReader in(text);
  OptwInstance x;
  x.n = in.count("n");
  x.c = in.matrix(x.n, x.n, "c");
  for (std::size_t i = 0; i < x.n; ++i) {
    x.a.push_back(in.integer("a"));
    x.b.push_back(in.integer("b"));
    x.profit.push_back(in.nonneg("profit"));
  }
  in.finish();
  if (x.n) detail::require(x.profit[0] == 0, "the depot has no profit");
  x.derive();
  return x;
}

// ---------------------------------------------------------------- MDKP

struct MdkpInstance {
  std::size_t n = 0;  // items
  std::size_t m = 0;  // dimensions
  bool continuous = false;
  std::vector<double> profit;
  std::vector<std::vector<double>> weight;  // weight[i][j]
  std::vector<double> capacity;
  // efficiency[k][j] = p_k / w_kj; infinite when w_kj = 0 (the builder
  // substitutes the remaining profit sum there).
  std::vector<std::vector<double>> efficiency;

  void derive() {
    detail::require(profit.size() == n && weight.size() == n && capacity.size() == m, "MDKP data size mismatch");
    auto check = [&](double v, const char* what) {
      detail::require(v >= 0, std::string(what) + " must be nonnegative");
      if (!continuous) detail::require(v == std::floor(v), std::string(what) + " must be integers unless continuous");
    };
    for (auto v : profit) check(v, "profits");
    for (auto v : capacity) check(v, "capacities");
    for (const auto& r : weight) {
      detail::require(r.size() == m, "MDKP weight row size mismatch");
      for (auto v : r) check(v, "weights");
    }
    efficiency.assign(n, std::vector<double>(m));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j)
        efficiency[k][j] = weight[k][j] > 0 ? profit[k] / weight[k][j] : std::numeric_limits<double>::infinity();
  }
};

// "n m"; n profits; m rows of n weights (one row per dimension); m
// capacities. Values must be integers unless `continuous` is set.
inline MdkpInstance parse_mdkp(std::string_view text, bool continuous = false) {
  TokenReader in(text);
  MdkpInstance x;
  x.n = in.count("n");
  x.m = in.count("m");
  x.continuous = continuous;
  for (std::size_t i = 0; i < x.n; ++i) x.profit.push_back(in.real("profit"));
  x.weight.assign(x.n, std::vector<double>(x.m));
  for (std::size_t j = 0; j < x.m; ++j)
    for (std::size_t i = 0; i < x.n; ++i) x.weight[i][j] = in.real("weight");
  for (std::size_t j = 0; j < x.m; ++j) x.capacity.push_back(in.real("capacity"));
  in.finish();
  x.derive();
  return x;
}

// ---------------------------------------------------------------- bin packing

struct BinPackingInstance {
  std::int64_t q = 0;
  std::vector<std::int64_t> w;
  // Coefficients of the second and third lower bounds.
  std::vector<std::int64_t> lb2_a;
  std::vector<double> lb2_b, lb3_c;

  void derive() {
    detail::require(q > 0, "bin capacity must be positive");
    for (auto x : w) {
      detail::require(x > 0, "item weights must be positive");
      detail::require(x <= q, "item weight " + std::to_string(x) + " exceeds the bin capacity");
    }
    lb2_a.clear();
    lb2_b.clear();
    lb3_c.clear();
    for (auto x : w) {
      lb2_a.push_back(2 * x > q ? 1 : 0);
      lb2_b.push_back(2 * x == q ? 0.5 : 0.0);
      double c = 0;
      if (3 * x > 2 * q) c = 1;
      else if (3 * x == 2 * q) c = 2.0 / 3.0;
      else if (3 * x > q) c = 0.5;
      else if (3 * x == q) c = 1.0 / 3.0;
      lb3_c.push_back(c);
    }
  }

  // The same coefficients scaled to integers: b by 2, c by 6.
  std::int64_t lb2_b2(std::size_t i) const { return lb2_b[i] > 0 ? 1 : 0; }
  std::int64_t lb3_c6(std::size_t i) const { return static_cast<std::int64_t>(std::lround(lb3_c[i] * 6)); }
};

// q; n; n weights.
inline BinPackingInstance parse_binpacking(std::string_view text) {
  TokenReader in(text);
  BinPackingInstance x;
  x.q = in.integer("q");
  std::size_t n = in.count("n");
  x.w = in.row(n, "weight");
  in.finish();
  x.derive();
  return x;
}

// ---------------------------------------------------------------- SALBP-1

struct Salbp1Instance {
  std::size_t n = 0;
  std::int64_t q = 0;  // cycle time
  std::vector<std::int64_t> w;
  std::vector<std::vector<std::size_t>> preds;

  void derive() {
    detail::require(w.size() == n && preds.size() == n, "SALBP-1 data size mismatch");
    detail::require(q > 0, "cycle time must be positive");
    for (auto x : w) {
      detail::require(x >= 0, "task times must be nonnegative");
      detail::require(x <= q, "task time " + std::to_string(x) + " exceeds the cycle time");
    }
    detail::require(detail::acyclic(preds), "precedence graph is cyclic");
  }
};

// n; q; n task times; then any number of "i j" pairs (i precedes j).
inline Salbp1Instance parse_salbp1(std::string_view text) {
  TokenReader in(text);
  Salbp1Instance x;
  x.n = in.count("n");
  x.q = in.integer("q");
  x.w = in.row(x.n, "task time");
  x.preds = detail::read_precedences(in, x.n);
  x.derive();
  return x;
}

// ---------------------------------------------------------------- 1||sum wT

struct WtInstance {
  std::size_t n = 0;
  std::vector<std::int64_t> p, d, w;
  std::vector<std::vector<std::size_t>> preds;  // jobs that must come before i

  void derive() {
    detail::require(p.size() == n && d.size() == n && w.size() == n, "weighted tardiness data size mismatch");
    if (preds.empty()) preds.assign(n, {});
    detail::require(preds.size() == n, "one precedence set per job is required");
    detail::require_nonneg(p, "processing times");
    detail::require_nonneg(w, "weights");
    detail::require(detail::acyclic(preds), "precedence sets are cyclic");
  }
};

// n; n processing times; n due dates; n weights; then optional "i j" pairs
// (i precedes j).
inline WtInstance parse_wt(std::string_view text) {
  TokenReader in(text);
  WtInstance x;
  x.n = in.count("n");
  x.p = in.row(x.n, "processing time");
  x.d = in.row(x.n, "due date");
  x.w = in.row(x.n, "weight");
  x.preds = detail::read_precedences(in, x.n);
  x.derive();
  return x;
}

// ---------------------------------------------------------------- talent scheduling

struct TalentInstance {
  std::size_t actors = 0;
  std::vector<std::vector<std::size_t>> cast;  // actors per scene (sorted)
  std::vector<std::int64_t> duration;
  std::vector<std::int64_t> cost;  // per actor and time unit
  std::vector<std::int64_t> base;  // b_s = d_s * sum of c over the cast
  std::vector<std::vector<std::size_t>> merged_from;

  std::size_t scenes() const { return cast.size(); }

  // Scenes with identical casts become one scene with the summed duration.
  void derive() {
    detail::require(cost.size() == actors, "one cost per actor is required");
    detail::require(duration.size() == cast.size(), "one duration per scene is required");
    detail::require_nonneg(cost, "actor costs");
    detail::require_nonneg(duration, "durations");
    for (auto& s : cast) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      for (auto a : s) detail::require(a < actors, "actor index out of range");
    }
    if (merged_from.size() != cast.size()) {
      merged_from.assign(cast.size(), {});
      for (std::size_t s = 0; s < cast.size(); ++s) merged_from[s] = {s};
    }
    std::vector<std::vector<std::size_t>> c2;
    std::vector<std::int64_t> d2;
    std::vector<std::vector<std::size_t>> from;
    for (std::size_t s = 0; s < cast.size(); ++s) {
      auto it = std::find(c2.begin(), c2.end(), cast[s]);
      if (it == c2.end()) {
        c2.push_back(cast[s]);
        d2.push_back(duration[s]);
        from.push_back(merged_from[s]);
      } else {
        auto k = static_cast<std::size_t>(it - c2.begin());
        d2[k] += duration[s];
        from[k].insert(from[k].end(), merged_from[s].begin(), merged_from[s].end());
      }
    }
    cast = std::move(c2);
    duration = std::move(d2);
    merged_from = std::move(from);
    base.clear();
    for (std::size_t s = 0; s < cast.size(); ++s) {
      std::int64_t sum = 0;
      for (auto a : cast[s]) sum += cost[a];
      base.push_back(duration[s] * sum);
    }
  }
};

// "n m" (scenes, actors); m rows of n 0/1 flags followed by the actor's
// cost; n scene durations.
inline TalentInstance parse_talent(std::string_view text) {
  TokenReader in(text);
  TalentInstance x;
  std::size_t n = in.count("scene count");
  x.actors = in.count("actor count");
  x.cast.assign(n, {});
  for (std::size_t a = 0; a < x.actors; ++a) {
    for (std::size_t s = 0; s < n; ++s) {
      auto f = in.integer("cast flag");
      if (f != 0 && f != 1) throw ParseError("cast flags must be 0 or 1");
      if (f) x.cast[s].push_back(a);
    }
    x.cost.push_back(in.nonneg("actor cost"));
  }
  x.duration = in.row(n, "duration");
  in.finish();
  x.derive();
  return x;
}

// ---------------------------------------------------------------- MOSP

struct MospInstance {
  std::size_t customers = 0, products = 0;
  std::vector<std::vector<std::size_t>> orders;     // products per customer
  std::vector<std::vector<std::size_t>> neighbors;  // customers sharing a product (self unless the order is empty)

  void derive() {
    detail::require(orders.size() == customers, "one order per customer is required");
    neighbors.assign(customers, {});
    for (std::size_t c = 0; c < customers; ++c)
      for (std::size_t d = 0; d < customers; ++d) {
        bool share = false;
        for (auto p : orders[c]) {
          detail::require(p < products, "product index out of range");
          share = share || std::find(orders[d].begin(), orders[d].end(), p) != orders[d].end();
        }
        if (share) neighbors[c].push_back(d);
      }
  }
};

// "C P"; C rows of P 0/1 flags (customer c orders product p).
inline MospInstance parse_mosp(std::string_view text) {
  TokenReader in(text);
  MospInstance x;
  x.customers = in.count("customer count");
  x.products = in.count("product count");
  x.orders.assign(x.customers, {});
  for (std::size_t c = 0; c < x.customers; ++c)
    for (std::size_t p = 0; p < x.products; ++p) {
      auto f = in.integer("order flag");
      if (f != 0 && f != 1) throw ParseError("order flags must be 0 or 1");
      if (f) x.orders[c].push_back(p);
    }
  in.finish();
  x.derive();
  return x;
}

// ---------------------------------------------------------------- graph-clear

struct GraphClearInstance {
  std::size_t n = 0;
  std::vector<std::int64_t> a;
  Matrix b;  // symmetric, 0 for non-edges

  void derive() {
    detail::require(a.size() == n, "one node weight per node is required");
    detail::require_square(b, n, "edge weight matrix");
    detail::require_nonneg(a, "node weights");
    detail::require_nonneg(b, "edge weights");
    for (std::size_t i = 0; i < n; ++i) {
      detail::require(b[i][i] == 0, "edge weight matrix needs a zero diagonal");
      for (std::size_t j = 0; j < n; ++j) detail::require(b[i][j] == b[j][i], "edge weight matrix must be symmetric");
    }
  }
};

// n; n node weights; n*n edge weights.
inline GraphClearInstance parse_graphclear(std::string_view text) {
  TokenReader in(text);
  GraphClearInstance x;
  x.n = in.count("n");
  x.a = in.row(x.n, "node weight");
  x.b = in.matrix(x.n, x.n, "b");
  in.finish();
  x.derive();
  return x;
}

}  // namespace didp::bench
