#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "didp/benchmarks/builders.hpp"
#include "didp/benchmarks/instances.hpp"

namespace didp::bench {

enum class ProblemClass { Tsptw, Cvrp, Mpdtsp, Optw, Mdkp, BinPacking, Salbp1, Wt, Talent, Mosp, GraphClear };

inline constexpr ProblemClass kAllClasses[] = {
    ProblemClass::Tsptw, ProblemClass::Cvrp,   ProblemClass::Mpdtsp, ProblemClass::Optw,
    ProblemClass::Mdkp,  ProblemClass::BinPacking, ProblemClass::Salbp1, ProblemClass::Wt,
    ProblemClass::Talent, ProblemClass::Mosp,  ProblemClass::GraphClear};

inline const char* to_string(ProblemClass c) {
  switch (c) {
    case ProblemClass::Tsptw: return "tsptw";
    case ProblemClass::Cvrp: return "cvrp";
    case ProblemClass::Mpdtsp: return "mpdtsp";
    case ProblemClass::Optw: return "optw";
    case ProblemClass::Mdkp: return "mdkp";
    case ProblemClass::BinPacking: return "binpacking";
    case ProblemClass::Salbp1: return "salbp1";
    case ProblemClass::Wt: return "wt";
    case ProblemClass::Talent: return "talent";
    case ProblemClass::Mosp: return "mosp";
    case ProblemClass::GraphClear: return "graphclear";
  }
  return "?";
}

inline std::optional<ProblemClass> parse_problem_class(std::string_view s) {
  for (auto c : kAllClasses)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

using Instance = std::variant<TsptwInstance, CvrpInstance, MpdtspInstance, OptwInstance, MdkpInstance,
                              BinPackingInstance, Salbp1Instance, WtInstance, TalentInstance, MospInstance,
                              GraphClearInstance>;

struct ParseOptions {
  bool continuous = false;        // MDKP: allow fractional data
  bool preprocess_edges = false;  // m-PDTSP: drop arcs no tour can use
};

inline Instance parse_instance(ProblemClass c, std::string_view text, const ParseOptions& opt = {}) {
  switch (c) {
    case ProblemClass::Tsptw: return parse_tsptw(text);
    case ProblemClass::Cvrp: return parse_cvrp(text);
    case ProblemClass::Mpdtsp: return parse_mpdtsp(text, opt.preprocess_edges);
    case ProblemClass::Optw: return parse_optw(text);
    case ProblemClass::Mdkp: return parse_mdkp(text, opt.continuous);
    case ProblemClass::BinPacking: return parse_binpacking(text);
    case ProblemClass::Salbp1: return parse_salbp1(text);
    case ProblemClass::Wt: return parse_wt(text);
    case ProblemClass::Talent: return parse_talent(text);
    case ProblemClass::Mosp: return parse_mosp(text);
    case ProblemClass::GraphClear: return parse_graphclear(text);
  }
  throw ModelError("unknown problem class");
}

inline Model build(const TsptwInstance& x) { return build_tsptw(x); }
inline Model build(const CvrpInstance& x) { return build_cvrp(x); }
inline Model build(const MpdtspInstance& x) { return build_mpdtsp(x); }
inline Model build(const OptwInstance& x) { return build_optw(x); }
inline Model build(const MdkpInstance& x) { return build_mdkp(x); }
inline Model build(const BinPackingInstance& x) { return build_binpacking(x); }
inline Model build(const Salbp1Instance& x) { return build_salbp1(x); }
inline Model build(const WtInstance& x) { return build_wt(x); }
inline Model build(const TalentInstance& x) { return build_talent(x); }
inline Model build(const MospInstance& x) { return build_mosp(x); }
inline Model build(const GraphClearInstance& x) { return build_graphclear(x); }

inline Model build(const Instance& x) {
  return std::visit([](const auto& i) { return build(i); }, x);
}

}  // namespace didp::bench
