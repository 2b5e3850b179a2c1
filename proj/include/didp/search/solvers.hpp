#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "didp/search/beam.hpp"
#include "didp/search/engine.hpp"

namespace didp {

inline Solution caasdy(const Model& m, const SolverParams& p) {
  CaasdyPolicy policy(NodeOrder{&m.cost});
  return generic_search(m, policy, p);
}

inline Solution dfbnb(const Model& m, const SolverParams& p) {
  DfbnbPolicy policy(NodeOrder{&m.cost});
  return generic_search(m, policy, p);
}

inline Solution cbfs(const Model& m, const SolverParams& p) {
  auto policy = make_cbfs_policy(NodeOrder{&m.cost});
  return generic_search(m, policy, p);
}

inline Solution acps(const Model& m, const SolverParams& p) {
  auto policy = make_acps_policy(NodeOrder{&m.cost}, std::max<std::size_t>(p.acps_initial_width, 1),
                                 p.acps_step);
  return generic_search(m, policy, p);
}

inline Solution apps(const Model& m, const SolverParams& p) {
  AppsPolicy policy(NodeOrder{&m.cost}, std::max<std::size_t>(p.apps_initial_width, 1), p.apps_step,
                    p.apps_max_width);
  return generic_search(m, policy, p);
}

inline Solution dbdfs(const Model& m, const SolverParams& p) {
  DbdfsPolicy policy(NodeOrder{&m.cost}, std::max<std::size_t>(p.dbdfs_k, 1));
  return generic_search(m, policy, p);
}

enum class SolverKind { Caasdy, Dfbnb, Cbfs, Acps, Apps, Dbdfs, Cabs };

inline constexpr SolverKind kAllSolvers[] = {SolverKind::Caasdy, SolverKind::Dfbnb, SolverKind::Cbfs,
                                             SolverKind::Acps,   SolverKind::Apps,  SolverKind::Dbdfs,
                                             SolverKind::Cabs};

inline const char* to_string(SolverKind k) {
  switch (k) {
    case SolverKind::Caasdy: return "caasdy";
    case SolverKind::Dfbnb: return "dfbnb";
    case SolverKind::Cbfs: return "cbfs";
    case SolverKind::Acps: return "acps";
    case SolverKind::Apps: return "apps";
    case SolverKind::Dbdfs: return "dbdfs";
    case SolverKind::Cabs: return "cabs";
  }
  return "?";
}

inline std::optional<SolverKind> parse_solver_kind(std::string_view name) {
  for (SolverKind k : kAllSolvers)
    if (name == to_string(k)) return k;
  return std::nullopt;
}

inline Solution solve(const Model& m, SolverKind kind, const SolverParams& p) {
  switch (kind) {
    case SolverKind::Caasdy: return caasdy(m, p);
    case SolverKind::Dfbnb: return dfbnb(m, p);
    case SolverKind::Cbfs: return cbfs(m, p);
    case SolverKind::Acps: return acps(m, p);
    case SolverKind::Apps: return apps(m, p);
    case SolverKind::Dbdfs: return dbdfs(m, p);
    case SolverKind::Cabs: return cabs(m, p);
  }
  return cabs(m, p);
}

}  // namespace didp
