#pragma once

#include <string>
#include <vector>

#include "didp/benchmarks/benchmarks.hpp"
#include "support/brute_force.hpp"
#include "support/generators.hpp"

namespace suite {

using didp::bench::ProblemClass;

struct Case {
  ProblemClass cls;
  std::string text;
  didp::Model model;
  bf::Cost expected;  // from enumeration on the raw data
};

inline Case make_case(ProblemClass cls, gen::Rng& r) {
  using namespace didp::bench;
  Case c{cls, {}, {}, {}};
  switch (cls) {
    case ProblemClass::Tsptw: {
      c.text = gen::tsptw(r);
      auto x = parse_tsptw(c.text);
      c.expected = bf::tsptw(x);
      c.model = build_tsptw(x);
      break;
    }
    case ProblemClass::Cvrp: {
      c.text = gen::cvrp(r);
      auto x = parse_cvrp(c.text);
      c.expected = bf::cvrp(x);
      c.model = build_cvrp(x);
      break;
    }
    case ProblemClass::Mpdtsp: {
      c.text = gen::mpdtsp(r);
      auto x = parse_mpdtsp(c.text);
      c.expected = bf::mpdtsp(x);
      c.model = build_mpdtsp(x);
      break;
    }
    case ProblemClass::Optw: {
      c.text = gen::optw(r);
      auto x = parse_optw(c.text);
      c.expected = bf::optw(x);
      c.model = build_optw(x);
      break;
    }
    case ProblemClass::Mdkp: {
      c.text = gen::mdkp(r);
      auto x = parse_mdkp(c.text);
      c.expected = bf::mdkp(x);
      c.model = build_mdkp(x);
      break;
    }
    case ProblemClass::BinPacking: {
      c.text = gen::binpacking(r);
      auto x = parse_binpacking(c.text);
      c.expected = bf::binpacking(x);
      c.model = build_binpacking(x);
      break;
    }
    case ProblemClass::Salbp1: {
      c.text = gen::salbp1(r);
      auto x = parse_salbp1(c.text);
      c.expected = bf::salbp1(x);
      c.model = build_salbp1(x);
      break;
    }
    case ProblemClass::Wt: {
      c.text = gen::wt(r);
      auto x = parse_wt(c.text);
      c.expected = bf::wt(x);
      c.model = build_wt(x);
      break;
    }
    case ProblemClass::Talent: {
      auto tc = gen::talent(r);
      c.text = tc.text;
      c.expected = bf::talent(tc.raw);
      c.model = build_talent(parse_talent(c.text));
      break;
    }
    case ProblemClass::Mosp: {
      c.text = gen::mosp(r);
      auto x = parse_mosp(c.text);
      c.expected = bf::mosp(x);
      c.model = build_mosp(x);
      break;
    }
    case ProblemClass::GraphClear: {
      c.text = gen::graphclear(r);
      auto x = parse_graphclear(c.text);
      c.expected = bf::graphclear(x);
      c.model = build_graphclear(x);
      break;
    }
  }
  return c;
}

// Deterministic per class: the seed mixes a base value with the class index.
inline std::vector<Case> cases(ProblemClass cls, std::size_t count, std::uint64_t seed = 20240601) {
  gen::Rng r(seed * 31 + static_cast<std::uint64_t>(cls));
  std::vector<Case> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(make_case(cls, r));
  return out;
}

}  // namespace suite
