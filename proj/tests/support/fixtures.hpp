#pragma once

#include <map>
#include <memory>
#include <string>

#include "resobdd/diagram.hpp"

namespace fixtures {

using resobdd::Diagram;
using resobdd::DiagramStore;
using resobdd::NodeId;
using resobdd::kTerm0;
using resobdd::kTerm1;

/// A diagram plus its nodes by letter.
struct Named {
  Diagram d;
  std::map<std::string, NodeId> at;
  NodeId operator[](const std::string& k) const { return at.at(k); }
};

/// Five-variable ROBDD with nodes a..f:
/// a=[0,b,c] b=[1,d,e] c=[1,T0,f] d=[2,e,T1] e=[3,T0,f] f=[4,T1,T0].
inline Named cost_example(std::size_t buckets = resobdd::kDefaultBucketCount) {
  auto s = std::make_shared<DiagramStore>(5, resobdd::ReductionMode::Robdd, buckets);
  std::map<std::string, NodeId> m;
  m["f"] = s->mk_node(4, kTerm1, kTerm0);
  m["e"] = s->mk_node(3, kTerm0, m["f"]);
  m["d"] = s->mk_node(2, m["e"], kTerm1);
  m["c"] = s->mk_node(1, kTerm0, m["f"]);
  m["b"] = s->mk_node(1, m["d"], m["e"]);
  m["a"] = s->mk_node(0, m["b"], m["c"]);
  return Named{Diagram(s, m["a"]), m};
}

/// Five-variable diagram used for edge recovery, nodes a..h:
/// a=[0,b,h] b=[1,c,f] c=[2,T1,d] d=[3,T1,e] e=[4,T1,T0]
/// f=[2,d,g] g=[3,T1,T0] h=[1,f,g].
inline Named edge_example(std::size_t buckets = resobdd::kDefaultBucketCount) {
  auto s = std::make_shared<DiagramStore>(5, resobdd::ReductionMode::Robdd, buckets);
  std::map<std::string, NodeId> m;
  m["e"] = s->mk_node(4, kTerm1, kTerm0);
  m["g"] = s->mk_node(3, kTerm1, kTerm0);
  m["d"] = s->mk_node(3, kTerm1, m["e"]);
  m["c"] = s->mk_node(2, kTerm1, m["d"]);
  m["f"] = s->mk_node(2, m["d"], m["g"]);
  m["h"] = s->mk_node(1, m["f"], m["g"]);
  m["b"] = s->mk_node(1, m["c"], m["f"]);
  m["a"] = s->mk_node(0, m["b"], m["h"]);
  return Named{Diagram(s, m["a"]), m};
}

/// Literal x_i over n variables in a store of the given mode.
inline Diagram literal(std::uint32_t n, std::uint32_t i,
                       resobdd::ReductionMode mode = resobdd::ReductionMode::Robdd) {
  auto s = std::make_shared<DiagramStore>(n, mode);
  return Diagram(s, s->mk_node(i, kTerm0, kTerm1));
}

}  // namespace fixtures
