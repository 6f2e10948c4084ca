#include <string>

#include "resobdd/apply.hpp"
#include "resobdd/diagram.hpp"

namespace resobdd {

namespace {

void check_cube(std::uint32_t num_vars, const std::string& cube) {
  if (cube.size() != num_vars) {
    throw ParseError(0, "cube '" + cube + "' has length " + std::to_string(cube.size()) +
                     ", expected " + std::to_string(num_vars));
  }
  for (char c : cube) {
    if (c != '0' && c != '1' && c != '-' && c != '2') {
      throw ParseError(0, "cube '" + cube + "' contains '" + std::string(1, c) + "'");
    }
  }
}

NodeId cube_chain(DiagramStore& store, const std::string& cube) {
  NodeId cur = kTerm1;
  for (std::size_t i = cube.size(); i-- > 0;) {
    if (cube[i] == '1') cur = store.mk_node(static_cast<Level>(i), kTerm0, cur);
    if (cube[i] == '0') cur = store.mk_node(static_cast<Level>(i), cur, kTerm0);
  }
  return cur;
}

}  // namespace

Diagram from_cubes(std::uint32_t num_vars, std::span<const std::string> onset,
                   std::span<const std::string> dcset, bool dc_as_one) {
  for (const auto& c : onset) check_cube(num_vars, c);
  for (const auto& c : dcset) check_cube(num_vars, c);

  auto store = std::make_shared<DiagramStore>(num_vars, ReductionMode::Robdd);
  Diagram acc(store, kTerm0);
  auto add = [&](const std::string& cube) {
    Diagram term(store, cube_chain(*store, cube));
    acc = Diagram(store, apply_into(*store, BoolOp::Or, acc, term));
  };
  for (const auto& c : onset) add(c);
  if (dc_as_one) {
    for (const auto& c : dcset) add(c);
  }
  // Drop the intermediate results.
  return reduce_robdd(acc);
}

}  // namespace resobdd
