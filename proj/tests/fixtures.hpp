#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <string>

#include "graphlink/diagram.hpp"
#include "graphlink/rational.hpp"

namespace fixtures {

// Two-node, three-component sample link used throughout the suite.
inline const char* kLenSpl = R"(graphlink l_en
node n1 +
node n2 -
arrow a1
arrow a2
arrow a3
leaf b1
leaf b2
edge n1 a1 2 -
edge n1 b1 5 -
edge n1 n2 3 3
edge n2 a2 1 -
edge n2 a3 1 -
edge n2 b2 2 -
)";

// (2,3) torus knot.
inline const char* kTrefoilSpl = R"(graphlink trefoil
node n1 +
arrow a1
leaf b1
leaf b2
edge n1 a1 1 -
edge n1 b1 2 -
edge n1 b2 3 -
)";

// Single node, two arrows on fibers 2 and 3, one leaf of weight 5.
inline const char* kSeifert235Spl = R"(graphlink s235
node n1 +
arrow a1
arrow a2
leaf b1
edge n1 a1 2 -
edge n1 a2 3 -
edge n1 b1 5 -
)";

inline graphlink::SpliceDiagram len() {
  return graphlink::parse_diagram(kLenSpl);
}
inline graphlink::SpliceDiagram trefoil() {
  return graphlink::parse_diagram(kTrefoilSpl);
}
inline graphlink::SpliceDiagram seifert235() {
  return graphlink::parse_diagram(kSeifert235Spl);
}

inline graphlink::VecQ phi(std::initializer_list<long> xs) {
  graphlink::VecQ out;
  for (long x : xs) out.push_back(graphlink::Rat(x));
  return out;
}

inline graphlink::VecZ vz(std::initializer_list<long> xs) {
  graphlink::VecZ out;
  for (long x : xs) out.push_back(graphlink::Int(x));
  return out;
}

inline graphlink::VecQ vq(std::initializer_list<graphlink::Rat> xs) {
  return graphlink::VecQ(xs);
}

}  // namespace fixtures

#endif  // TESTS_FIXTURES_HPP
