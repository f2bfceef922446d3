#include "toric/examples.hpp"

#include "toric/error.hpp"

namespace toric {

namespace {

Fan hirzebruch(std::int64_t a) {
  return Fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{0, 3}}});
}

}  // namespace

Fan builtin_fan(std::string_view name) {
  if (name == "P1") return Fan(1, {{1}, {-1}}, {{{0}}, {{1}}});
  if (name == "P2") return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{{0, 1}}, {{1, 2}}, {{0, 2}}});
  if (name == "P3")
    return Fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
               {{{0, 1, 2}}, {{0, 1, 3}}, {{0, 2, 3}}, {{1, 2, 3}}});
  if (name == "P1xP1")
    return Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{{0, 2}}, {{0, 3}}, {{1, 2}}, {{1, 3}}});
  if (name == "F1") return hirzebruch(1);
  if (name == "F2") return hirzebruch(2);
  throw InputError("unknown example '" + std::string(name) + "' (known: P1, P2, P3, P1xP1, F1, F2)");
}

std::vector<std::string> builtin_fan_names() { return {"P1", "P2", "P3", "P1xP1", "F1", "F2"}; }

}  // namespace toric
