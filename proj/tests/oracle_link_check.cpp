// Built against the oracle library alone: any kernel symbol the oracles pull in
// becomes an undefined reference here.
#include <cstdio>

#include "helly/oracles.hpp"

int main() {
    auto [c, r] = helly::oracles::circle_circumcircle({0, 0}, {4, 0}, {0, 3});
    auto pts = helly::oracles::circle_pair_points({0, 0}, 1, {1, 0}, 1);
    bool ok = c.x == 2.0 && c.y == 1.5 && r == 2.5 && pts.size() == 2;
    std::puts(ok ? "oracles standalone" : "oracle mismatch");
    return ok ? 0 : 1;
}
