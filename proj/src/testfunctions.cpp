#include "polybound/testfunctions.hpp"

#include "polybound/errors.hpp"

namespace polybound {

namespace {

MPoly x(unsigned i) { return MPoly::variable(2, i); }
MPoly c(const Rat& v) { return MPoly::constant(2, v); }

TestFunction make(const std::string& name, MPoly poly, std::vector<std::vector<Rat>> mins) {
  TestFunction f{name, std::move(poly), Rat(0), std::move(mins)};
  for (const auto& m : f.minimizers) {
    if (f.poly.eval(std::span<const Rat>(m)) != f.f_min)
      throw Error("catalog minimizer does not attain the stated minimum: " + name);
  }
  return f;
}

}  // namespace

const std::vector<std::string>& test_function_names() {
  static const std::vector<std::string> names{"booth", "matyas", "camel", "motzkin"};
  return names;
}

TestFunction test_function(const std::string& name) {
  if (name == "booth") {
    MPoly a = x(0) * Rat(10) + x(1) * Rat(20) - c(Rat(7));
    MPoly b = x(0) * Rat(20) + x(1) * Rat(10) - c(Rat(5));
    return make("booth", a * a + b * b, {{Rat(1, 10), Rat(3, 10)}});
  }
  if (name == "matyas") {
    return make("matyas", (x(0) * x(0) + x(1) * x(1)) * Rat(26) - x(0) * x(1) * Rat(48),
                {{Rat(0), Rat(0)}});
  }
  if (name == "camel") {
    MPoly x2 = x(0) * x(0);
    return make("camel",
                x2 * Rat(50) - pow(x(0), 4) * Rat(2625, 4) + pow(x(0), 6) * Rat(15625, 6) +
                    x(0) * x(1) * Rat(25) + x(1) * x(1) * Rat(25),
                {{Rat(0), Rat(0)}});
  }
  if (name == "motzkin") {
    MPoly p = pow(x(0), 4) * (x(1) * x(1)) * Rat(64) + (x(0) * x(0)) * pow(x(1), 4) * Rat(64) -
              (x(0) * x(0)) * (x(1) * x(1)) * Rat(48) + c(Rat(1));
    std::vector<std::vector<Rat>> mins;
    for (int sx : {1, -1})
      for (int sy : {1, -1}) mins.push_back({Rat(sx, 2), Rat(sy, 2)});
    return make("motzkin", std::move(p), std::move(mins));
  }
  throw UnknownName("unknown test function: " + name);
}

}  // namespace polybound
