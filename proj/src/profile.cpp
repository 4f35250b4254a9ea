#include "meridian/profile.hpp"

#include <sstream>

namespace meridian::profiles {

Profile1D constant(double c) {
  std::ostringstream os;
  os << c;
  return {[c](const Jet2&) { return Jet2::constant(c); }, os.str()};
}

Profile1D linear(double slope, double intercept) {
  std::ostringstream os;
  os << slope << "*t+" << intercept;
  return {[slope, intercept](const Jet2& t) { return slope * t + intercept; }, os.str()};
}

Profile1D identity() {
  return {[](const Jet2& t) { return t; }, "t"};
}

Profile1D from(std::function<Jet2(const Jet2&)> fn, std::string label) {
  return {std::move(fn), std::move(label)};
}

}  // namespace meridian::profiles
