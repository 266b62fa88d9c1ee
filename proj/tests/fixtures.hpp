#pragma once

#include <string>
#include <vector>

#include "helpers.hpp"

namespace fixtures {

using testing_util::vars;

inline const std::vector<std::string> XY = vars({"x", "y"});
inline const std::vector<std::string> XYZ = vars({"x", "y", "z"});
inline const std::vector<std::string> X4 = vars({"x1", "x2", "x3", "x4"});

inline const char* kCusp = "x^2+y^3";
inline const char* kSaitoZ = "z*(x^4+x*y^4+y^5)";
inline const char* kSaitoCurve = "x^4+x*y^4+y^5";
inline const char* kFourLines = "x*y*(x+y)*(x*z+y)";
inline const char* kSwallowtail =
    "16*x^4*z-4*x^3*y^2-128*x^2*z^2+144*x*y^2*z-27*y^4+256*z^3";
inline const char* kDet4 = "3*x2^2*x3^2-6*x1*x3^3-8*x2^3*x4+18*x1*x2*x3*x4-9*x1^2*x4^2";

// chi, eta, sigma_+, sigma_- : the linear fields x A d for A = X, H, S+, S-.
inline std::vector<std::string> det4_fields() {
  return {"x1*dx1+x2*dx2+x3*dx3+x4*dx4",
          "3*x1*dx1+x2*dx2-x3*dx3-3*x4*dx4",
          "x2*dx1+x3*dx2+x4*dx3",
          "-3*x1*dx2-4*x2*dx3-3*x3*dx4"};
}

}  // namespace fixtures
