#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "families.hpp"
#include "polynomial.hpp"

namespace llab::test {

inline std::vector<std::string> names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  for (std::string s; std::getline(ss, s, ',');) out.push_back(s);
  return out;
}

inline VarsPtr vars(const std::string& csv, std::optional<std::size_t> split = std::nullopt) {
  return VariableSet::make(names(csv), split);
}

inline Poly poly(const std::string& text, const std::string& csv,
                 std::optional<std::size_t> split = std::nullopt) {
  return parse_poly(text, vars(csv, split));
}

inline Poly ikeda() {
  return poly("x0*u1^3*u2 + x1*u1*u2^3 + x0^3*x1^2", "x0,x1,u1,u2", 2);
}

inline Poly perazzo() { return poly("x*u^2 + y*u*v + z*v^2", "x,y,z,u,v", 3); }

inline LinearForm form(const Poly& f, const std::string& text) {
  return parse_linear_form(text, f.vars_ptr());
}

inline std::vector<DiffOp> ops(const Poly& f, const std::vector<std::string>& texts) {
  std::vector<DiffOp> out;
  for (const auto& t : texts) out.push_back(parse_diffop(t, f.vars_ptr()));
  return out;
}

inline std::vector<bool> vanishing_flags(const std::vector<VanishingVerdict>& profile) {
  std::vector<bool> out;
  for (const auto& v : profile) out.push_back(v.vanishes);
  return out;
}

}  // namespace llab::test
