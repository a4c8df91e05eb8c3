#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holoreg/group.hpp"
#include "holoreg/holomorph.hpp"
#include "holoreg/realizability.hpp"

namespace holoreg {

/// Ordered key:value lines.
class Report {
 public:
  Report& add(std::string key, std::string value);
  Report& add(std::string key, std::size_t value);
  Report& add(std::string key, bool value);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

/// "translation=<label> twist=[g1->img1,g2->img2]" over a minimal generating set.
std::string format_hol_element(const FiniteGroup& n, const HolElement& h);

Report verdict_report(const std::string& spec, const FiniteGroup& n, const Verdict& v);

}  // namespace holoreg
