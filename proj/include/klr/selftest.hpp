#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace klr {

struct SelftestItem {
  std::string name;
  std::function<bool()> check;
};

/// Golden worked examples, one item each.
std::vector<SelftestItem> selftest_items();
/// Prints "PASS name" / "FAIL name" per item; returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace klr
