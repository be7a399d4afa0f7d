#pragma once

#include <string>
#include <vector>

namespace flattice {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, std::string detail = "") {
    items.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
  const CheckItem* first_failure() const {
    for (const auto& i : items)
      if (!i.pass) return &i;
    return nullptr;
  }
};

}  // namespace flattice
