#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace polybernoulli::detail {

// Validates one side of a matched partition: `special` plus the classes in
// `ordinary` must partition {1..ground}, the special class must contain
// `ground`, every class sorted and every ordinary class nonempty.
inline bool partition_side_ok(int ground, int m, const std::vector<int>& special,
                              const std::vector<std::vector<int>>& ordinary,
                              const char* side, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = std::string(side) + ": " + why;
    return false;
  };
  if (static_cast<int>(ordinary.size()) != m) return fail("ordinary class count != m");
  std::vector<char> seen(ground + 1, 0);
  auto absorb = [&](const std::vector<int>& cls) {
    if (!std::is_sorted(cls.begin(), cls.end())) return false;
    for (int x : cls) {
      if (x < 1 || x > ground || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  };
  if (!absorb(special)) return fail("special class malformed or overlapping");
  if (std::find(special.begin(), special.end(), ground) == special.end())
    return fail("special class must contain the added element");
  for (const auto& cls : ordinary) {
    if (cls.empty()) return fail("empty ordinary class");
    if (!absorb(cls)) return fail("ordinary class malformed or overlapping");
  }
  for (int x = 1; x <= ground; ++x)
    if (!seen[x]) return fail("classes do not cover the ground set");
  return true;
}

// Calls back with every partition of {1..ground} into exactly `blocks`
// nonempty blocks (each block sorted; block order is the discovery order of
// their minima).
template <typename Callback>
void for_each_set_partition(int ground, int blocks, Callback&& callback) {
  std::vector<std::vector<int>> current;
  auto assign = [&](auto&& self, int element) -> void {
    if (element > ground) {
      if (static_cast<int>(current.size()) == blocks) callback(current);
      return;
    }
    // Index-based: the recursive call below grows and shrinks `current`,
    // which may reallocate.
    for (std::size_t i = 0; i < current.size(); ++i) {
      current[i].push_back(element);
      self(self, element + 1);
      current[i].pop_back();
    }
    if (static_cast<int>(current.size()) < blocks) {
      current.push_back({element});
      self(self, element + 1);
      current.pop_back();
    }
  };
  if (blocks == 0 && ground == 0) {
    callback(current);
    return;
  }
  assign(assign, 1);
}

}  // namespace polybernoulli::detail
