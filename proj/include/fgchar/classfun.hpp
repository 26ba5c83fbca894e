#pragma once

#include <vector>

#include "fgchar/cyclo.hpp"
#include "fgchar/permgroup.hpp"

namespace fgchar {

/// A class function: one exact cyclotomic value per conjugacy class, in the
/// class order of the group's ClassData.
struct ClassFunction {
  GroupRef group;
  std::vector<Cyclo> values;

  const Cyclo& at(int cls) const { return values[cls]; }
  const Cyclo& degree() const { return values[0]; }
  bool operator==(const ClassFunction& other) const {
    return group == other.group && values == other.values;
  }
};

}  // namespace fgchar
