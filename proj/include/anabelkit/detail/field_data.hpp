#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "anabelkit/detail/flat_ring.hpp"
#include "anabelkit/detail/tower.hpp"
#include "anabelkit/local_field.hpp"

namespace anabelkit::detail {

// How level k of the nested tower was obtained from level k-1.
struct RamifiedStep {
  int m = 0;
  std::string label;  // the internal generator y equals label^power
  long power = 1;
  Vec shift;          // c in level k-1
  long s = 1;         // pi_k = (y - c)^s * pi_{k-1}^t
  long t = 0;
  long w = 1;         // valuation of y - c in level k
};

// Same field with a single absolute Eisenstein level over the base.
struct FlatData {
  Tower tower;
  int top = 0;
  Matrix krylov;      // nested base coordinates of pi^i, column i
  Matrix krylov_inv;
  std::vector<Vec> eisenstein;  // E_0 .. E_{e-1}
  FlatRing ring;
  std::map<std::string, FlatValue> generators;
};

struct FieldData {
  unsigned p = 0;
  long precision = kDefaultPrecision;
  long work_precision = kDefaultPrecision;
  std::vector<TowerStep> steps;
  Tower nested;
  std::vector<RamifiedStep> ramified;  // ramified[k-1] builds nested level k
  bool unramified_base = false;
  std::string base_label;              // generator of the unramified base, if any
  std::vector<std::string> labels;
  std::map<std::string, Vec> generators;  // images in the nested top level

  int top() const { return nested.top(); }
  long degree() const { return static_cast<long>(nested.size(top())); }

  const FlatData& flat() const;
  Vec to_flat(const Vec& nested_top) const;
  Vec to_nested(const Vec& flat) const;

  mutable std::once_flag flat_once;
  mutable std::unique_ptr<FlatData> flat_data;
};

}  // namespace anabelkit::detail
