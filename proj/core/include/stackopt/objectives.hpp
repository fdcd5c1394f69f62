#pragma once

namespace stackopt {

// Cost is minimized, quality (test/dev ratio) is maximized.
struct ObjectiveVector {
  double cost = 0.0;
  double quality = 0.0;

  friend bool operator==(ObjectiveVector const&,
                         ObjectiveVector const&) = default;
};

} // namespace stackopt
