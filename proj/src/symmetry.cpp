#include "humbert/symmetry.hpp"

namespace humbert {

std::string_view iso_name(IsoType t) {
  switch (t) {
    case IsoType::Trivial: return "trivial";
    case IsoType::Z2: return "Z2";
    case IsoType::Z3: return "Z3";
    case IsoType::Z4: return "Z4";
    case IsoType::Z5: return "Z5";
    case IsoType::D3: return "D3";
    case IsoType::D5: return "D5";
    case IsoType::Anomaly: return "ANOMALY";
  }
  return "ANOMALY";
}

}  // namespace humbert
