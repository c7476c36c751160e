#ifndef APX_CERTIFICATE_HPP_
#define APX_CERTIFICATE_HPP_

#include <string>
#include <vector>

#include "apx/carrier.hpp"

namespace apx {

// A named check that certifies one step of a construction. Constructions
// compute their certificates eagerly; a failed entry means the built object
// contradicts the law it was built from.
struct NamedCheck {
  std::string name;
  bool passed = false;
  std::vector<Index> witness;  // least witness when failed, empty otherwise
};

using Certificate = std::vector<NamedCheck>;

inline bool all_passed(const Certificate& cert) {
  for (const auto& c : cert) {
    if (!c.passed) return false;
  }
  return true;
}

inline void add_check(Certificate& cert, std::string name, bool passed,
                      std::vector<Index> witness = {}) {
  cert.push_back({std::move(name), passed, std::move(witness)});
}

}  // namespace apx

#endif  // APX_CERTIFICATE_HPP_
