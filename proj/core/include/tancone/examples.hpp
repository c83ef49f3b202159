#pragma once

#include <string>

namespace tancone::examples {

// Bundled linkage documents, byte-identical to the files shipped in data/.
const std::string& sixbar();      // spatial 6-bar, transversal bifurcation
const std::string& sevenR();      // 7R with non-transversal branch contact
const std::string& fourbar();     // planar 4-bar at a regular configuration
const std::string& twojoint();    // two coaxial prismatic joints, one loop

} // namespace tancone::examples
