#pragma once

#include <string>

namespace pcurv {

std::string version();

}  // namespace pcurv
