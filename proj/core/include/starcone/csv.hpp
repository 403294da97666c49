#pragma once

#include <string>

namespace starcone {
namespace csv {

// Fixed 12 significant digits, general format. All report tables use this so
// reruns compare byte for byte.
std::string number(double v);

// Shortest digit string that round-trips through a double.
std::string number_exact(double v);

}  // namespace csv
}  // namespace starcone
