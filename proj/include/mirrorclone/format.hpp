#pragma once

#include <string>

namespace mirrorclone {

/// Locale-independent %.17g rendering; -0 prints as 0.
std::string format_double(double value);

}  // namespace mirrorclone
