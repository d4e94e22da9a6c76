#pragma once

#include <functional>
#include <ostream>
#include <string>

namespace farey {

// Writes through a sibling temp file and renames it into place, so a failed
// write never leaves a partial file behind. Throws Error(Io).
void write_file_atomic(const std::string& path, const std::function<void(std::ostream&)>& fill);

}  // namespace farey
