#pragma once

#include <optional>
#include <string>

namespace psi {

// Write-then-rename so readers never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);  // throws config_error
std::optional<std::string> read_file_if_exists(const std::string& path);

}  // namespace psi
