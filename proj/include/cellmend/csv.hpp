#pragma once

#include <filesystem>
#include <string>

#include "cellmend/dataset.hpp"

// CSV persistence for datasets.
//
// Layout: one header line `label,<7 feature names>`, then one row per sample.
// Floats are written with the shortest representation that round-trips
// exactly (std::to_chars), so save -> load is lossless and byte-stable.
// Line endings are '\n'.

namespace cellmend {

// Render a double exactly as the CSV writer would (shortest round-trip form).
std::string format_double(double v);

std::string csv_header();

// Serialize to a string (used by both file output and tests).
std::string to_csv(const Dataset& ds);

void save_csv(const Dataset& ds, const std::filesystem::path& path);

// Parse; throws std::runtime_error naming the offending line on malformed
// input (wrong header, bad field count, non-numeric field, unknown label).
Dataset from_csv(const std::string& text);

Dataset load_csv(const std::filesystem::path& path);

}  // namespace cellmend
