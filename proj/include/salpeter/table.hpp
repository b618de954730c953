#pragma once

#include <string>
#include <vector>

#include "salpeter/solver.hpp"

namespace salpeter {

// CSV: fixed header, comma separator, '.' decimal point, 17 significant
// digits. Rows sorted by (method, n, two_j, l) regardless of how they were
// produced.
std::string to_csv(std::vector<SpectrumEntry> levels);

// JSON object {"params": {...}, "levels": [...]}, numbers as numbers.
std::string to_json(const PhysicalParams& params, std::vector<SpectrumEntry> levels);

// 17-significant-digit rendering shared by both formats.
std::string format_double(double v);

void sort_entries(std::vector<SpectrumEntry>& levels);

}  // namespace salpeter
