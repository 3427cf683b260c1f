#pragma once

#include <string>

#include "x2y2/eigensolve.hpp"
#include "x2y2/types.hpp"

namespace x2y2 {

// Coordinate-list text export: one "i j re im" line per upper-triangle entry
// (0-based, i <= j), plus a JSON metadata sidecar at <path>.json.
// Values are printed with 17 significant digits, so round-trips are bit-exact.
void export_operator(const SparseHermitianOperator& op, const std::string& path);
SparseHermitianOperator import_operator(const std::string& path);

std::string to_json_line(const SpectralResult& r);
std::string to_json_line(const CountResult& r);

// Appends one JSON line to an append-only results file.
void append_json_line(const std::string& path, const std::string& line);

}  // namespace x2y2
