#pragma once

#include <iosfwd>
#include <string>

#include "pcm/matrix.hpp"

namespace pcm {

// Matrix files. JSON: {"format": "pcm-matrix-v1", "n": N, "entries": [[...]]} where a cell
// is an integer, a fraction string like "1/3", or a decimal number. CSV: same cell
// convention, one row per line, '#' lines ignored. A matrix whose every cell is an integer
// or fraction loads in exact mode; any decimal cell switches the whole matrix to floating
// mode. Writers round-trip exact matrices losslessly (fraction strings) and floating
// matrices via shortest-round-trip decimals.

Pcm read_matrix_json(std::istream& in, const std::string& name, double tolerance = 1e-9);
Pcm read_matrix_csv(std::istream& in, const std::string& name, double tolerance = 1e-9);

// Dispatches on extension (.csv vs anything else = JSON).
Pcm read_matrix_file(const std::string& path, double tolerance = 1e-9);

void write_matrix_json(const Pcm& a, std::ostream& out);
void write_matrix_csv(const Pcm& a, std::ostream& out);
void write_matrix_file(const Pcm& a, const std::string& path);

// 64-bit FNV-1a over raw bytes, rendered as 16 hex digits; used for manifest digests.
std::string fnv1a_hex(const std::string& bytes);
std::string file_digest(const std::string& path);

}  // namespace pcm
