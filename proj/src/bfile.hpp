#pragma once

// OEIS b-file format: one "index value" pair per line, space-separated,
// newline-terminated, no header. Lines starting with '#' and blank lines
// are ignored on input (downloaded b-files carry comments).

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace homn {

using BfileEntry = std::pair<std::uint64_t, Natural>;

std::vector<BfileEntry> read_bfile(std::istream& in);
std::vector<BfileEntry> read_bfile(const std::string& path);

void write_bfile(std::ostream& out, const std::vector<Natural>& terms,
                 std::uint64_t start_index = 0);

}  // namespace homn
