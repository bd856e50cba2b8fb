#include "bfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace homn {

std::vector<BfileEntry> read_bfile(std::istream& in) {
  std::vector<BfileEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::uint64_t index = 0;
    std::string value;
    if (!(fields >> index >> value)) {
      throw std::runtime_error("b-file: malformed line " +
                               std::to_string(lineno) + ": " + line);
    }
    out.emplace_back(index, Natural(value));
  }
  return out;
}

std::vector<BfileEntry> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("b-file: cannot open " + path);
  return read_bfile(in);
}

void write_bfile(std::ostream& out, const std::vector<Natural>& terms,
                 std::uint64_t start_index) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << (start_index + i) << ' ' << terms[i].to_string() << '\n';
  }
}

}  // namespace homn
