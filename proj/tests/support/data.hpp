#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bindkit/pi.hpp"
#include "bindkit/text.hpp"

namespace bindkit::testing {

inline std::string data_path(const std::string& rel) { return std::string(BINDKIT_TEST_DATA) + "/" + rel; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Non-blank lines that do not start with '#'.
inline std::vector<std::string> data_lines(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

/// A process corpus line: surface syntax, or canonical form after "ln ".
inline Term parse_process_line(const std::string& line, text::NameTable& names) {
  if (line.rfind("ln ", 0) == 0) return text::parse_ln(line.substr(3), pi::signature(), names);
  return text::parse_pi(line, names);
}

}  // namespace bindkit::testing
