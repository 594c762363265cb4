#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "tropfan/fan.hpp"
#include "tropfan/matroid.hpp"

namespace tropfan {

// Fan files:
//
//   tropfan-fan 1
//   rank 2
//   rays 3
//   1 0
//   0 1
//   -1 -1
//   cones 3
//   0
//   1
//   2
//   weights 1 1 1     (optional, one per cone; pure fans default to 1)
//   values 0 0 1/2    (optional, one rational per ray)
//
// Blank lines and '#' comments are ignored. The zero cone is written "-".

FanDescription parse_fan(std::istream& in);
FanDescription parse_fan_string(const std::string& text);
void write_fan(std::ostream& out, const FanDescription& fan);
std::string fan_to_string(const FanDescription& fan);

//   tropfan-matroid 1
//   ground 3
//   bases 3
//   0 1
//   0 2
//   1 2
Matroid parse_matroid(std::istream& in);
Matroid parse_matroid_string(const std::string& text);
void write_matroid(std::ostream& out, const Matroid& m);

/// Reads a whole file, or standard input for "-".
std::string read_input(const std::string& path);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv_digest(const std::string& bytes);

}  // namespace tropfan
