#pragma once

#include <iosfwd>
#include <string>

#include "addcomb/group.hpp"
#include "addcomb/spectral.hpp"

namespace addcomb {

// Set file format: first line "group: m_1,...,m_r", then one element per
// line as comma-separated coordinates. Whitespace-insensitive, order of
// lines irrelevant.
GroupSet read_set(std::istream& in);
GroupSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const GroupSet& s);
void write_set_file(const std::string& path, const GroupSet& s);

// Function file format: "group:" header, then lines "coords : value" with
// an integer or "re,im" value.
ComplexFunction read_function(std::istream& in);
ComplexFunction read_function_file(const std::string& path);
void write_function(std::ostream& out, const ComplexFunction& f);
void write_function(std::ostream& out, const DenseFunction& f);

}  // namespace addcomb
