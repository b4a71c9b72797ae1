#ifndef BENTHAD_IO_HPP
#define BENTHAD_IO_HPP

#include <iosfwd>
#include <string>

#include "benthad/matrix.hpp"

namespace benthad {

inline constexpr const char* kVersion = "benthad 0.1.0";

/// `.had` format: first line the decimal order, then v rows of v characters
/// from {+,-}, LF line endings, nothing else.
HadamardMatrix parse_had(std::istream& in);
HadamardMatrix parse_matrix_file(const std::string& path);

std::string to_had(const HadamardMatrix& h);
void write_matrix_file(const HadamardMatrix& h, const std::string& path);

/// FNV-1a over the sign grid, as 16 hex digits. Stable across runs and
/// platforms; used as the matrix id in reports.
std::string content_hash(const HadamardMatrix& h);

/// Built-in aliases (s4, s16, s64, more generally s<2^h>, paley1-<q>,
/// paley2-<q>); anything else is read as a `.had` file path.
HadamardMatrix resolve_matrix(const std::string& name,
                              int size_limit = kDefaultSizeLimit);

} // namespace benthad

#endif
