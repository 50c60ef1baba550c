#ifndef HOPFCAT_HOPF_FILE_HPP
#define HOPFCAT_HOPF_FILE_HPP

#include <string>
#include <string_view>

#include "hopfcat/hopf_algebra.hpp"

namespace hopfcat {

/// Reads the JSON text format (format_version "1"). Throws ParseError with the
/// line and column of a syntax or structure error, VersionMismatchError for an
/// unknown version, and AxiomError listing every failed axiom with its
/// witness. The axiom report is stored in report when given.
HopfPtr parse_hopf(std::string_view text, AxiomReport* report = nullptr);
HopfPtr read_hopf_file(const std::string& path, AxiomReport* report = nullptr);

/// Canonical text: fixed key order, sorted coefficient tuples, one tuple per
/// line.
std::string serialize_hopf(const HopfAlgebra& h);
void write_hopf_file(const HopfAlgebra& h, const std::string& path);

}  // namespace hopfcat

#endif  // HOPFCAT_HOPF_FILE_HPP
