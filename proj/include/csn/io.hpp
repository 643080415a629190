#pragma once

#include <iosfwd>
#include <string>

#include "csn/configuration.hpp"
#include "csn/family.hpp"

namespace csn {

/// Configuration file format: {"role": "primal"|"transform", "dim": n,
/// "vectors": [["p/q", ...], ...]}. Entries may be integers, "p/q"
/// strings or decimal strings; all are read exactly. Writing uses
/// canonical "p" / "p/q" strings, so round trips are lossless.
CsConfiguration read_configuration(std::istream& in);
CsConfiguration read_configuration_file(const std::string& path);
std::string configuration_to_json(const CsConfiguration& c);
void write_configuration_file(const CsConfiguration& c, const std::string& path);

/// Family files are JSON lists of 1-based index lists.
SetFamily read_family(std::istream& in, int m, int s);
SetFamily read_family_file(const std::string& path, int m, int s);
std::string family_to_json(const SetFamily& f);
void write_family_file(const SetFamily& f, const std::string& path);

}  // namespace csn
