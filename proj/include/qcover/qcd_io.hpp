#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qcover/design.hpp"

namespace qcover {

// Text format, one design per file:
//   QCD1 q=2 n=<n> k=<k> r=<r> count=<count> prov=<tag>
//   ann <label>=<row>,<row>,...:<count>        (zero or more)
//   <row> <row> ... <row>                      (count lines, k rows each)
// Rows are fixed-width lowercase hex, ceil(n/4) digits, in reduced
// row-echelon order.  Block lines must appear in ascending order.

void qcd_write(std::ostream& os, const CoveringDesign& d);
void qcd_write_file(const std::string& path, const CoveringDesign& d);

struct QcdParseError : std::runtime_error {
    int line;
    QcdParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

CoveringDesign qcd_read(std::istream& is);
CoveringDesign qcd_read_file(const std::string& path);

}  // namespace qcover
