#pragma once

#include <string>

#include "pseudocone/gf2.hpp"

namespace pseudocone {

// Standard sparse alist format: header "n m", max degrees, per-column and
// per-row weights, then 1-indexed neighbor lists padded with zeros.  A dense
// fallback (one row of contiguous 0/1 characters per line) is auto-detected
// by header shape.  Column and row lists must be mutually consistent.
BinaryMatrix parse_alist(const std::string& text);

std::string serialize_alist(const BinaryMatrix& h);

}  // namespace pseudocone
