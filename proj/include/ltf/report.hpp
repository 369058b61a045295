#pragma once

#include <iosfwd>

#include "ltf/extract.hpp"

namespace ltf {

/// One JSON object with every ExtractionResult field.
void write_result_json(std::ostream& out, const ExtractionResult& result);

/// Header plus one row; kept_edges are space-separated in the last column.
void write_result_csv(std::ostream& out, const ExtractionResult& result);

}  // namespace ltf
