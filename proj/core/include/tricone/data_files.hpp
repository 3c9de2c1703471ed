#pragma once

#include <string>
#include <vector>

namespace tricone::fixtures {

// Names of the example data files shipped with the repository.  Their
// canonical contents are generated from the embedded fixtures, so the
// files on disk can be checked (and regenerated) byte for byte.
std::vector<std::string> data_file_names();

// Canonical content of one data file; throws ParseError for unknown
// names.
std::string data_file_content(const std::string& name);

}  // namespace tricone::fixtures
