#pragma once

#include <string>

#include "nhodge/errors.hpp"

namespace nhodge::cli {

struct CatalogueEntry {
  int exit_code;
  const char* assumption;  // the violated assumption, printed verbatim on stderr
};

const CatalogueEntry& catalogue_entry(ErrorCode code);

// "nhodge: E_CODE: <assumption> [<detail>]"
std::string diagnostic(const Error& e);

}  // namespace nhodge::cli
