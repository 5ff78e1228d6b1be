#pragma once

#include <string>
#include <vector>

#include "kantor/io.hpp"
#include "kantor/report.hpp"

namespace kantor {

struct CatalogEntry {
  std::string id;
  std::string kind;
  size_t dim = 0;
  std::string summary;
  std::vector<std::string> suites;  // declared self-test suites
};

/// Built-in corpus: the four involutive algebras with their companion
/// automorphisms, the derived (twisted) Kantor systems, the two (-1,-1)
/// systems, the orthosymplectic model and the Chevalley catalog.
const std::vector<CatalogEntry>& catalog();

bool catalog_has(const std::string& id);
SystemFile catalog_item(const std::string& id);

/// Resolves a CLI input: an existing file path is loaded, otherwise the
/// catalog is consulted.
SystemFile resolve_input(const std::string& path_or_id);

/// Runs one named verification suite on a file.  Suites: gjts, kantor,
/// fkts:E,D, structurable, lemmas-kantor, lemmas-mm, star, special-unitary,
/// graded, chevalley.  Triple-system suites applied to an involutive
/// algebra operate on its derived Kantor triple system.
Report run_suite(const SystemFile& file, const std::string& suite, int jobs = 1);

}  // namespace kantor
