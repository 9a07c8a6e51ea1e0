#pragma once

#include <optional>
#include <string>

#include "isofam/omega.hpp"

namespace isofam {

// One record per line: {"B":[[...]],"eps":mask,"dim":d}, sorted by eps.
std::string phi_jsonl(const PhiTable& table);

// {"B":...,"lifted":...,"epsPrime":mask,"n":...,"sign":"+/-","sector":int|null}
std::string omega_jsonl(const OmegaTable& table);

// Cache files carry a schema header line; loading checks the tag and the
// (case, N) stamp and re-parses the records. Any mismatch or parse failure
// returns nullopt so callers can recompute.
bool save_phi_cache(const PhiTable& table, const std::string& path);
std::optional<PhiTable> load_phi_cache(const Setup& setup, const std::string& path,
                                       std::string* warning);

// Default cache file name for a setup inside a cache directory.
std::string cache_file_name(const Setup& setup);

}  // namespace isofam
