#pragma once
// On-disk persistence of computed Kazhdan-Lusztig tables.
//
// Files live under a per-user cache directory and are named by Cartan type
// (kl_A3.json).  The JSON payload is:
//
//   {
//     "format_version": 1,
//     "cartan": "A3",
//     "P":  [["x word", "y word", c0, c1, ...], ...],   // P_{x,y}(q) coefficients
//     "mu": [["x word", "y word", m], ...]
//   }
//
// Loading validates the table with seeded-random bar-invariance spot checks
// before it is trusted (CacheValidationError otherwise).

#include <cstdint>
#include <filesystem>
#include <string>

#include "heckecat/hecke.hpp"

namespace heckecat {

// Cache directory resolution: `override_dir` if non-empty, else
// $HECKECAT_CACHE, else $XDG_DATA_HOME/heckecat, else ~/.local/share/heckecat.
std::filesystem::path cache_directory(const std::string& override_dir = "");

// Full path of the cache file for one Cartan type.
std::filesystem::path cache_file(const CartanType& type,
                                 const std::string& override_dir = "");

// Computes anything missing, then writes the full table.  Returns the path
// written.  Throws Error when the directory or file cannot be written.
std::filesystem::path save_kl_cache(KLCache& cache,
                                    const std::string& override_dir = "");

// Loads a previously saved table into `cache` if the file exists.  Returns
// false when there is no cache file.  Throws CacheValidationError when the
// file exists but is malformed, names a different group, or fails the seeded
// spot checks.
bool load_kl_cache(KLCache& cache, const std::string& override_dir = "",
                   std::uint64_t seed = 12345, int spot_checks = 10);

}  // namespace heckecat
