#pragma once

#include "permdesign/perm_set.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace permdesign {

/// Permutation-set file format: lines starting with '#' and blank lines are
/// ignored; the first content line is "n=<degree>"; every further line is
/// one permutation in one-line notation (space or comma separated;
/// contiguous digits allowed when n <= 9). Stored files are canonical:
/// sorted rows, space separated.
PermSet parse_permset(std::istream& in, const std::string& origin);
PermSet load_permset(const std::string& path);
std::string format_permset(const PermSet& set);
void store_permset(const PermSet& set, const std::string& path);

/// Latin-square files share the comment and "n=<k>" header rules and carry
/// n rows of n symbols from [1..n].
std::vector<std::vector<int>> parse_latin_square(std::istream& in,
                                                 const std::string& origin);
std::vector<std::vector<int>> load_latin_square(const std::string& path);
std::string format_latin_square(const std::vector<std::vector<int>>& rows);
void store_latin_square(const std::vector<std::vector<int>>& rows,
                        const std::string& path);

} // namespace permdesign
