#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "endobrace/group.hpp"

namespace endobrace {

// Cayley-table text format: line 1 "order n", then n lines of n
// whitespace-separated 0-based ids; the identity must be row/column 0.
GroupPtr read_group(std::istream& in, const std::string& name, const Limits& limits = {});
GroupPtr load_group_file(const std::string& path, const Limits& limits = {});
void write_group(std::ostream& out, const Group& g);
std::string group_to_text(const Group& g);

// Endomorphism file format: |G| whitespace-separated element ids (the full
// image table).
std::vector<int> read_image_table(std::istream& in, int order);
std::vector<int> load_image_table_file(const std::string& path, int order);

// Generator form "gen:g1->x1,g2->x2"; also accepts a UTF-8 arrow. The listed
// elements must generate the group; the extension is checked to be a
// homomorphism.
GroupMap parse_generator_endo(GroupPtr g, const std::string& text);

}  // namespace endobrace
