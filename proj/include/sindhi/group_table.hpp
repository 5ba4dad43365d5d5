#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sindhi {

enum class TableKind { Sound, Shape };

std::string_view to_string(TableKind kind);
std::optional<TableKind> parse_table_kind(std::string_view name);

// Ordered code symbols for a table kind: 0-9 then A-L (sound) or A-Z (shape).
std::string_view code_alphabet(TableKind kind);

struct Group {
  char code;
  std::vector<char32_t> members;  // declaration order

  friend bool operator==(const Group&, const Group&) = default;
};

// Result of classify(); `code` is empty for unmapped scalars.
struct CharClass {
  char32_t scalar;
  std::optional<char> code;

  bool unmapped() const { return !code.has_value(); }
};

// A validated partition of scalars into coded groups. Immutable after load.
class GroupTable {
 public:
  // Parses and validates the table file format:
  //   '#' comment lines, blank lines ignored,
  //   data line = <code> <member> <member> ...
  // Throws TableError.
  static GroupTable load(std::string_view source, TableKind kind);
  // Validates groups built in memory; same checks as load.
  static GroupTable from_groups(std::vector<Group> groups, TableKind kind);

  TableKind kind() const { return kind_; }
  const std::vector<Group>& groups() const { return groups_; }
  std::string_view alphabet() const { return code_alphabet(kind_); }

  CharClass classify(char32_t scalar) const;
  std::optional<char> code_of(char32_t scalar) const;

  // Canonical file form: one `<code> m1 m2 ...` line per group.
  std::string serialize() const;
  // crc32 of serialize(), stable across platforms.
  std::uint32_t checksum() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.kind_ == b.kind_ && a.groups_ == b.groups_;
  }

 private:
  GroupTable(TableKind kind, std::vector<Group> groups);

  TableKind kind_;
  std::vector<Group> groups_;
  std::unordered_map<char32_t, char> lookup_;
};

// The letters of the Sindhi alphabet; digraphs (e.g. U+062C U+06BE) are
// multi-scalar entries.
const std::vector<std::u32string>& sindhi_alphabet();

struct TableReport {
  std::size_t sound_groups = 0;
  std::size_t shape_groups = 0;
  std::vector<std::u32string> sound_uncovered;  // alphabet letters
  std::vector<std::u32string> shape_uncovered;
  // Scalars in one table but not the other.
  std::vector<char32_t> inventory_mismatch;
  std::vector<std::string> errors;  // load failures

  bool ok() const;
  std::string describe() const;
};

// Checks the shipped tables: 22 sound groups, full alphabet coverage, and
// the shape table partitioning the same inventory. Never throws on
// validation failure; load errors land in `errors`.
TableReport validate_ship_tables(std::string_view sound_source, std::string_view shape_source);

}  // namespace sindhi
