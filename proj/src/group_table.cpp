#include "sindhi/group_table.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <set>
#include <sstream>

#include "sindhi/errors.hpp"
#include "sindhi/text.hpp"

namespace sindhi {
namespace {

constexpr std::string_view kSoundAlphabet = "0123456789ABCDEFGHIJKL";
constexpr std::string_view kShapeAlphabet = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr std::size_t kSoundGroupCount = 22;

std::string describe_scalar(char32_t c) {
  char hex[16];
  std::snprintf(hex, sizeof hex, "U+%04X", static_cast<unsigned>(c));
  std::string out = hex;
  out += " '";
  append_utf8(out, c);
  out += "'";
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

std::string_view to_string(TableKind kind) { return kind == TableKind::Sound ? "sound" : "shape"; }

std::optional<TableKind> parse_table_kind(std::string_view name) {
  if (name == "sound") return TableKind::Sound;
  if (name == "shape") return TableKind::Shape;
  return std::nullopt;
}

std::string_view code_alphabet(TableKind kind) {
  return kind == TableKind::Sound ? kSoundAlphabet : kShapeAlphabet;
}

GroupTable::GroupTable(TableKind kind, std::vector<Group> groups)
    : kind_(kind), groups_(std::move(groups)) {
  for (const Group& g : groups_) {
    for (char32_t m : g.members) lookup_.emplace(m, g.code);
  }
}

namespace {

// Throws TableError on the first invariant violation. `lines` maps group
// index to source line (empty for in-memory groups).
void validate_groups(const std::vector<Group>& groups, TableKind kind,
                     const std::vector<std::size_t>& lines) {
  const std::string_view alphabet = code_alphabet(kind);
  std::unordered_map<char32_t, char> owner;
  std::set<char> codes;
  std::size_t last_position = std::string_view::npos;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const Group& g = groups[gi];
    const std::size_t line = gi < lines.size() ? lines[gi] : 0;
    const std::string code(1, g.code);
    const std::size_t position = alphabet.find(g.code);
    if (position == std::string_view::npos) {
      throw TableError(TableError::Kind::Alphabet, line,
                       "code '" + code + "' is not in the " + std::string(to_string(kind)) +
                           " alphabet " + std::string(alphabet));
    }
    if (!codes.insert(g.code).second) {
      throw TableError(TableError::Kind::DuplicateCode, line, "duplicate group code '" + code + "'");
    }
    if (last_position != std::string_view::npos && position < last_position) {
      throw TableError(TableError::Kind::Alphabet, line, "code '" + code + "' is out of alphabet order");
    }
    last_position = position;
    if (g.members.empty()) {
      throw TableError(TableError::Kind::EmptyGroup, line, "group '" + code + "' has no members");
    }
    for (char32_t m : g.members) {
      auto [it, inserted] = owner.emplace(m, g.code);
      if (!inserted) {
        throw TableError(TableError::Kind::PartitionViolation, line,
                         describe_scalar(m) + " appears in group '" + std::string(1, it->second) +
                             "' and group '" + code + "'");
      }
    }
  }
}

}  // namespace

GroupTable GroupTable::from_groups(std::vector<Group> groups, TableKind kind) {
  validate_groups(groups, kind, {});
  return GroupTable(kind, std::move(groups));
}

GroupTable GroupTable::load(std::string_view source, TableKind kind) {
  std::vector<Group> groups;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < source.size()) {
    std::size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    const std::string_view line = source.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (fields.front().size() != 1) {
      throw TableError(TableError::Kind::Syntax, line_no,
                       "group code must be a single ASCII symbol, got '" +
                           std::string(fields.front()) + "'");
    }
    Group group{fields.front().front(), {}};
    for (std::size_t i = 1; i < fields.size(); ++i) {
      std::u32string member;
      try {
        member = decode_utf8(fields[i], "table");
      } catch (const DecodeError& e) {
        throw TableError(TableError::Kind::Syntax, line_no, e.what());
      }
      if (member.size() != 1) {
        throw TableError(TableError::Kind::Syntax, line_no,
                         "member '" + std::string(fields[i]) + "' is not a single scalar");
      }
      group.members.push_back(member.front());
    }
    groups.push_back(std::move(group));
    lines.push_back(line_no);
  }
  validate_groups(groups, kind, lines);
  return GroupTable(kind, std::move(groups));
}

CharClass GroupTable::classify(char32_t scalar) const { return CharClass{scalar, code_of(scalar)}; }

std::optional<char> GroupTable::code_of(char32_t scalar) const {
  const auto it = lookup_.find(scalar);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::string GroupTable::serialize() const {
  std::string out;
  for (const Group& g : groups_) {
    out.push_back(g.code);
    for (char32_t m : g.members) {
      out.push_back(' ');
      append_utf8(out, m);
    }
    out.push_back('\n');
  }
  return out;
}

std::uint32_t GroupTable::checksum() const {
  const std::string bytes = serialize();
  const std::string_view tag = to_string(kind_);
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(tag.data()), static_cast<uInt>(tag.size()));
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  return static_cast<std::uint32_t>(crc);
}

const std::vector<std::u32string>& sindhi_alphabet() {
  static const std::vector<std::u32string> letters = {
      U"ا", U"ب", U"ٻ", U"ڀ", U"ت", U"ٿ", U"ٽ",
      U"ٺ", U"ث", U"پ", U"ج", U"ڄ", U"جھ",
      U"ڃ", U"چ", U"ڇ", U"ح", U"خ", U"د", U"ڌ",
      U"ڏ", U"ڊ", U"ڍ", U"ذ", U"ر", U"ڙ", U"ز",
      U"ژ", U"س", U"ش", U"ص", U"ض", U"ط", U"ظ",
      U"ع", U"غ", U"ف", U"ڦ", U"ق", U"ڪ", U"ک",
      U"گ", U"ڳ", U"گھ", U"ڱ", U"ل", U"م",
      U"ن", U"ڻ", U"و", U"ه", U"ي",
  };
  return letters;
}

bool TableReport::ok() const {
  return errors.empty() && sound_groups == kSoundGroupCount && sound_uncovered.empty() &&
         shape_uncovered.empty() && inventory_mismatch.empty();
}

std::string TableReport::describe() const {
  std::ostringstream out;
  for (const auto& e : errors) out << "error: " << e << '\n';
  out << "sound groups: " << sound_groups << " (expected " << kSoundGroupCount << ")\n";
  out << "shape groups: " << shape_groups << '\n';
  const auto list = [&](std::string_view label, const std::vector<std::u32string>& letters) {
    out << label << ':';
    if (letters.empty()) out << " none";
    for (const auto& l : letters) out << ' ' << encode_utf8(l);
    out << '\n';
  };
  list("sound table missing letters", sound_uncovered);
  list("shape table missing letters", shape_uncovered);
  out << "inventory mismatch:";
  if (inventory_mismatch.empty()) out << " none";
  for (char32_t c : inventory_mismatch) out << ' ' << describe_scalar(c);
  out << '\n' << (ok() ? "OK" : "FAILED") << '\n';
  return out.str();
}

TableReport validate_ship_tables(std::string_view sound_source, std::string_view shape_source) {
  TableReport report;
  std::optional<GroupTable> sound, shape;
  try {
    sound = GroupTable::load(sound_source, TableKind::Sound);
  } catch (const Error& e) {
    report.errors.push_back(std::string("sound table: ") + e.what());
  }
  try {
    shape = GroupTable::load(shape_source, TableKind::Shape);
  } catch (const Error& e) {
    report.errors.push_back(std::string("shape table: ") + e.what());
  }

  const auto uncovered = [](const GroupTable& table) {
    std::vector<std::u32string> missing;
    for (const auto& letter : sindhi_alphabet()) {
      const bool covered = std::all_of(letter.begin(), letter.end(),
                                       [&](char32_t c) { return table.code_of(c).has_value(); });
      if (!covered) missing.push_back(letter);
    }
    return missing;
  };
  const auto inventory = [](const GroupTable& table) {
    std::set<char32_t> all;
    for (const Group& g : table.groups()) all.insert(g.members.begin(), g.members.end());
    return all;
  };

  if (sound) {
    report.sound_groups = sound->groups().size();
    report.sound_uncovered = uncovered(*sound);
  }
  if (shape) {
    report.shape_groups = shape->groups().size();
    report.shape_uncovered = uncovered(*shape);
  }
  if (sound && shape) {
    const auto a = inventory(*sound);
    const auto b = inventory(*shape);
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(report.inventory_mismatch));
  }
  return report;
}

}  // namespace sindhi
