#ifndef HILB_RECORD_HPP
#define HILB_RECORD_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hilb/bigint.hpp"

namespace hilb {

/// Ordered key/value document, the output format shared by envelopes,
/// certificates, and oracle reports.
///
/// Serialized form: one field per line, "key: value\n", in insertion order,
/// with no blank lines or comments. Keys match [a-z0-9_.-]+; values are
/// single-line UTF-8. The first field is always "schema". Parsing followed
/// by serialization reproduces the input byte for byte.
class Record {
 public:
  using Field = std::pair<std::string, std::string>;

  void add(std::string_view key, std::string_view value);
  void add(std::string_view key, const char* value);
  void add(std::string_view key, const Int& value);
  void add(std::string_view key, long value);
  void add(std::string_view key, bool value);

  const std::vector<Field>& fields() const { return fields_; }
  bool has(std::string_view key) const;
  /// First value under key; throws if absent.
  const std::string& get(std::string_view key) const;

  std::string serialize() const;
  static Record parse(std::string_view text);

 private:
  std::vector<Field> fields_;
};

bool valid_record_key(std::string_view key);

}  // namespace hilb

#endif
