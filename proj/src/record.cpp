#include "hilb/record.hpp"

#include <stdexcept>

namespace hilb {

bool valid_record_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

void Record::add(std::string_view key, std::string_view value) {
  if (!valid_record_key(key)) throw std::invalid_argument("Record: bad key: " + std::string(key));
  if (value.find('\n') != std::string_view::npos)
    throw std::invalid_argument("Record: value must be single-line");
  fields_.emplace_back(std::string(key), std::string(value));
}

void Record::add(std::string_view key, const char* value) { add(key, std::string_view(value)); }
void Record::add(std::string_view key, const Int& value) { add(key, std::string_view(value.str())); }
void Record::add(std::string_view key, long value) { add(key, std::string_view(std::to_string(value))); }
void Record::add(std::string_view key, bool value) { add(key, std::string_view(value ? "true" : "false")); }

bool Record::has(std::string_view key) const {
  for (const Field& f : fields_)
    if (f.first == key) return true;
  return false;
}

const std::string& Record::get(std::string_view key) const {
  for (const Field& f : fields_)
    if (f.first == key) return f.second;
  throw std::out_of_range("Record: missing key: " + std::string(key));
}

std::string Record::serialize() const {
  std::string out;
  for (const Field& f : fields_) {
    out += f.first;
    out += ": ";
    out += f.second;
    out += '\n';
  }
  return out;
}

Record Record::parse(std::string_view text) {
  Record rec;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      throw std::invalid_argument("Record::parse: missing trailing newline");
    std::string_view line = text.substr(pos, eol - pos);
    std::size_t sep = line.find(": ");
    if (sep == std::string_view::npos)
      throw std::invalid_argument("Record::parse: malformed line: " + std::string(line));
    std::string_view key = line.substr(0, sep);
    if (!valid_record_key(key))
      throw std::invalid_argument("Record::parse: bad key: " + std::string(key));
    rec.fields_.emplace_back(std::string(key), std::string(line.substr(sep + 2)));
    pos = eol + 1;
  }
  if (rec.fields_.empty() || rec.fields_.front().first != "schema")
    throw std::invalid_argument("Record::parse: first field must be schema");
  return rec;
}

}  // namespace hilb
