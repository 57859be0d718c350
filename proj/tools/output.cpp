#include "output.hpp"

#include <json.hpp>

namespace cli {

Cell exact(const polya::BigInt& v) { return {Cell::Type::exact, v.get_str()}; }
Cell exact(const polya::BigRational& v) { return {Cell::Type::exact, v.str()}; }
Cell exact(long v) { return {Cell::Type::exact, std::to_string(v)}; }

Cell real(const polya::Real& v, int bits) {
  return {Cell::Type::real, v.sci(std::max(1, bits / 3))};
}

Cell text(std::string s) { return {Cell::Type::text, std::move(s)}; }
Cell flag(bool b) { return {Cell::Type::boolean, b ? "true" : "false"}; }
Cell empty() { return {}; }

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

nlohmann::ordered_json to_json(const Cell& c, int bits) {
  switch (c.type) {
    case Cell::Type::exact:
    case Cell::Type::text:
      return c.text;
    case Cell::Type::real:
      return nlohmann::ordered_json{{"value", c.text}, {"bits", bits}};
    case Cell::Type::boolean:
      return c.text == "true";
    case Cell::Type::empty:
      return nullptr;
  }
  return nullptr;
}

}  // namespace

void write_table(const Table& t, Format f, int bits, std::ostream& out, std::ostream& diag) {
  if (f == Format::csv) {
    for (size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const Row& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(r[i].text);
      out << '\n';
    }
    for (const auto& [k, v] : t.summary) diag << k << '=' << v.text << '\n';
    return;
  }
  nlohmann::ordered_json doc;
  doc["command"] = t.command;
  doc["bits"] = bits;
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const Row& r : t.rows) {
    nlohmann::ordered_json o;
    for (size_t i = 0; i < r.size() && i < t.columns.size(); ++i) o[t.columns[i]] = to_json(r[i], bits);
    rows.push_back(std::move(o));
  }
  doc["rows"] = std::move(rows);
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.summary) s[k] = to_json(v, bits);
  doc["summary"] = std::move(s);
  out << doc.dump(2) << '\n';
}

}  // namespace cli
