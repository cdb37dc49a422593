#include "emit.hpp"

#include "prelie/errors.hpp"
#include "prelie/json.hpp"

#include <algorithm>

namespace prelie::cli {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw ParseError("unknown format '" + std::string(text) + "' (text, json or csv)");
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string plain(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array() && std::all_of(value.begin(), value.end(),
                                      [](const json& v) { return !v.is_structured(); })) {
    std::string out;
    for (const auto& v : value) {
      if (!out.empty()) out += ' ';
      out += plain(v);
    }
    return out;
  }
  return value.dump();
}

}  // namespace

void Emitter::trees(std::string_view kind, std::size_t degree, const std::vector<PlanarTree>& trees) {
  switch (format_) {
    case Format::Text:
      for (const auto& t : trees) out_ << t.serialize() << '\n';
      out_ << "count " << trees.size() << '\n';
      break;
    case Format::Csv:
      out_ << "index,tree\n";
      for (std::size_t i = 0; i < trees.size(); ++i) out_ << i << ',' << trees[i].serialize() << '\n';
      break;
    case Format::Json: {
      json list = json::array();
      for (const auto& t : trees) list.push_back(to_json(t));
      out_ << json{{"kind", kind}, {"degree", degree}, {"count", trees.size()}, {"trees", list}}.dump(2)
           << '\n';
      break;
    }
  }
}

void Emitter::binary_trees(std::size_t degree, const std::vector<BinaryTree>& trees) {
  switch (format_) {
    case Format::Text:
      for (const auto& t : trees) out_ << t.serialize() << '\n';
      out_ << "count " << trees.size() << '\n';
      break;
    case Format::Csv:
      out_ << "index,tree\n";
      for (std::size_t i = 0; i < trees.size(); ++i) {
        out_ << i << ',' << csv_field(trees[i].serialize()) << '\n';
      }
      break;
    case Format::Json: {
      json list = json::array();
      for (const auto& t : trees) list.push_back(t.serialize());
      out_ << json{{"kind", "binary"}, {"degree", degree}, {"count", trees.size()}, {"trees", list}}
                  .dump(2)
           << '\n';
      break;
    }
  }
}

void Emitter::sum(const TreeSum& sum) {
  switch (format_) {
    case Format::Text:
      out_ << sum.to_text() << '\n';
      break;
    case Format::Csv:
      out_ << "coeff,tree\n";
      for (const auto& [tree, coeff] : sum.terms()) out_ << to_string(coeff) << ',' << tree.serialize() << '\n';
      break;
    case Format::Json:
      out_ << to_json(sum).dump(2) << '\n';
      break;
  }
}

void Emitter::matrix(const CoeffMatrix& m) {
  switch (format_) {
    case Format::Text:
      out_ << m.to_text();
      break;
    case Format::Csv:
      out_ << m.to_csv();
      break;
    case Format::Json:
      out_ << to_json(m).dump(2) << '\n';
      break;
  }
}

void Emitter::record(const Record& record) {
  switch (format_) {
    case Format::Text:
      for (const auto& [key, value] : record) out_ << key << ": " << plain(value) << '\n';
      break;
    case Format::Csv:
      out_ << "key,value\n";
      for (const auto& [key, value] : record) out_ << csv_field(key) << ',' << csv_field(plain(value)) << '\n';
      break;
    case Format::Json: {
      // nlohmann::json sorts object keys; keep the record order instead.
      out_ << "{";
      for (std::size_t i = 0; i < record.size(); ++i) {
        out_ << (i == 0 ? "\n  " : ",\n  ") << json(record[i].first).dump() << ": "
             << record[i].second.dump();
      }
      out_ << (record.empty() ? "}" : "\n}") << '\n';
      break;
    }
  }
}

void Emitter::report(const Report& report) {
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed ? 1 : 0;
  switch (format_) {
    case Format::Text:
      for (const auto& c : report.checks) {
        out_ << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out_ << ": " << c.detail;
        out_ << '\n';
      }
      out_ << report.suite << ": " << passed << '/' << report.checks.size() << " checks passed\n";
      break;
    case Format::Csv:
      out_ << "name,status,detail\n";
      for (const auto& c : report.checks) {
        out_ << csv_field(c.name) << ',' << (c.passed ? "pass" : "fail") << ',' << csv_field(c.detail)
             << '\n';
      }
      break;
    case Format::Json: {
      json checks = json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
      }
      out_ << json{{"suite", report.suite}, {"checks", checks}}.dump(2) << '\n';
      break;
    }
  }
}

void Emitter::text_block(std::string_view key, const std::string& text) {
  if (format_ == Format::Json) {
    out_ << json{{key, text}}.dump(2) << '\n';
  } else {
    out_ << text;
  }
}

}  // namespace prelie::cli
