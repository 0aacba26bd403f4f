#include "monoprop/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace monoprop {

MonounaryAlgebra parse_algebra(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid algebra file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("succ")) {
    throw ParseError("algebra file must be an object with a \"succ\" array");
  }
  const auto& succ_json = doc["succ"];
  if (!succ_json.is_array()) {
    throw ParseError("\"succ\" must be an array of naturals");
  }
  std::vector<Element> succ;
  succ.reserve(succ_json.size());
  for (const auto& entry : succ_json) {
    if (!entry.is_number_unsigned()) {
      throw ParseError("\"succ\" entries must be naturals");
    }
    succ.push_back(entry.get<Element>());
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    const auto& names_json = doc["names"];
    if (!names_json.is_array()) {
      throw ParseError("\"names\" must be an array of strings");
    }
    for (const auto& entry : names_json) {
      if (!entry.is_string()) {
        throw ParseError("\"names\" entries must be strings");
      }
      names.push_back(entry.get<std::string>());
    }
  }
  try {
    return MonounaryAlgebra(std::move(succ), std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

MonounaryAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read algebra file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

std::string algebra_to_json(const MonounaryAlgebra& a) {
  nlohmann::json doc;
  if (a.has_names()) doc["names"] = a.names();
  doc["succ"] = a.succ_table();
  return doc.dump();
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const MonounaryAlgebra& a) {
  std::ostringstream out;
  out << "digraph monounary {\n";
  for (Element e = 0; e < a.size(); ++e) {
    out << "  " << dot_quote(a.name(e)) << ";\n";
  }
  for (Element e = 0; e < a.size(); ++e) {
    out << "  " << dot_quote(a.name(e)) << " -> " << dot_quote(a.name(a.succ(e)))
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Partition parse_partition(const MonounaryAlgebra& a, const std::string& text) {
  std::vector<std::vector<Element>> blocks;
  std::stringstream stream(text);
  std::string block_text;
  while (std::getline(stream, block_text, '|')) {
    std::vector<Element> block;
    std::stringstream block_stream(block_text);
    std::string token;
    while (std::getline(block_stream, token, ',')) {
      token = trim(token);
      if (token.empty()) throw ParseError("empty element name in partition");
      auto e = a.element_by_name(token);
      if (!e) throw ParseError("unknown element in partition: " + token);
      block.push_back(*e);
    }
    if (block.empty()) throw ParseError("empty block in partition");
    blocks.push_back(std::move(block));
  }
  try {
    return Partition(std::move(blocks), a.size());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string partition_to_string(const MonounaryAlgebra& a, const Partition& p) {
  std::string out;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b) out += "|";
    for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
      if (i) out += ",";
      out += a.name(p.blocks()[b][i]);
    }
  }
  return out;
}

}  // namespace monoprop
