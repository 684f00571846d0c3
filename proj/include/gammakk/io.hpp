#pragma once

// Facet files: one facet per line as whitespace-separated vertex ids, '#'
// comments, or JSON {"facets": [[...], ...]}.

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gammakk/complex.hpp"
#include "gammakk/errors.hpp"

namespace gammakk {

inline FaceList parse_facets_text(const std::string& text) {
  FaceList facets;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream tokens(line);
    std::string tok;
    Face f;
    while (tokens >> tok) {
      long long v = -1;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size() || v < 0 || v > 1'000'000'000)
        throw MalformedInput("line " + std::to_string(lineno) + ": \"" + tok +
                             "\" is not a nonnegative vertex id");
      f.push_back(static_cast<Vertex>(v));
    }
    std::vector<Vertex> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MalformedInput("line " + std::to_string(lineno) + ": facet lists a vertex twice");
    facets.push_back(std::move(f));
  }
  return facets;
}

inline FaceList parse_facets_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
    throw MalformedInput("JSON: expected an object with a \"facets\" array");
  FaceList facets;
  std::size_t idx = 0;
  for (const auto& jf : j["facets"]) {
    if (!jf.is_array()) throw MalformedInput("JSON: facet " + std::to_string(idx) + " is not an array");
    Face f;
    for (const auto& jv : jf) {
      if (!jv.is_number_integer() || jv.get<long long>() < 0 || jv.get<long long>() > 1'000'000'000)
        throw MalformedInput("JSON: facet " + std::to_string(idx) + " has a bad vertex id");
      f.push_back(jv.get<Vertex>());
    }
    facets.push_back(std::move(f));
    ++idx;
  }
  return facets;
}

/// Dispatches on the first non-blank character ('{' means JSON).
inline Complex parse_complex(const std::string& text, std::size_t budget = kDefaultFaceBudget) {
  auto first = text.find_first_not_of(" \t\r\n");
  const FaceList facets =
      first != std::string::npos && text[first] == '{' ? parse_facets_json(text) : parse_facets_text(text);
  return Complex::from_facets(facets, budget);
}

inline Complex read_complex(const std::string& path, std::size_t budget = kDefaultFaceBudget) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str(), budget);
}

inline std::string facets_text(const Complex& c) {
  std::string s;
  for (const Face& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(f[i]);
    }
    s += '\n';
  }
  return s;
}

inline nlohmann::json facets_json(const Complex& c) { return nlohmann::json{{"facets", c.facets()}}; }

}  // namespace gammakk
