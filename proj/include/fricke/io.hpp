#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "fricke/automorphism.hpp"
#include "fricke/error.hpp"
#include "fricke/polynomial.hpp"
#include "fricke/word.hpp"

namespace fricke {

/// Automorphism definition files look like
///   {"rank": 2, "images": ["aba", "ba"], "inverse_images": ["aB", "bbA"]}
/// with lowercase letters for generators and uppercase for inverses.
/// This format is what every CLI subcommand consumes.
inline Automorphism automorphism_from_json(const nlohmann::json& j) {
  if (!j.contains("rank") || !j.contains("images") || !j.contains("inverse_images")) {
    throw parse_error("automorphism file needs rank, images, inverse_images");
  }
  const int rank = j.at("rank").get<int>();
  std::vector<Word> images, inverse_images;
  for (const auto& s : j.at("images")) {
    images.push_back(Word::parse(s.get<std::string>(), rank));
  }
  for (const auto& s : j.at("inverse_images")) {
    inverse_images.push_back(Word::parse(s.get<std::string>(), rank));
  }
  return Automorphism(rank, std::move(images), std::move(inverse_images));
}

inline Automorphism load_automorphism(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open automorphism file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
  return automorphism_from_json(j);
}

inline nlohmann::ordered_json automorphism_to_json(const Automorphism& f) {
  nlohmann::ordered_json images = nlohmann::ordered_json::array();
  nlohmann::ordered_json inverse_images = nlohmann::ordered_json::array();
  for (int i = 1; i <= f.rank(); ++i) {
    images.push_back(f.image(i).str());
    inverse_images.push_back(f.inverse_image(i).str());
  }
  return {{"rank", f.rank()}, {"images", images}, {"inverse_images", inverse_images}};
}

/// Term-list form of a polynomial, leading term first. Coefficients are
/// decimal strings since they can exceed any fixed-width integer.
inline nlohmann::ordered_json polynomial_terms_json(const Polynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  const auto& map = p.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it) {
    terms.push_back({{"exponents", it->first}, {"coefficient", it->second.get_str()}});
  }
  return terms;
}

}  // namespace fricke
