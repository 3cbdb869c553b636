#include "twistinv/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace twistinv {

namespace {

Vec3<double> parse_vec3(const nlohmann::json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 3)
    throw ParseError(where + ": expected an array of 3 numbers");
  Vec3<double> v;
  for (int i = 0; i < 3; ++i) {
    const auto& x = node[static_cast<std::size_t>(i)];
    if (!x.is_number()) throw ParseError(where + "[" + std::to_string(i) + "]: not a number");
    v(i) = x.get<double>();
    if (!std::isfinite(v(i)))
      throw ParseError(where + "[" + std::to_string(i) + "]: not finite");
  }
  return v;
}

}  // namespace

TwistFileDocument parse_twist_document(const std::string& text, const std::string& origin) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!root.is_object()) throw ParseError(origin + ": top level must be an object");
  if (!root.contains("twists") || !root["twists"].is_array())
    throw ParseError(origin + ": missing \"twists\" array");

  TwistFileDocument doc;
  std::size_t index = 0;
  for (const auto& entry : root["twists"]) {
    const std::string where = origin + ": twists[" + std::to_string(index) + "]";
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    if (!entry.contains("omega")) throw ParseError(where + ": missing field \"omega\"");
    if (!entry.contains("v")) throw ParseError(where + ": missing field \"v\"");
    doc.twists.push_back(
        {parse_vec3(entry["omega"], where + ".omega"), parse_vec3(entry["v"], where + ".v")});
    ++index;
  }
  if (doc.twists.empty()) throw ParseError(origin + ": at least one twist is required");
  if (root.contains("metadata") && root["metadata"].is_object() &&
      root["metadata"].contains("label") && root["metadata"]["label"].is_string())
    doc.label = root["metadata"]["label"].get<std::string>();
  return doc;
}

TwistFileDocument read_twist_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_twist_document(buf.str(), path.string());
}

std::string write_twist_document(const TwistFileDocument& doc) {
  nlohmann::ordered_json root;
  root["twists"] = nlohmann::ordered_json::array();
  for (const auto& s : doc.twists) {
    nlohmann::ordered_json entry;
    entry["omega"] = {s.omega(0), s.omega(1), s.omega(2)};
    entry["v"] = {s.v(0), s.v(1), s.v(2)};
    root["twists"].push_back(entry);
  }
  if (doc.label) root["metadata"] = {{"label", *doc.label}};
  return root.dump(2) + "\n";
}

nlohmann::ordered_json signature_json(const TwistFileDocument& doc) {
  const auto sig = signature(doc.twists);
  nlohmann::ordered_json out;
  const int k = sig.k;
  auto table = [&](const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < k; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int j = 0; j < k; ++j) row.push_back(m(i, j));
      rows.push_back(row);
    }
    return rows;
  };
  out["quad_primal"] = table(sig.quad_primal);
  out["quad_dual"] = table(sig.quad_dual);
  out["cubic_primal"] = nlohmann::ordered_json::array();
  out["cubic_dual"] = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t < sig.cubic_index.size(); ++t) {
    const auto [i, j, l] = sig.cubic_index[t];
    const std::string key =
        std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(l + 1);
    out["cubic_primal"].push_back({{"ijk", key}, {"value", sig.cubic_primal[t]}});
    out["cubic_dual"].push_back({{"ijk", key}, {"value", sig.cubic_dual[t]}});
  }
  out["pitches"] = nlohmann::ordered_json::array();
  for (const auto& s : doc.twists) {
    if (s.is_zero())
      out["pitches"].push_back(nullptr);
    else if (auto p = pitch(s))
      out["pitches"].push_back(*p);
    else
      out["pitches"].push_back("inf");
  }
  if (k == 3) {
    const auto [r1, r2] = syzygy_residuals(sig);
    out["syzygy_residuals"] = {r1, r2};
  } else {
    out["syzygy_residuals"] = nullptr;
  }
  return out;
}

}  // namespace twistinv
