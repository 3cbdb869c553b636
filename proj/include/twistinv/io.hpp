#pragma once

/// Twist file documents: JSON files with an ordered list of
/// {"omega": [x,y,z], "v": [x,y,z]} records and optional metadata.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistinv/invariants.hpp"
#include "twistinv/screw.hpp"

namespace twistinv {

struct TwistFileDocument {
  std::vector<Twist<double>> twists;
  std::optional<std::string> label;
};

/// Malformed input of any kind (bad JSON, wrong shapes, non-finite numbers).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TwistFileDocument parse_twist_document(const std::string& text, const std::string& origin);
TwistFileDocument read_twist_file(const std::filesystem::path& path);
std::string write_twist_document(const TwistFileDocument& doc);

/// Stable JSON rendering of a signature: keys quad_primal, quad_dual,
/// cubic_primal, cubic_dual, pitches, syzygy_residuals (null unless k = 3).
/// Infinite pitch serializes as the string "inf"; the pitch of a zero twist
/// as null.
nlohmann::ordered_json signature_json(const TwistFileDocument& doc);

}  // namespace twistinv
