#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ncg/game.hpp"

namespace ncg {

/// Malformed profile text; the message carries the offending line number.
struct ProfileParseError : std::runtime_error {
  ProfileParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

/// Reads a "ncg <n> <p/q>" header followed by one "u: v1 v2 ..." line per
/// player. Blank lines and lines starting with '#' are ignored.
StrategyVector read_profile(std::istream& in);
StrategyVector read_profile_file(const std::string& path);

/// Canonical text form (LF endings, alpha always "p/q"); reparses to an
/// identical StrategyVector.
std::string write_profile(const StrategyVector& s);
void write_profile_file(const std::string& path, const StrategyVector& s);

}  // namespace ncg
