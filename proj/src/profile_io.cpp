#include "ncg/profile_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace ncg {

namespace {

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int parse_int(const std::string& tok, int line, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ProfileParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
}

}  // namespace

StrategyVector read_profile(std::istream& in) {
  std::string line;
  int lineno = 0;

  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (skippable(line)) continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) throw ProfileParseError(1, "empty input, expected 'ncg <n> <p/q>' header");

  std::istringstream hs(header);
  std::string magic, ntok, atok, extra;
  hs >> magic >> ntok >> atok;
  if (magic != "ncg" || ntok.empty() || atok.empty() || (hs >> extra))
    throw ProfileParseError(lineno, "header must be 'ncg <n> <p/q>'");
  int n = parse_int(ntok, lineno, "player count");
  if (n < 1) throw ProfileParseError(lineno, "player count must be at least 1");
  Rat alpha;
  try {
    alpha = parse_rational(atok);
  } catch (const std::invalid_argument& e) {
    throw ProfileParseError(lineno, std::string("bad alpha: ") + e.what());
  }
  if (alpha <= Rat(0)) throw ProfileParseError(lineno, "alpha must be positive");

  std::vector<std::vector<int>> strategies(n);
  std::vector<char> seen(n, 0);
  std::string body;
  while (next_line(body)) {
    auto colon = body.find(':');
    if (colon == std::string::npos)
      throw ProfileParseError(lineno, "expected 'u: v1 v2 ...'");
    std::string utok = body.substr(0, colon);
    // trim
    while (!utok.empty() && std::isspace(static_cast<unsigned char>(utok.back())))
      utok.pop_back();
    while (!utok.empty() && std::isspace(static_cast<unsigned char>(utok.front())))
      utok.erase(utok.begin());
    int u = parse_int(utok, lineno, "player id");
    if (u < 0 || u >= n)
      throw ProfileParseError(lineno, "player id " + std::to_string(u) +
                                          " out of range 0.." + std::to_string(n - 1));
    if (seen[u])
      throw ProfileParseError(lineno, "player " + std::to_string(u) + " listed twice");
    seen[u] = 1;
    std::istringstream vs(body.substr(colon + 1));
    std::string vtok;
    while (vs >> vtok)
      strategies[u].push_back(parse_int(vtok, lineno, "endpoint"));
  }
  for (int u = 0; u < n; ++u)
    if (!seen[u])
      throw ProfileParseError(lineno, "missing strategy line for player " +
                                          std::to_string(u));

  try {
    return StrategyVector::create(n, alpha, std::move(strategies));
  } catch (const std::invalid_argument& e) {
    throw ProfileParseError(lineno, e.what());
  }
}

StrategyVector read_profile_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_profile(f);
}

std::string write_profile(const StrategyVector& s) {
  std::ostringstream out;
  out << "ncg " << s.n << ' ' << s.alpha.numerator() << '/'
      << s.alpha.denominator() << '\n';
  for (int u = 0; u < s.n; ++u) {
    out << u << ':';
    for (int v : s.strategies[u]) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

void write_profile_file(const std::string& path, const StrategyVector& s) {
  std::ofstream f(path, std::ios::binary);  // keep LF endings everywhere
  if (!f) throw std::runtime_error("cannot open " + path);
  f << write_profile(s);
}

}  // namespace ncg
