#ifndef MULTIDEG_IO_HPP
#define MULTIDEG_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include "multideg/bifiltered.hpp"
#include "multideg/opparse.hpp"

namespace multideg {

/// Presentation text format, one directive per line ('#' comments):
///   ring <nx> <nt> <rank>
///   nshifts <rank integers>      (optional, default zero)
///   mshifts <rank integers>      (optional, default zero)
///   gen <operator> [| <operator> ...]   (rank components)
inline BifilteredPresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_ring = false;
  BifilteredPresentation M;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("presentation: " + msg, lineno, 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "ring") {
      int nx, nt, rank;
      if (!(ls >> nx >> nt >> rank) || nx < 0 || nt < 0 || rank < 1)
        fail("ring directive needs <nx> <nt> <rank>");
      M = make_presentation(nx, nt, rank);
      have_ring = true;
    } else if (key == "nshifts" || key == "mshifts") {
      if (!have_ring) fail("'" + key + "' before 'ring'");
      std::vector<long>& dst =
          key == "nshifts" ? M.shifts.n_shifts : M.shifts.m_shifts;
      for (int i = 0; i < M.rank; ++i)
        if (!(ls >> dst[i])) fail("'" + key + "' needs " +
                                  std::to_string(M.rank) + " integers");
    } else if (key == "gen") {
      if (!have_ring) fail("'gen' before 'ring'");
      std::string rest;
      std::getline(ls, rest);
      std::vector<std::string> parts;
      size_t start = 0;
      while (true) {
        size_t bar = rest.find('|', start);
        parts.push_back(rest.substr(start, bar - start));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      if (static_cast<int>(parts.size()) != M.rank)
        fail("generator needs " + std::to_string(M.rank) + " component(s)");
      WElt v(M.D->ring, M.rank);
      for (int i = 0; i < M.rank; ++i) {
        bool blank = parts[i].find_first_not_of(" \t") == std::string::npos;
        if (!blank) v[i] = parse_operator(*M.D, parts[i]);
      }
      M.gens.push_back(std::move(v));
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!have_ring) fail("missing 'ring' directive");
  return M;
}

}  // namespace multideg

#endif
