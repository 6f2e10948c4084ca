#include "resobdd/pla.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "resobdd/types.hpp"

namespace resobdd {
namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(const std::vector<std::string>& tok, std::size_t line) {
  if (tok.size() != 2) throw ParseError(line, tok[0] + " expects one integer");
  std::size_t v = 0;
  const std::string& t = tok[1];
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size()) {
    throw ParseError(line, tok[0] + ": not an integer: " + t);
  }
  return v;
}

}  // namespace

std::vector<std::string> PlaFile::on_set(std::size_t output) const {
  std::vector<std::string> out;
  for (const auto& c : cubes) {
    if (c.outputs.at(output) == '1') out.push_back(c.inputs);
  }
  return out;
}

std::vector<std::string> PlaFile::dc_set(std::size_t output) const {
  std::vector<std::string> out;
  for (const auto& c : cubes) {
    char ch = c.outputs.at(output);
    if (ch == '-' || ch == '~') out.push_back(c.inputs);
  }
  return out;
}

PlaFile parse_pla(std::string_view text) {
  PlaFile pla;
  bool have_i = false;
  bool have_o = false;
  std::size_t line_no = 0;
  std::size_t p_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::vector<std::string> tok = split_ws(raw);
    if (tok.empty()) continue;

    if (tok[0][0] == '.') {
      const std::string& d = tok[0];
      if (d == ".e" || d == ".end") break;
      if (d == ".i") {
        pla.num_inputs = static_cast<std::uint32_t>(parse_count(tok, line_no));
        have_i = true;
      } else if (d == ".o") {
        pla.num_outputs = static_cast<std::uint32_t>(parse_count(tok, line_no));
        have_o = true;
      } else if (d == ".p") {
        pla.declared_cubes = parse_count(tok, line_no);
        p_line = line_no;
      } else if (d == ".ilb") {
        pla.input_labels.assign(tok.begin() + 1, tok.end());
      } else if (d == ".ob") {
        pla.output_labels.assign(tok.begin() + 1, tok.end());
      } else {
        pla.warnings.push_back("line " + std::to_string(line_no) + ": ignored directive " + d);
      }
      continue;
    }

    if (!have_i || !have_o) throw ParseError(line_no, "cube before .i and .o");
    std::string joined;
    for (const auto& t : tok) joined += t;
    joined.erase(std::remove(joined.begin(), joined.end(), '|'), joined.end());
    if (joined.size() != std::size_t{pla.num_inputs} + pla.num_outputs) {
      throw ParseError(line_no, "cube width " + std::to_string(joined.size()) + ", expected " +
                                    std::to_string(pla.num_inputs + pla.num_outputs));
    }
    PlaCube cube;
    cube.line = line_no;
    cube.inputs = joined.substr(0, pla.num_inputs);
    cube.outputs = joined.substr(pla.num_inputs);
    for (char& c : cube.inputs) {
      if (c == '2') c = '-';
      if (c != '0' && c != '1' && c != '-') {
        throw ParseError(line_no, std::string("bad input character '") + c + "'");
      }
    }
    for (char c : cube.outputs) {
      if (c != '0' && c != '1' && c != '-' && c != '~') {
        throw ParseError(line_no, std::string("bad output character '") + c + "'");
      }
    }
    pla.cubes.push_back(std::move(cube));
  }

  if (!have_i) throw ParseError(line_no, "missing .i");
  if (!have_o) throw ParseError(line_no, "missing .o");
  if (pla.declared_cubes && *pla.declared_cubes != pla.cubes.size()) {
    throw ParseError(p_line, ".p declares " + std::to_string(*pla.declared_cubes) +
                                 " cubes, found " + std::to_string(pla.cubes.size()));
  }
  return pla;
}

PlaFile load_pla(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pla(ss.str());
}

}  // namespace resobdd
