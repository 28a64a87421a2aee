#include "permdesign/permset_io.hpp"

#include "permdesign/errors.hpp"

#include <cctype>
#include <fstream>
#include <set>

namespace permdesign {

namespace {

std::string trim(const std::string& line) {
  std::size_t begin = 0;
  std::size_t end = line.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(line[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1])))
    --end;
  return line.substr(begin, end - begin);
}

struct ContentLine {
  std::string text;
  int number = 0;
};

std::vector<ContentLine> content_lines(std::istream& in) {
  std::vector<ContentLine> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string text = trim(line);
    if (text.empty() || text[0] == '#')
      continue;
    out.push_back({std::move(text), number});
  }
  return out;
}

int parse_header(const std::vector<ContentLine>& lines,
                 const std::string& origin) {
  if (lines.empty())
    throw error(origin + ": empty file, expected an n=<degree> header");
  const auto& header = lines.front();
  if (header.text.rfind("n=", 0) != 0)
    throw error(origin + ":" + std::to_string(header.number) +
                ": expected n=<degree> header, got '" + header.text + "'");
  const std::string value = header.text.substr(2);
  for (char ch : value)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw error(origin + ":" + std::to_string(header.number) +
                  ": malformed degree '" + value + "'");
  if (value.empty() || value.size() > 6)
    throw error(origin + ":" + std::to_string(header.number) +
                ": malformed degree '" + value + "'");
  int n = std::stoi(value);
  if (n < 1)
    throw error(origin + ":" + std::to_string(header.number) +
                ": degree must be at least 1");
  return n;
}

} // namespace

PermSet parse_permset(std::istream& in, const std::string& origin) {
  std::vector<ContentLine> lines = content_lines(in);
  int n = parse_header(lines, origin);
  if (lines.size() < 2)
    throw error(origin + ": nonempty permutation set required");
  std::vector<Permutation> elements;
  elements.reserve(lines.size() - 1);
  std::set<Permutation> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      elements.push_back(parse_one_line(lines[i].text, n));
    } catch (const error& e) {
      throw error(origin + ":" + std::to_string(lines[i].number) + ": " +
                  e.what());
    }
    if (!seen.insert(elements.back()).second)
      throw error(origin + ":" + std::to_string(lines[i].number) +
                  ": duplicate permutation '" + lines[i].text + "'");
  }
  return PermSet(n, std::move(elements));
}

PermSet load_permset(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw error("cannot read '" + path + "'");
  return parse_permset(in, path);
}

std::string format_permset(const PermSet& set) {
  std::string out = "n=" + std::to_string(set.degree()) + "\n";
  for (const auto& sigma : set.elements())
    out += format_one_line(sigma) + "\n";
  return out;
}

void store_permset(const PermSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw error("cannot write '" + path + "'");
  out << format_permset(set);
  if (!out)
    throw error("failed writing '" + path + "'");
}

std::vector<std::vector<int>> parse_latin_square(std::istream& in,
                                                 const std::string& origin) {
  std::vector<ContentLine> lines = content_lines(in);
  int n = parse_header(lines, origin);
  if (static_cast<int>(lines.size()) - 1 != n)
    throw error(origin + ": expected " + std::to_string(n) + " rows, got " +
                std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      // rows share the one-line entry syntax, reuse the tokenizer
      rows.push_back(parse_one_line(lines[i].text, n).images());
    } catch (const error& e) {
      throw error(origin + ":" + std::to_string(lines[i].number) + ": " +
                  e.what());
    }
  }
  return rows;
}

std::vector<std::vector<int>> load_latin_square(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw error("cannot read '" + path + "'");
  return parse_latin_square(in, path);
}

std::string format_latin_square(const std::vector<std::vector<int>>& rows) {
  std::string out = "n=" + std::to_string(rows.size()) + "\n";
  for (const auto& row : rows) {
    std::string line;
    for (int value : row) {
      if (!line.empty())
        line += ' ';
      line += std::to_string(value);
    }
    out += line + "\n";
  }
  return out;
}

void store_latin_square(const std::vector<std::vector<int>>& rows,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw error("cannot write '" + path + "'");
  out << format_latin_square(rows);
  if (!out)
    throw error("failed writing '" + path + "'");
}

} // namespace permdesign
