#include "lsext/code_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "lsext/errors.hpp"

namespace lsext {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool parse_uint(const std::string& tok, unsigned long long& value) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

LinearCode parse_code(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    ++line_no;  // end of input is reported on the line after the last one
    return false;
  };

  if (!next_line()) throw ParseError(line_no, "missing \"q k n\" header");
  const auto head = tokens(line);
  unsigned long long q = 0, k = 0, n = 0;
  if (head.size() != 3 || !parse_uint(head[0], q) || !parse_uint(head[1], k) ||
      !parse_uint(head[2], n)) {
    throw ParseError(line_no, "malformed header \"" + line + "\", expected \"q k n\"");
  }
  if (k == 0 || n == 0) throw ParseError(line_no, "k and n must be positive");
  if (k > n) throw ParseError(line_no, "k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (q > 255) throw ParseError(line_no, "unsupported field order q=" + std::to_string(q));
  const std::size_t header_line = line_no;
  std::optional<FieldSpec> field;
  try {
    field.emplace(static_cast<unsigned>(q));
  } catch (const EncodingError& e) {
    throw ParseError(line_no, e.what());
  }

  std::vector<KVector> rows;
  for (unsigned long long r = 0; r < k; ++r) {
    if (!next_line()) {
      throw ParseError(line_no, "expected " + std::to_string(k) + " matrix rows, found " +
                                    std::to_string(r));
    }
    const auto toks = tokens(line);
    if (toks.size() != n) {
      throw ParseError(line_no, "row has " + std::to_string(toks.size()) + " entries, expected " +
                                    std::to_string(n));
    }
    KVector row;
    row.reserve(n);
    for (const auto& tok : toks) {
      unsigned long long v = 0;
      if (!parse_uint(tok, v)) throw ParseError(line_no, "invalid symbol \"" + tok + "\"");
      if (v >= q) {
        throw ParseError(line_no, "symbol " + tok + " is not an element of GF(" +
                                      std::to_string(q) + ")");
      }
      row.push_back(Element{static_cast<std::uint8_t>(v)});
    }
    rows.push_back(std::move(row));
  }
  if (next_line()) throw ParseError(line_no, "unexpected data after the last matrix row");

  try {
    return LinearCode(GeneratorMatrix(*field, std::move(rows)));
  } catch (const RankError& e) {
    throw ParseError(header_line, e.what());
  }
}

LinearCode parse_code_string(const std::string& text) {
  std::istringstream in(text);
  return parse_code(in);
}

LinearCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path.string());
  return parse_code(in);
}

std::string serialize_code(const LinearCode& code) {
  const auto& gen = code.generator();
  std::ostringstream out;
  out << code.q() << ' ' << code.k() << ' ' << code.n() << '\n';
  for (const auto& row : gen.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << static_cast<unsigned>(row[j].code);
    }
    out << '\n';
  }
  return out.str();
}

void write_code_file(const std::filesystem::path& path, const LinearCode& code) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << serialize_code(code);
}

}  // namespace lsext
