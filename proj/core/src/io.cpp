#include "sympgeo/io.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "sympgeo/errors.hpp"

namespace sympgeo {
namespace {

bool is_blank(const std::string& line) {
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r') return false;
  return true;
}

// All lines of the stream, trailing carriage returns stripped.
std::vector<std::string> read_lines(std::istream& is) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<long> parse_ints(const std::string& line, int lineno) {
  std::vector<long> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    try {
      size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(lineno) + ": not an integer: " + tok);
    }
  }
  return out;
}

felem check_code(long v, int q, int lineno) {
  if (v < 0 || v >= q)
    throw InputError("line " + std::to_string(lineno) + ": element code " +
                     std::to_string(v) + " outside [0, " + std::to_string(q) + ")");
  return felem(v);
}

}  // namespace

void print_subspace(std::ostream& os, const Subspace& s) {
  const Mat& b = s.basis();
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      if (c) os << ' ';
      os << int(b.at(r, c));
    }
    os << '\n';
  }
}

void print_plane_set(std::ostream& os, const PlaneSet& x) {
  os << x.field().q() << ' ' << x.ambient() << ' ' << x.plane_dim() << ' '
     << x.size() << '\n';
  for (const Subspace& s : x.members()) {
    os << '\n';
    print_subspace(os, s);
  }
}

void print_gram(std::ostream& os, const Mat& gram) {
  os << gram.field().q() << ' ' << gram.rows() << '\n';
  for (int r = 0; r < gram.rows(); ++r) {
    for (int c = 0; c < gram.cols(); ++c) {
      if (c) os << ' ';
      os << int(gram.at(r, c));
    }
    os << '\n';
  }
}

PlaneSet read_plane_set(std::istream& is) {
  std::vector<std::string> lines = read_lines(is);
  if (lines.empty() || is_blank(lines[0]))
    throw InputError("missing plane set header");
  std::vector<long> hdr = parse_ints(lines[0], 1);
  if (hdr.size() != 4)
    throw InputError("plane set header must be: q n k count");
  const Gf& f = field_of_order(int(hdr[0]));
  const int n = int(hdr[1]), k = int(hdr[2]);
  const long count = hdr[3];
  if (n < 1 || n > 16) throw InputError("ambient dimension out of range");
  if (k < 0 || k > n) throw InputError("plane dimension out of range");
  if (count < 0) throw InputError("negative plane count");

  // Group the remaining non-blank lines into blank-separated blocks.
  std::vector<std::vector<int>> blocks;  // line numbers per block
  bool in_block = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (is_blank(lines[i])) {
      in_block = false;
      continue;
    }
    if (!in_block) blocks.emplace_back();
    in_block = true;
    blocks.back().push_back(int(i));
  }

  std::vector<Subspace> members;
  if (k == 0) {
    if (!blocks.empty())
      throw InputError("unexpected content after a dimension-0 header");
    for (long i = 0; i < count; ++i) members.push_back(Subspace::zero(f, n));
  } else {
    if (long(blocks.size()) != count)
      throw InputError("header promises " + std::to_string(count) + " blocks, found " +
                       std::to_string(blocks.size()));
    for (const std::vector<int>& blk : blocks) {
      if (int(blk.size()) != k)
        throw InputError("line " + std::to_string(blk[0] + 1) + ": block has " +
                         std::to_string(blk.size()) + " rows, expected " +
                         std::to_string(k));
      std::vector<Vec> rows;
      for (int li : blk) {
        std::vector<long> vals = parse_ints(lines[li], li + 1);
        if (int(vals.size()) != n)
          throw InputError("line " + std::to_string(li + 1) + ": row has " +
                           std::to_string(vals.size()) + " entries, expected " +
                           std::to_string(n));
        Vec row(n);
        for (int c = 0; c < n; ++c) row[c] = check_code(vals[c], f.q(), li + 1);
        rows.push_back(std::move(row));
      }
      Subspace s = Subspace::span_vectors(f, n, rows);
      if (s.dim() != k)
        throw InputError("line " + std::to_string(blk[0] + 1) +
                         ": block rows are linearly dependent");
      members.push_back(std::move(s));
    }
  }
  return PlaneSet::make(f, n, k, std::move(members));
}

Mat read_gram(std::istream& is) {
  std::vector<std::string> lines = read_lines(is);
  size_t at = 0;
  while (at < lines.size() && is_blank(lines[at])) ++at;
  if (at == lines.size()) throw InputError("missing Gram header");
  std::vector<long> hdr = parse_ints(lines[at], int(at + 1));
  if (hdr.size() != 2) throw InputError("Gram header must be: q n");
  const Gf& f = field_of_order(int(hdr[0]));
  const int n = int(hdr[1]);
  if (n < 1 || n > 16) throw InputError("Gram dimension out of range");
  Mat m(f, n, n);
  int row = 0;
  for (++at; at < lines.size(); ++at) {
    if (is_blank(lines[at])) continue;
    if (row >= n) throw InputError("line " + std::to_string(at + 1) + ": extra Gram row");
    std::vector<long> vals = parse_ints(lines[at], int(at + 1));
    if (int(vals.size()) != n)
      throw InputError("line " + std::to_string(at + 1) + ": row has " +
                       std::to_string(vals.size()) + " entries, expected " +
                       std::to_string(n));
    for (int c = 0; c < n; ++c) m.at(row, c) = check_code(vals[c], f.q(), int(at + 1));
    ++row;
  }
  if (row != n)
    throw InputError("Gram has " + std::to_string(row) + " rows, expected " +
                     std::to_string(n));
  return m;
}

}  // namespace sympgeo
