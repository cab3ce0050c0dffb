#include <cubedist/io.hpp>

#include <cmath>
#include <sstream>

namespace cubedist {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Yields (line number, trimmed content) for meaningful lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& content) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      content = trim(raw);
      if (content.empty() || content.front() == '#') continue;
      return true;
    }
    ++line_;
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

// Reads exactly the integers on a line; rejects trailing garbage.
std::vector<long long> integers(const std::string& content, std::size_t line, std::size_t expected) {
  std::istringstream ss(content);
  std::vector<long long> out;
  long long v = 0;
  while (ss >> v) out.push_back(v);
  if (!ss.eof() || out.size() != expected) {
    throw ParseError(line, "expected " + std::to_string(expected) + " integer(s), got '" + content + "'");
  }
  return out;
}

}  // namespace

PointSet parse_point_set(std::istream& in) {
  LineReader reader(in);
  std::string content;
  if (!reader.next(content)) throw ParseError(reader.line(), "missing header 'n k'");
  const auto header = integers(content, reader.line(), 2);
  const long long n = header[0];
  const long long k = header[1];
  if (n < kMinDimension || n > kMaxDimension) throw ParseError(reader.line(), "dimension must be in [2, 64]");
  if (k < 2) throw ParseError(reader.line(), "a point set needs at least two points");

  std::vector<HammingPoint> points;
  while (reader.next(content)) {
    if (static_cast<long long>(points.size()) == k) throw ParseError(reader.line(), "more points than the header declares");
    if (static_cast<long long>(content.size()) != n) {
      throw ParseError(reader.line(), "point has length " + std::to_string(content.size()) + ", expected " +
                                          std::to_string(n));
    }
    if (content.find_first_not_of("01") != std::string::npos) {
      throw ParseError(reader.line(), "coordinates must be '0' or '1'");
    }
    points.push_back(HammingPoint::parse(content));
  }
  if (static_cast<long long>(points.size()) != k) {
    throw ParseError(reader.line(), "expected " + std::to_string(k) + " points, found " + std::to_string(points.size()));
  }
  return PointSet(std::move(points));
}

std::string format_point_set(const PointSet& s) {
  std::string out = std::to_string(s.dimension()) + " " + std::to_string(s.size()) + "\n";
  for (const auto& p : s.points()) out += p.to_string() + "\n";
  return out;
}

UnweightedTree parse_tree(std::istream& in) {
  LineReader reader(in);
  std::string content;
  if (!reader.next(content)) throw ParseError(reader.line(), "missing vertex count");
  const long long k = integers(content, reader.line(), 1)[0];
  if (k < 2) throw ParseError(reader.line(), "a tree needs at least two vertices");

  std::vector<Edge> edges;
  while (reader.next(content)) {
    const auto e = integers(content, reader.line(), 2);
    if (e[0] < 0 || e[1] < 0 || e[0] >= k || e[1] >= k) throw ParseError(reader.line(), "vertex out of range");
    edges.emplace_back(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]));
  }
  return UnweightedTree(static_cast<std::size_t>(k), std::move(edges));
}

Json rational_json(const Rational& q) { return to_string(q); }

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>()));
    rows.push_back(std::move(r));
  }
  return RationalMatrix::from_rows(rows);
}

namespace {

Json optional_rational(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const DetReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["det_D"] = to_string(r.det_D);
  j["det_G"] = to_string(r.det_G);
  j["vol_sq"] = to_string(r.vol_sq);
  j["gram_quad"] = optional_rational(r.gram_quad);
  j["dinv_ones"] = optional_rational(r.dinv_ones);
  j["affinely_independent"] = r.affinely_independent;
  return j;
}

Json to_json(const NegTypeReport& r) {
  Json j;
  j["wp"] = std::isfinite(r.wp) ? Json(r.wp) : Json("inf");
  j["root_kind"] = to_string(r.root_kind);
  j["bracket"] = Json::array({finite_or_null(r.p_lo), finite_or_null(r.p_hi)});
  j["residual"] = r.residual;
  j["cap"] = r.cap;
  j["exact"] = r.exact;
  return j;
}

Json tree_report_json(const UnweightedTree& t) {
  const RationalMatrix d = tree_distance_matrix(t);
  const RationalMatrix d_star = graham_lovasz_inverse(t);
  Json j;
  j["vertex_count"] = t.vertex_count();
  j["n"] = t.edge_count();
  j["det"] = to_string(det(d));
  j["det_formula"] = to_string(graham_pollak_det(t));
  j["dinv_ones"] = to_string(tree_dinv_ones(t));
  j["inverse_matches"] = d * d_star == RationalMatrix::identity(t.vertex_count());
  j["d_star"] = matrix_json(d_star);
  j["embedding"] = embed_tree(t).to_strings();
  return j;
}

}  // namespace cubedist
