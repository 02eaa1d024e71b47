#include <algorithm>
#include <cctype>
#include <sstream>

#include "mpg/crossing.hpp"
#include "mpg/error.hpp"

namespace mpg {

namespace {

constexpr int kRowGap = 10;

std::string render_svg(const Mpg& g, int anchor, int crossings) {
  const int m = g.m();
  const auto pos = rotated_positions(g, anchor);
  const auto fpos = rotated_friend_positions(g, anchor);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1 -2 " << (m + 1)
     << ' ' << (kRowGap + 4) << "\">\n";
  os << "<!-- crossings: " << crossings << " -->\n";
  os << "<!-- instance: " << g.id() << " anchor: " << anchor << " -->\n";
  os << "<g stroke=\"black\" stroke-width=\"0.05\" fill=\"none\">\n";
  if (m > 1) {
    os << "<line class=\"cycle\" x1=\"0\" y1=\"0\" x2=\"" << (m - 1) << "\" y2=\"0\"/>\n";
    os << "<line class=\"cycle\" x1=\"0\" y1=\"" << kRowGap << "\" x2=\"" << (m - 1) << "\" y2=\""
       << kRowGap << "\"/>\n";
  }
  for (int v = 0; v < m; ++v) {
    const auto uv = static_cast<std::size_t>(v);
    os << "<line class=\"matching\" data-edge=\"" << v << "\" x1=\"" << pos[uv]
       << "\" y1=\"0\" x2=\"" << fpos[uv] << "\" y2=\"" << kRowGap << "\"/>\n";
  }
  os << "</g>\n<g font-size=\"0.4\" text-anchor=\"middle\">\n";
  for (int v = 0; v < m; ++v) {
    const auto uv = static_cast<std::size_t>(v);
    os << "<circle cx=\"" << pos[uv] << "\" cy=\"0\" r=\"0.15\"/>"
       << "<text x=\"" << pos[uv] << "\" y=\"-0.4\">" << v << "</text>\n";
  }
  for (int j = 0; j < m; ++j) {
    const int x = ((j - g.sigma(anchor)) % m + m) % m;
    os << "<circle cx=\"" << x << "\" cy=\"" << kRowGap << "\" r=\"0.15\"/>"
       << "<text x=\"" << x << "\" y=\"" << (kRowGap + 0.8) << "\">" << j << "'</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_dot(const Mpg& g, int anchor, int crossings) {
  const int m = g.m();
  const auto pos = rotated_positions(g, anchor);
  std::ostringstream os;
  os << "// crossings: " << crossings << '\n';
  os << "// instance: " << g.id() << " anchor: " << anchor << '\n';
  os << "graph standard_drawing {\n";
  os << "  node [shape=circle, fixedsize=true, width=0.4];\n";
  // neato coordinates: y grows upward, so A sits at y = row gap
  for (int v = 0; v < m; ++v) {
    os << "  a" << v << " [label=\"" << v << "\", pos=\"" << pos[static_cast<std::size_t>(v)]
       << ',' << kRowGap << "!\"];\n";
  }
  for (int j = 0; j < m; ++j) {
    const int x = ((j - g.sigma(anchor)) % m + m) % m;
    os << "  b" << j << " [label=\"" << j << "'\", pos=\"" << x << ",0!\"];\n";
  }
  for (int t = 0; t + 1 < m; ++t) {
    os << "  a" << (anchor + t) % m << " -- a" << (anchor + t + 1) % m << " [class=cycle];\n";
  }
  for (int t = 0; t + 1 < m; ++t) {
    const int b = g.sigma(anchor);
    os << "  b" << (b + t) % m << " -- b" << (b + t + 1) % m << " [class=cycle];\n";
  }
  for (int v = 0; v < m; ++v) {
    os << "  a" << v << " -- b" << g.sigma(v) << " [class=matching];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

DrawingFormat parse_drawing_format(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "svg") return DrawingFormat::Svg;
  if (lower == "dot") return DrawingFormat::Dot;
  throw Error(ErrorCode::UnsupportedFormat, "unsupported drawing format: " + std::string(name),
              {{"format", std::string(name)}});
}

std::string standard_drawing(const Mpg& g, int anchor, DrawingFormat format) {
  const int crossings = build_crossing_graph(g, anchor).edge_count();
  switch (format) {
    case DrawingFormat::Svg: return render_svg(g, anchor, crossings);
    case DrawingFormat::Dot: return render_dot(g, anchor, crossings);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unsupported drawing format");
}

}  // namespace mpg
