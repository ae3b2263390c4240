#include <algorithm>
#include <sstream>

#include "phinewton/polygon.hpp"

namespace phinewton {

namespace {

constexpr long kCellWidth = 4;
constexpr long kSvgScale = 40;
constexpr long kSvgMargin = 40;

bool is_vertex(const NewtonPolygon& np, const PolygonPoint& pt) {
  if (np.edges.empty()) return true;
  if (pt == np.edges.front().start) return true;
  return std::any_of(np.edges.begin(), np.edges.end(), [&](const PolygonEdge& e) { return e.end == pt; });
}

long max_y(const NewtonPolygon& np) {
  long m = 0;
  for (const auto& pt : np.points) m = std::max(m, pt.y);
  return m;
}

std::string render_ascii(const NewtonPolygon& np) {
  std::ostringstream out;
  const long top = max_y(np);
  const long label_width = static_cast<long>(std::to_string(top).size());
  const long width = (np.length + 1) * kCellWidth;

  out << "phi-Newton polygon  p=" << np.p << "  phi=" << np.phi.to_string() << "\n";
  for (long y = top; y >= 0; --y) {
    std::string row(static_cast<std::size_t>(width), ' ');
    for (const auto& pt : np.points) {
      if (pt.y != y) continue;
      row[static_cast<std::size_t>(pt.x * kCellWidth)] = is_vertex(np, pt) ? 'o' : '*';
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    std::string label = std::to_string(y);
    out << std::string(static_cast<std::size_t>(label_width) - label.size(), ' ') << label << " |" << row << "\n";
  }
  out << std::string(static_cast<std::size_t>(label_width), ' ') << " +";
  for (long x = 0; x <= np.length; ++x) out << std::string(kCellWidth, '-');
  out << "\n" << std::string(static_cast<std::size_t>(label_width) + 2, ' ');
  for (long x = 0; x <= np.length; ++x) {
    std::string label = std::to_string(x);
    label.resize(kCellWidth, ' ');
    out << label;
  }
  out << "\nedges:\n";
  for (const auto& e : np.edges) {
    out << "  (" << e.start.x << "," << e.start.y << ") -> (" << e.end.x << "," << e.end.y << ")  slope="
        << e.slope.to_string() << "  hlen=" << e.hlen << "\n";
  }
  return out.str();
}

std::string render_svg(const NewtonPolygon& np) {
  const long width = 2 * kSvgMargin + std::max(np.length, 1L) * kSvgScale;
  const long height = 2 * kSvgMargin + std::max(max_y(np), 1L) * kSvgScale;
  auto sx = [&](long x) { return kSvgMargin + x * kSvgScale; };
  auto sy = [&](long y) { return height - kSvgMargin - y * kSvgScale; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  if (!np.edges.empty()) {
    out << sx(np.edges.front().start.x) << "," << sy(np.edges.front().start.y);
    for (const auto& e : np.edges) out << " " << sx(e.end.x) << "," << sy(e.end.y);
  } else if (!np.points.empty()) {
    out << sx(np.points.front().x) << "," << sy(np.points.front().y);
  }
  out << "\"/>\n";
  for (const auto& pt : np.points) {
    out << "  <circle cx=\"" << sx(pt.x) << "\" cy=\"" << sy(pt.y) << "\" r=\"4\" fill=\""
        << (is_vertex(np, pt) ? "white" : "black") << "\" stroke=\"black\"/>\n";
  }
  for (const auto& e : np.edges) {
    out << "  <text x=\"" << (sx(e.start.x) + sx(e.end.x)) / 2 << "\" y=\"" << (sy(e.start.y) + sy(e.end.y)) / 2 - 8
        << "\" font-size=\"12\" text-anchor=\"middle\">slope=" << e.slope.to_string() << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const NewtonPolygon& np, RenderFormat format) {
  return format == RenderFormat::svg ? render_svg(np) : render_ascii(np);
}

}  // namespace phinewton
