#include "pedalgeom/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "pedalgeom/io.hpp"

namespace pedalgeom::svg {
namespace {

using io::format_number;

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(Point p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  bool empty() const { return !(min_x <= max_x); }
  double span() const { return std::max({max_x - min_x, max_y - min_y, 1e-9}); }
};

std::string coords(Point p) { return format_number(p.x) + "," + format_number(-p.y); }

std::string style_attrs(const Canvas::Style& s, double unit) {
  std::ostringstream out;
  out << "stroke=\"" << s.stroke << "\" fill=\"" << s.fill << "\" stroke-width=\""
      << format_number(s.width * unit) << "\"";
  if (s.dashed) out << " stroke-dasharray=\"" << format_number(4 * unit) << "," << format_number(3 * unit) << "\"";
  return out.str();
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Canvas& Canvas::layer(const std::string& id) {
  auto it = std::find_if(layers_.begin(), layers_.end(), [&](const Layer& l) { return l.id == id; });
  if (it == layers_.end()) {
    layers_.push_back({id, {}});
    active_ = layers_.size() - 1;
  } else {
    active_ = static_cast<std::size_t>(it - layers_.begin());
  }
  return *this;
}

Canvas::Layer& Canvas::current() {
  if (layers_.empty()) layer("default");
  return layers_[active_];
}

Canvas& Canvas::polygon(const Polygon& p, const Style& style) {
  current().items.push_back({Kind::Polygon, {p.begin(), p.end()}, {}, style, {}});
  return *this;
}

Canvas& Canvas::segment(Point a, Point b, const Style& style) {
  current().items.push_back({Kind::Segment, {a, b}, {}, style, {}});
  return *this;
}

Canvas& Canvas::line(const DirectedLine& l, const Style& style) {
  current().items.push_back({Kind::Line, {l.base()}, l.dir(), style, {}});
  return *this;
}

Canvas& Canvas::point(Point p, const Style& style, const std::string& label) {
  current().items.push_back({Kind::Point, {p}, {}, style, label});
  return *this;
}

std::vector<std::string> Canvas::layer_ids() const {
  std::vector<std::string> ids;
  for (const auto& l : layers_) ids.push_back(l.id);
  return ids;
}

std::string Canvas::render() const {
  Box box;
  for (const auto& l : layers_) {
    for (const auto& item : l.items) {
      for (const Point& p : item.pts) box.add(p);
    }
  }
  if (box.empty()) box.add({0.0, 0.0});
  const double pad = 0.1 * box.span();
  const double min_x = box.min_x - pad;
  const double max_x = box.max_x + pad;
  const double min_y = box.min_y - pad;
  const double max_y = box.max_y + pad;
  const double reach = 2.0 * std::max(max_x - min_x, max_y - min_y);
  // One nominal pixel when the view is drawn 600 units wide.
  const double unit = std::max(max_x - min_x, max_y - min_y) / 600.0;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\""
      << format_number(min_x) << " " << format_number(-max_y) << " " << format_number(max_x - min_x)
      << " " << format_number(max_y - min_y) << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  for (const auto& l : layers_) {
    out << "  <g id=\"" << escape(l.id) << "\">\n";
    for (const auto& item : l.items) {
      const std::string attrs = style_attrs(item.style, unit);
      switch (item.kind) {
        case Kind::Polygon: {
          out << "    <polygon points=\"";
          for (std::size_t i = 0; i < item.pts.size(); ++i) {
            out << (i ? " " : "") << coords(item.pts[i]);
          }
          out << "\" " << attrs << "/>\n";
          break;
        }
        case Kind::Segment:
        case Kind::Line: {
          Point a = item.pts[0];
          Point b = item.kind == Kind::Segment ? item.pts[1] : item.pts[0];
          if (item.kind == Kind::Line) {
            a = item.pts[0] - item.dir * reach;
            b = item.pts[0] + item.dir * reach;
          }
          out << "    <line x1=\"" << format_number(a.x) << "\" y1=\"" << format_number(-a.y)
              << "\" x2=\"" << format_number(b.x) << "\" y2=\"" << format_number(-b.y) << "\" "
              << attrs << "/>\n";
          break;
        }
        case Kind::Point: {
          const Point p = item.pts[0];
          out << "    <circle cx=\"" << format_number(p.x) << "\" cy=\"" << format_number(-p.y)
              << "\" r=\"" << format_number(3.0 * unit) << "\" " << attrs << "/>\n";
          if (!item.label.empty()) {
            out << "    <text x=\"" << format_number(p.x + 4.0 * unit) << "\" y=\""
                << format_number(-p.y - 4.0 * unit) << "\" font-size=\"" << format_number(12.0 * unit)
                << "\">" << escape(item.label) << "</text>\n";
          }
          break;
        }
      }
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pedalgeom::svg
